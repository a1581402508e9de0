"""
Field data model: grids, sampled fields, zero extension, on-disk format
"""

from .grids import SpaceGrid, TimeGrid
from .field import Field, SpaceSlice, make_field, sample_extended
from .field_io import read_field, write_field

__all__ = [
    'SpaceGrid', 'TimeGrid', 'Field', 'SpaceSlice',
    'make_field', 'sample_extended', 'read_field', 'write_field',
]
