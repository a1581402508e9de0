"""
Field files - JSON manifest plus a raw little-endian float64 payload

Manifest:
    {"name": ..., "space": {"ndim", "shape", "spacing", "origin"},
     "time": {"t0", "dt", "n"}, "data": "<path relative to the manifest>"}
Payload: space-major/time-minor float64, no header.
"""

import json
import logging
from pathlib import Path
from typing import Optional, Union

import numpy as np

from core.errors import FieldError, FieldFormatError, GridError
from utils.atomic_files import atomic_write_bytes, atomic_write_text
from .field import Field
from .grids import SpaceGrid, TimeGrid

logger = logging.getLogger(__name__)

PAYLOAD_DTYPE = np.dtype("<f8")
REQUIRED_KEYS = ("name", "space", "time", "data")


def read_field(manifest_path: Union[str, Path]) -> Field:
    """Load a field written by write_field (or any producer of the same format)."""
    manifest_path = Path(manifest_path)
    if not manifest_path.exists():
        raise FileNotFoundError(f"Field manifest not found: {manifest_path}")

    try:
        manifest = json.loads(manifest_path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise FieldFormatError(f"{manifest_path} is not valid JSON: {e}") from e
    if not isinstance(manifest, dict):
        raise FieldFormatError(f"{manifest_path} must hold a JSON object")

    missing = [k for k in REQUIRED_KEYS if k not in manifest]
    if missing:
        raise FieldFormatError(f"{manifest_path} is missing keys: {', '.join(missing)}")

    try:
        space = SpaceGrid.from_dict(manifest["space"])
        time = TimeGrid.from_dict(manifest["time"]).require_interval()
    except GridError as e:
        raise FieldFormatError(f"{manifest_path}: {e}") from e

    data_path = manifest_path.parent / str(manifest["data"])
    if not data_path.exists():
        raise FileNotFoundError(f"Field payload not found: {data_path}")
    values = np.fromfile(data_path, dtype=PAYLOAD_DTYPE)

    expected = space.size * time.n
    if values.size != expected:
        raise FieldFormatError(
            f"{data_path} holds {values.size} values, grid product is {expected} "
            f"({space.size} spatial x {time.n} time)"
        )
    if not np.all(np.isfinite(values)):
        first = int(np.flatnonzero(~np.isfinite(values))[0])
        raise FieldFormatError(f"{data_path} has non-finite value {values[first]} at offset {first}")

    try:
        field = Field(space, time, values.astype(np.float64), str(manifest["name"]))
    except FieldError as e:
        raise FieldFormatError(f"{manifest_path}: {e}") from e

    logger.debug("📂 Read field %s: %d x %d", field.name, space.size, time.n)
    return field


def write_field(field: Field, manifest_path: Union[str, Path], data_name: Optional[str] = None) -> Path:
    """Write payload first, then the manifest that points at it."""
    manifest_path = Path(manifest_path)
    data_name = data_name or f"{manifest_path.stem}.f64"

    atomic_write_bytes(manifest_path.parent / data_name, field.values.astype(PAYLOAD_DTYPE).tobytes(order="C"))
    manifest = {
        "name": field.name,
        "space": field.space.to_dict(),
        "time": field.time.to_dict(),
        "data": data_name,
    }
    atomic_write_text(manifest_path, json.dumps(manifest, indent=2) + "\n")

    logger.debug("💾 Wrote field %s to %s", field.name, manifest_path)
    return manifest_path
