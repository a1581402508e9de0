"""
Core system components for the Steklov Average Toolkit
"""

from .base_module import BaseModule
from .errors import SteklovError
from .module_registry import ModuleRegistry, registry

__all__ = ['BaseModule', 'ModuleRegistry', 'registry', 'SteklovError']
