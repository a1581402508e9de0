"""
Module Registry - Dynamic discovery and selection of check modules
"""

import importlib
import inspect
import logging
import os
from typing import Dict, Iterable, List, Optional, Type

from .base_module import BaseModule

logger = logging.getLogger(__name__)


class ModuleRegistry:
    """Centralized registry for all modules"""

    def __init__(self):
        self.modules: Dict[str, Type[BaseModule]] = {}
        self.instances: Dict[str, BaseModule] = {}
        self.config = {}

    def register(self, name: str, module_class: Type[BaseModule]):
        """Register a module class"""
        if not issubclass(module_class, BaseModule):
            raise TypeError(f"{module_class} must inherit from BaseModule")

        self.modules[name] = module_class
        logger.debug("✅ Registered module: %s", name)

    def get_module(self, name: str, config: Dict = None) -> Optional[BaseModule]:
        """
        Get module instance (creates if doesn't exist)
        """
        if name in self.instances:
            return self.instances[name]

        if name not in self.modules:
            logger.error("❌ Module '%s' not found in registry", name)
            return None

        module_class = self.modules[name]
        module_config = config or self.config.get(name, {})

        try:
            instance = module_class(module_config)
            if instance.initialize():
                self.instances[name] = instance
                return instance
            return None
        except Exception as e:
            logger.error("❌ Failed to create %s: %s", name, e)
            return None

    def auto_discover(self, package_name: str):
        """
        Auto-discover and register concrete modules defined in a package
        """
        package = importlib.import_module(package_name)
        package_path = package.__path__[0]

        for root, _dirs, files in os.walk(package_path):
            for file in sorted(files):
                if not file.endswith('.py') or file.startswith('__'):
                    continue
                module_path = os.path.join(root, file)
                relative_path = os.path.relpath(module_path, package_path)
                module_name = relative_path[:-3].replace(os.sep, '.')
                full_module_name = f"{package_name}.{module_name}"

                try:
                    mod = importlib.import_module(full_module_name)
                except ImportError as e:
                    logger.warning("⚠️  Could not import %s: %s", full_module_name, e)
                    continue

                for name, obj in inspect.getmembers(mod, inspect.isclass):
                    if (issubclass(obj, BaseModule) and obj.__module__ == mod.__name__
                            and not inspect.isabstract(obj) and name not in self.modules):
                        self.register(name, obj)

    def select(self, lemma_ids: Optional[Iterable[str]] = None) -> List[str]:
        """
        Names of registered modules whose lemma ids start with any requested id
        ("2.4" selects 2.4a..2.4d). No ids selects everything. Registration order.
        """
        wanted = [w.strip() for w in lemma_ids or [] if w.strip()]
        return [name for name, module_class in self.modules.items() if module_class.matches(wanted)]


# Global registry instance
registry = ModuleRegistry()
