"""
Base Module Interface
Every check family inherits from this: it plans jobs for a corpus entry and
executes one job at a time
"""

import logging
from abc import ABC, abstractmethod
from typing import Any, Dict, Iterable, List, Tuple

logger = logging.getLogger(__name__)


class BaseModule(ABC):
    """Base class for all check modules in the system"""

    lemma_ids: Tuple[str, ...] = ()
    description: str = ""

    def __init__(self, config: Dict = None):
        self.config = config or {}
        self.name = self.__class__.__name__
        self.version = "1.0.0"
        self.enabled = True
        self._initialized = False

    def initialize(self) -> bool:
        """
        Initialize the module
        Returns True if successful
        """
        if self._initialized:
            return True

        try:
            self._setup()
            self._initialized = True
            return True
        except Exception as e:
            logger.error("❌ Failed to initialize %s: %s", self.name, e)
            return False

    def _setup(self):
        """Override this for custom setup logic"""
        pass

    @classmethod
    def matches(cls, wanted: Iterable[str]) -> bool:
        """True when any requested id prefixes one of this module's lemma ids"""
        wanted = [w for w in wanted if w]
        return not wanted or any(lemma.startswith(w) for lemma in cls.lemma_ids for w in wanted)

    def plan(self, *args, **kwargs) -> List[Dict[str, Any]]:
        """Parameter sets to execute; one job each"""
        return []

    @abstractmethod
    def execute(self, *args, **kwargs) -> Any:
        """
        Run one planned job
        Must be implemented by all modules
        """
        raise NotImplementedError(f"{self.name} must implement execute()")

    def __str__(self):
        lemmas = ", ".join(self.lemma_ids) or "-"
        return f"{self.name} v{self.version} [{lemmas}] ({'enabled' if self.enabled else 'disabled'})"
