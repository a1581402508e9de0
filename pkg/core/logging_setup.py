"""
Console logging through rich
"""

import logging
from typing import Optional

from rich.console import Console
from rich.logging import RichHandler

from config import LOGGING_CONFIG


def configure_logging(level: Optional[str] = None, console: Optional[Console] = None) -> None:
    """Route the root logger to a RichHandler; safe to call more than once."""
    level = (level or LOGGING_CONFIG["level"]).upper()
    handler = RichHandler(
        console=console or Console(stderr=True),
        show_path=LOGGING_CONFIG["show_path"],
        rich_tracebacks=True,
        markup=False,
    )
    logging.basicConfig(level=level, format="%(message)s", datefmt="[%X]", handlers=[handler], force=True)
