import logging
import sys

from app.utils.config import get_settings

FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def setup_logging(verbose: bool = False) -> None:
    """Route library logs to stderr; stdout is reserved for command output."""
    level = logging.DEBUG if verbose else get_settings().log_level.upper()
    root = logging.getLogger("app")
    root.setLevel(level)
    if not root.handlers:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(FORMAT))
        root.addHandler(handler)
