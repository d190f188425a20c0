from .logging_setup import configure_logging
from .settings import LOG_LEVELS, Settings

__all__ = ["LOG_LEVELS", "Settings", "configure_logging"]
