"""Paquete core: configuración, errores y logging."""

from .config import Settings, settings
from .logger import setup_logging
from . import errors

__all__ = ["Settings", "settings", "setup_logging", "errors"]
