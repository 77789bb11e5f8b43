"""
Configuración de sinks de loguru.
"""

import sys
from pathlib import Path
from typing import Optional

from loguru import logger

from .config import settings


def setup_logging(level: Optional[str] = None, log_dir: Optional[Path] = None) -> None:
    """
    Reconfigura los sinks de loguru.

    Args:
        level: Nivel mínimo para stderr (por defecto settings.log_level)
        log_dir: Directorio para el sink de archivo; sin él solo hay stderr
    """
    level = (level or settings.log_level).upper()
    log_dir = log_dir or settings.log_dir

    logger.remove()
    logger.add(
        sys.stderr,
        level=level,
        format="<green>{time:HH:mm:ss}</green> | <level>{level: <8}</level> | "
        "<cyan>{name}</cyan>:<cyan>{function}</cyan> - <level>{message}</level>",
    )

    if log_dir is not None:
        log_dir = Path(log_dir)
        log_dir.mkdir(parents=True, exist_ok=True)
        logger.add(
            log_dir / "motivic_{time:YYYY-MM-DD}.log",
            level="DEBUG",
            rotation="10 MB",
            retention="7 days",
            encoding="utf-8",
        )

    logger.debug(f"Logging configured: level={level}, log_dir={log_dir}")
