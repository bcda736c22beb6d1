#!/usr/bin/env python3
"""
Shared logging configuration for qdeform.

The engine never logs; only the command runner does, and only to a file so
reports on stdout stay byte-stable.
"""

from pathlib import Path
from typing import Optional

from aiologger import Logger
from aiologger.levels import LogLevel
from aiologger.handlers.files import AsyncTimedRotatingFileHandler
from aiologger.formatters.base import Formatter


DEFAULT_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

# Global logger instance
_global_logger = None


def default_log_dir() -> Path:
    return Path.home() / ".qdeform" / "logs"


def _level(log_level: str) -> LogLevel:
    try:
        return LogLevel[log_level.upper()]
    except KeyError:
        return LogLevel.INFO


def setup_logging(log_level: str = "INFO", log_dir: Optional[str] = None, enabled: bool = True,
                  backup_count: int = 7, fmt: str = DEFAULT_FORMAT) -> Logger:
    """Setup the file logger once and return it.

    Args:
        log_level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        log_dir: Directory for qdeform.log; defaults to ~/.qdeform/logs
        enabled: When False the logger has no handlers

    Returns:
        Configured logger instance
    """
    global _global_logger

    if _global_logger is not None:
        return _global_logger

    logger = Logger(name="qdeform", level=_level(log_level))

    if enabled:
        directory = Path(log_dir).expanduser() if log_dir else default_log_dir()
        directory.mkdir(parents=True, exist_ok=True)
        file_handler = AsyncTimedRotatingFileHandler(
            filename=str(directory / "qdeform.log"),
            when='D',
            interval=1,
            backup_count=backup_count,
            encoding="utf-8"
        )
        file_handler.formatter = Formatter(fmt=fmt, datefmt="%Y-%m-%d %H:%M:%S")
        logger.add_handler(file_handler)

    _global_logger = logger
    return _global_logger
