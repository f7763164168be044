"""
Logging-Konfiguration für widthkit
"""

import logging
import sys
from pathlib import Path
from typing import Optional, TextIO


def setup_logger(name: str, log_level: str = "INFO", log_file: Optional[str] = None,
                 stream: Optional[TextIO] = None) -> logging.Logger:
    """
    Richte Logger ein.

    Args:
        name: Name des Loggers ("" for the root logger)
        log_level: Log-Level (DEBUG, INFO, WARNING, ERROR)
        log_file: Optional: Pfad zur Log-Datei
        stream: Console stream (default stderr; stdout carries CLI results)

    Returns:
        logging.Logger: Konfigurierter Logger
    """
    level = getattr(logging, log_level.upper(), None)
    if not isinstance(level, int):
        raise ValueError(f"unknown log level: {log_level}")

    logger = logging.getLogger(name)
    logger.setLevel(level)

    # Verhindere doppelte Handler
    if logger.handlers:
        return logger

    formatter = logging.Formatter(
        '%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S'
    )

    console_handler = logging.StreamHandler(stream or sys.stderr)
    console_handler.setFormatter(formatter)
    logger.addHandler(console_handler)

    if log_file:
        log_path = Path(log_file)
        log_path.parent.mkdir(parents=True, exist_ok=True)

        file_handler = logging.FileHandler(log_path, encoding='utf-8')
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)

    return logger
