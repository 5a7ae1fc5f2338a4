# logging_setup.py
import logging
import os
import sys
from logging.handlers import RotatingFileHandler
from typing import Optional, Union

import colorlog


def setup_logging(log_file: Optional[str] = None, level: Union[int, str] = logging.WARNING):
    """
    Configure le logging vers un fichier avec rotation et une console colorée.
    Idempotent : ne reconfigure pas si déjà setup.

    La console écrit sur stderr pour laisser stdout aux documents JSON.
    """
    root_logger = logging.getLogger()
    if root_logger.hasHandlers():
        # Déjà configuré, skip pour éviter doublons
        return

    if isinstance(level, str):
        level = logging.getLevelName(level.upper())
        if not isinstance(level, int):
            level = logging.WARNING

    root_logger.setLevel(level)

    if log_file:
        # Crée le dossier si inexistant
        log_dir = os.path.dirname(log_file)
        if log_dir and not os.path.exists(log_dir):
            os.makedirs(log_dir)

        # Handler fichier avec rotation (max 5MB, 5 backups)
        file_handler = RotatingFileHandler(
            log_file, maxBytes=5 * 1024 * 1024, backupCount=5, encoding='utf-8'
        )
        file_handler.setLevel(level)
        file_handler.setFormatter(logging.Formatter(
            '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
        ))
        root_logger.addHandler(file_handler)

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(level)
    console_handler.setFormatter(colorlog.ColoredFormatter(
        '%(log_color)s%(levelname)-8s%(reset)s %(message)s',
        log_colors={
            'DEBUG': 'cyan',
            'INFO': 'green',
            'WARNING': 'yellow',
            'ERROR': 'red',
            'CRITICAL': 'red,bg_white',
        },
    ))
    root_logger.addHandler(console_handler)

    logging.getLogger(__name__).debug("Logging configuré vers %s", log_file or "console")
