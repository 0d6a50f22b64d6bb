"""
Module: logger_config.py
-----------------------
Configuration du système de journalisation de la bibliothèque.

Un logger racine "tricyclic" regroupe les loggers des modules
("tricyclic.enumeration", "tricyclic.families", ...). La console reçoit les
messages sur stderr pour que stdout ne porte que les données des
commandes; un fichier horodaté est ajouté sur demande.

Fonctions:
    setup_logging: Configure le système de logging
    create_log_file: Crée un nouveau fichier de log
    get_logger: Récupère un logger de module

Version: 1.0
"""

import logging
import sys
from datetime import datetime
from pathlib import Path
from typing import Optional, Tuple

from src.ui.formatter import ColoredFormatter, FileFormatter

ROOT_LOGGER = "tricyclic"


def create_log_file(log_dir: Path) -> Path:
    """Crée le dossier de logs et renvoie un nom de fichier horodaté"""
    log_dir.mkdir(parents=True, exist_ok=True)
    timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
    return log_dir / f"verification_{timestamp}.log"


def setup_logging(level=logging.INFO, log_dir: Optional[Path] = None,
                  stream=None) -> Tuple[logging.Logger, Optional[Path]]:
    """
    Configure le logger racine de la bibliothèque.

    :param level: Niveau minimal des messages
    :param log_dir: Dossier du fichier de log, aucun fichier si None
    :param stream: Flux de la console (stderr par défaut)
    :return: (logger racine, chemin du fichier de log ou None)
    """
    logger = logging.getLogger(ROOT_LOGGER)
    logger.setLevel(level)
    logger.propagate = False

    # Suppression des handlers existants
    for handler in list(logger.handlers):
        handler.close()
    logger.handlers.clear()

    console_handler = logging.StreamHandler(stream if stream is not None else sys.stderr)
    console_handler.setLevel(level)
    console_handler.setFormatter(ColoredFormatter())
    logger.addHandler(console_handler)

    log_file = None
    if log_dir is not None:
        log_file = create_log_file(Path(log_dir))
        file_handler = logging.FileHandler(log_file, encoding="utf-8")
        file_handler.setLevel(level)
        file_handler.setFormatter(FileFormatter())
        logger.addHandler(file_handler)
        logger.info(f"Démarrage de la journalisation - Fichier: {log_file}")

    return logger, log_file


def get_logger(name: str = ROOT_LOGGER) -> logging.Logger:
    """
    Logger enfant de "tricyclic".

    :param name: __name__ du module appelant, ou nom court du composant
    """
    if name == ROOT_LOGGER or name.startswith(ROOT_LOGGER + "."):
        return logging.getLogger(name)
    return logging.getLogger(f"{ROOT_LOGGER}.{name.rsplit('.', 1)[-1]}")
