"""
Module: formatter.py
-------------------
Formateurs des logs de la bibliothèque.

La couleur console dépend du composant émetteur (dernier segment du nom
du logger) et du niveau: avertissements et erreurs prennent toujours la
couleur de leur niveau, ce qui fait ressortir contre-exemples et
désaccords.

Classes:
    ColoredFormatter: Formateur pour la sortie console avec couleurs
    FileFormatter: Formateur pour la sortie fichier

Version: 1.0
"""

import logging
from datetime import datetime

import colorama
from colorama import Fore, Style

colorama.init()


class ColoredFormatter(logging.Formatter):
    """Formateur coloré pour la console"""

    COLORS = {
        'enumeration': Fore.GREEN,
        'families': Fore.BLUE,
        'spectral': Fore.MAGENTA,
        'jacobi': Fore.MAGENTA,
        'linearity': Fore.CYAN,
        'cli': Fore.WHITE,
        'ERROR': Fore.RED,
        'WARNING': Fore.YELLOW,
        'INFO': Fore.WHITE,
        'DEBUG': Fore.CYAN
    }

    def format(self, record):
        component = record.name.rsplit('.', 1)[-1]
        if record.levelno >= logging.WARNING:
            color = self.COLORS[record.levelname if record.levelname in self.COLORS else 'ERROR']
        else:
            color = self.COLORS.get(component, self.COLORS.get(record.levelname, Fore.WHITE))

        time_str = datetime.fromtimestamp(record.created).strftime('%H:%M:%S.%f')[:-3]
        source = component if record.threadName == 'MainThread' else f"{component}/{record.threadName}"

        formatted_message = (
            f"{Fore.WHITE}[{time_str}] "
            f"{color}{source}{Fore.WHITE}: "
            f"{color}{record.getMessage()}{Style.RESET_ALL}"
        )
        if record.exc_info:
            formatted_message += f"\n{Fore.RED}{self.formatException(record.exc_info)}{Style.RESET_ALL}"
        return formatted_message


class FileFormatter(logging.Formatter):
    """Formateur détaillé pour le fichier de log"""

    def format(self, record):
        time_str = datetime.fromtimestamp(record.created).strftime('%Y-%m-%d %H:%M:%S.%f')[:-3]
        formatted_message = (
            f"[{time_str}] [{record.name}] [{record.threadName}] "
            f"[{record.levelname}]: {record.getMessage()}"
        )
        if record.exc_info:
            formatted_message += f"\nException: {self.formatException(record.exc_info)}"
        return formatted_message
