"""
Module: jacobi.py
----------------
Décomposition spectrale d'une matrice symétrique réelle par rotations de
Jacobi cycliques.

Chaque balayage annule tour à tour les coefficients hors-diagonaux (p, q);
l'algorithme s'arrête dès que la norme de Frobenius hors-diagonale passe
sous tol·‖A‖. Les vecteurs propres sont accumulés en colonnes.

Fonctions:
    jacobi_eigh: Valeurs propres décroissantes et vecteurs propres orthonormés

Version: 1.0
"""

import math
from typing import Tuple

import numpy as np

from src.models.errors import ConvergenceError
from src.utils.logger_config import get_logger

logger = get_logger(__name__)


def _off_norm(a: np.ndarray) -> float:
    """Norme de Frobenius des seuls coefficients hors-diagonaux (sans soustraction)"""
    return math.sqrt(2.0 * float(np.sum(np.triu(a, 1) ** 2)))


def _rotate(a: np.ndarray, v: np.ndarray, p: int, q: int):
    """Annule a[p, q] par la rotation A <- JᵀAJ"""
    apq = a[p, q]
    diff = a[q, q] - a[p, p]
    if abs(apq) < abs(diff) * 1.0e-36:
        # theta déborderait: t ~ 1 / (2 theta)
        t = apq / diff
    else:
        theta = diff / (2.0 * apq)
        t = (1.0 if theta >= 0 else -1.0) / (abs(theta) + math.sqrt(theta * theta + 1.0))
    c = 1.0 / math.sqrt(t * t + 1.0)
    s = t * c

    col_p, col_q = a[:, p].copy(), a[:, q].copy()
    a[:, p] = c * col_p - s * col_q
    a[:, q] = s * col_p + c * col_q
    row_p, row_q = a[p, :].copy(), a[q, :].copy()
    a[p, :] = c * row_p - s * row_q
    a[q, :] = s * row_p + c * row_q
    a[p, q] = a[q, p] = 0.0

    vec_p, vec_q = v[:, p].copy(), v[:, q].copy()
    v[:, p] = c * vec_p - s * vec_q
    v[:, q] = s * vec_p + c * vec_q


def jacobi_eigh(matrix, tol: float = 1e-12, max_sweeps: int = 100) -> Tuple[np.ndarray, np.ndarray]:
    """
    :param matrix: Matrice symétrique (n x n)
    :param tol: Seuil relatif de la norme hors-diagonale
    :param max_sweeps: Nombre maximal de balayages
    :return: (valeurs propres décroissantes, vecteurs propres en colonnes)
    :raises ConvergenceError: Budget de balayages épuisé
    """
    a = np.array(matrix, dtype=float)
    n = a.shape[0]
    v = np.identity(n)
    scale = float(np.linalg.norm(a))
    threshold = tol * scale
    negligible = threshold / max(n, 1)

    sweeps = 0
    off = _off_norm(a)
    while off > threshold:
        if sweeps >= max_sweeps:
            raise ConvergenceError(sweeps, off)
        for p in range(n - 1):
            for q in range(p + 1, n):
                if abs(a[p, q]) > negligible:
                    _rotate(a, v, p, q)
        sweeps += 1
        off = _off_norm(a)
    logger.debug(f"Jacobi n={n}: {sweeps} balayage(s), norme hors-diagonale {off:.2e}")

    values = np.diag(a).copy()
    order = np.argsort(-values, kind="stable")
    return values[order], v[:, order]
