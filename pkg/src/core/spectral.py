"""
Module: spectral.py
------------------
Comptage des valeurs propres principales.

Le chemin exact calcule le rang de la matrice des marches (colonnes
A^k·1) par élimination sans fractions sur des entiers; il fait foi. Le
chemin flottant diagonalise A par Jacobi puis projette le vecteur tout-un
sur chaque espace propre; il sert de contre-vérification.

Fonctions:
    walk_matrix: Colonnes exactes A^k·1, k = 0..n-1
    main_eigenvalue_count_exact: Rang de la matrice des marches
    walk_rank_profile: Rangs des k premières colonnes
    fraction_free_rank: Rang d'une matrice entière (Bareiss)
    eigen_float: Spectre flottant décroissant et vecteurs propres
    main_eigenvalue_count_float: Compte par projection
    main_eigen_report: Rapport exact + flottant
    hagos_check: Deux valeurs propres principales <=> 2-linéaire

Version: 1.0
"""

from math import gcd
from typing import List, Optional, Sequence, Tuple

import numpy as np

from src.core.jacobi import jacobi_eigh
from src.core.linearity import check_two_walk_linear
from src.models.errors import InvalidGraphError
from src.models.graph import Graph
from src.models.report import MainEigenReport, WalkMatrix
from src.models.verdict import Linear
from src.utils.logger_config import get_logger
from src.utils.settings import DEFAULT_SETTINGS, RunSettings

logger = get_logger(__name__)


def _apply_adjacency(g: Graph, column: Sequence[int]) -> Tuple[int, ...]:
    return tuple(sum(column[w] for w in row) for row in g.adjacency)


def _require_vertices(g: Graph):
    if g.n < 1:
        raise InvalidGraphError("graphe vide")


def walk_matrix(g: Graph) -> WalkMatrix:
    _require_vertices(g)
    columns = [tuple([1] * g.n)]
    while len(columns) < g.n:
        columns.append(_apply_adjacency(g, columns[-1]))
    return WalkMatrix(g.n, tuple(columns))


class _EchelonBasis:
    """Base échelonnée entière, enrichie vecteur par vecteur"""

    def __init__(self):
        self.rows: List[Tuple[int, List[int]]] = []

    def add(self, vector: Sequence[int]) -> bool:
        """Ajoute le vecteur; renvoie False s'il dépend des précédents"""
        x = list(vector)
        for pivot, row in self.rows:
            if x[pivot]:
                factor, head = row[pivot], x[pivot]
                x = [factor * xi - head * ri for xi, ri in zip(x, row)]
                content = 0
                for value in x:
                    content = gcd(content, value)
                if content > 1:
                    x = [value // content for value in x]
        for index, value in enumerate(x):
            if value:
                self.rows.append((index, x))
                return True
        return False

    @property
    def rank(self) -> int:
        return len(self.rows)


def main_eigenvalue_count_exact(g: Graph) -> int:
    """
    Rang de la matrice des marches.

    Les colonnes sont produites une à une; dès que A^k·1 dépend des
    colonnes précédentes, toutes les suivantes en dépendent aussi et le
    rang est acquis.
    """
    _require_vertices(g)
    basis = _EchelonBasis()
    column = tuple([1] * g.n)
    while basis.rank < g.n and basis.add(column):
        column = _apply_adjacency(g, column)
    return basis.rank


def walk_rank_profile(g: Graph) -> List[int]:
    """profile[k-1] = rang des k premières colonnes, k = 1..n"""
    basis = _EchelonBasis()
    profile = []
    for column in walk_matrix(g).columns:
        basis.add(column)
        profile.append(basis.rank)
    return profile


def fraction_free_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rang d'une matrice entière par l'élimination de Bareiss"""
    matrix = [list(row) for row in rows]
    if not matrix:
        return 0
    height, width = len(matrix), len(matrix[0])
    rank, previous = 0, 1
    for column in range(width):
        pivot = next((r for r in range(rank, height) if matrix[r][column]), None)
        if pivot is None:
            continue
        matrix[rank], matrix[pivot] = matrix[pivot], matrix[rank]
        head = matrix[rank][column]
        for r in range(rank + 1, height):
            factor = matrix[r][column]
            matrix[r] = [
                (head * matrix[r][c] - factor * matrix[rank][c]) // previous
                for c in range(width)
            ]
        previous = head
        rank += 1
        if rank == height:
            break
    return rank


def adjacency_array(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n))
    for u, v in g.edges:
        a[u, v] = a[v, u] = 1.0
    return a


def eigen_float(g: Graph, settings: RunSettings = DEFAULT_SETTINGS) -> Tuple[np.ndarray, np.ndarray]:
    """
    :return: (valeurs propres décroissantes, base orthonormée de vecteurs propres en colonnes)
    :raises ConvergenceError: Jacobi n'a pas convergé
    """
    _require_vertices(g)
    return jacobi_eigh(adjacency_array(g), tol=settings.jacobi_tol,
                       max_sweeps=settings.jacobi_max_sweeps)


def main_eigenvalue_count_float(g: Graph, cluster_tol: float = 1e-8, main_tol: float = 1e-16,
                                settings: RunSettings = DEFAULT_SETTINGS) -> Tuple[int, Tuple[float, ...]]:
    """
    Compte les espaces propres non orthogonaux au vecteur tout-un.

    :return: (nombre de valeurs propres principales, leurs approximations décroissantes)
    """
    values, vectors = eigen_float(g, settings)
    projections = vectors.sum(axis=0) ** 2
    scale = max(1.0, float(np.max(np.abs(values))))
    threshold = main_tol * g.n

    main_values = []
    start = 0
    for end in range(1, g.n + 1):
        if end < g.n and values[end - 1] - values[end] <= cluster_tol * scale:
            continue
        weight = float(np.sum(projections[start:end]))
        if weight > threshold:
            main_values.append(float(np.mean(values[start:end])))
        start = end
    return len(main_values), tuple(main_values)


def main_eigen_report(g: Graph, with_float: bool = True,
                      settings: RunSettings = DEFAULT_SETTINGS) -> MainEigenReport:
    exact = main_eigenvalue_count_exact(g)
    if not with_float:
        return MainEigenReport(exact)
    count, values = main_eigenvalue_count_float(g, settings.cluster_tol, settings.main_tol, settings)
    if count != exact:
        logger.warning(f"désaccord exact/flottant: rang {exact}, projection {count} ({g})")
    return MainEigenReport(exact, count, values)


def hagos_check(g: Graph, exact_count: Optional[int] = None) -> bool:
    """Vrai ssi (exactement deux valeurs propres principales) <=> (verdict linéaire)"""
    count = main_eigenvalue_count_exact(g) if exact_count is None else exact_count
    return (count == 2) == isinstance(check_two_walk_linear(g), Linear)
