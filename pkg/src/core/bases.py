"""
Module: bases.py
---------------
Reconnaissance du type de base d'un graphe tricyclique.

La base G_B est contractée en multigraphe réduit (au plus 4 sommets de
branchement), puis comparée à REDUCED_SHAPES en essayant toutes les
permutations des sommets de branchement.

Fonctions:
    match_reduced: Type d'un multigraphe réduit
    base_type: Type de la base d'un graphe tricyclique

Version: 1.0
"""

from functools import lru_cache
from itertools import permutations
from typing import Tuple

from src.core.graph_core import base, reduce_base
from src.models.errors import BaseTypeError
from src.models.graph import BaseType, Graph, ReducedMultigraph
from src.seed.base_catalog import REDUCED_SHAPES


def _relabelled_shape(shape, permutation) -> Tuple[Tuple[int, int], ...]:
    return tuple(sorted(
        tuple(sorted((permutation[u], permutation[v]))) for u, v in shape
    ))


@lru_cache(maxsize=None)
def _match_shape(branch_count: int, shape: Tuple[Tuple[int, int], ...]) -> BaseType:
    for base_type_, variants in REDUCED_SHAPES.items():
        for count, reference in variants:
            if count != branch_count or len(reference) != len(shape):
                continue
            for permutation in permutations(range(branch_count)):
                if _relabelled_shape(shape, permutation) == reference:
                    return base_type_
    raise BaseTypeError(f"multigraphe réduit sans correspondance: {branch_count} sommets, arcs {shape}")


def match_reduced(reduced: ReducedMultigraph) -> BaseType:
    return _match_shape(reduced.branch_count, reduced.shape)


def base_type(g: Graph) -> BaseType:
    """
    :raises InvalidGraphError: g n'est pas tricyclique
    :raises BaseTypeError: aucune forme du catalogue ne correspond
    """
    return match_reduced(reduce_base(base(g)))
