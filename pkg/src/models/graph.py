"""
Module: graph.py
---------------
Représentation des graphes simples non orientés et des bases tricycliques.

Un Graph est une valeur immuable : nombre de sommets et ensemble d'arêtes
normalisé, de sorte que deux graphes égaux se comparent égaux. La matrice
d'adjacence et les degrés sont dérivés à la demande et mis en cache.

Classes:
    Graph: Graphe simple sur les sommets 0..n-1
    BaseType: Les 8 topologies de base tricycliques
    Arc: Chemin ou cycle interne réduit à une arête de multigraphe
    ReducedMultigraph: Base dont les sommets de degré 2 sont supprimés

Relations:
    - Graph est l'entrée universelle de src.core
    - ReducedMultigraph est produit par src.core.graph_core.reduce_base
    - BaseType est résolu par src.core.bases.base_type

Version: 1.0
"""

from dataclasses import dataclass, field
from enum import IntEnum
from functools import cached_property
from typing import FrozenSet, Tuple

from src.models.errors import InvalidGraphError

Edge = Tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """
    Graphe simple non orienté.

    :param n: Nombre de sommets (sommets 0..n-1)
    :param edges: Arêtes (u, v) avec u < v, triées et sans doublon
    """
    n: int
    edges: Tuple[Edge, ...] = field(default=())

    def __post_init__(self):
        if self.n < 0:
            raise InvalidGraphError(f"nombre de sommets négatif: {self.n}")
        previous = None
        for edge in self.edges:
            u, v = edge
            if u == v:
                raise InvalidGraphError(f"boucle interdite sur le sommet {u}")
            if not 0 <= u < v < self.n:
                raise InvalidGraphError(f"arête {edge} non normalisée ou hors bornes pour n={self.n}")
            if previous is not None and edge <= previous:
                raise InvalidGraphError("arêtes non triées ou dupliquées")
            previous = edge

    @property
    def m(self) -> int:
        """Nombre d'arêtes"""
        return len(self.edges)

    @cached_property
    def adjacency(self) -> Tuple[Tuple[int, ...], ...]:
        """Listes de voisins triées, indexées par sommet"""
        neighbours = [[] for _ in range(self.n)]
        for u, v in self.edges:
            neighbours[u].append(v)
            neighbours[v].append(u)
        return tuple(tuple(sorted(row)) for row in neighbours)

    @cached_property
    def neighbour_sets(self) -> Tuple[FrozenSet[int], ...]:
        return tuple(frozenset(row) for row in self.adjacency)

    @cached_property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(len(row) for row in self.adjacency)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbour_sets[u]

    def __str__(self):
        return f"Graph(n={self.n}, m={self.m})"


class BaseType(IntEnum):
    """Les 8 types de bases des graphes tricycliques"""
    T1 = 1
    T2 = 2
    T3 = 3
    T4 = 4
    T5 = 5
    T6 = 6
    T7 = 7
    T8 = 8

    def __str__(self):
        return f"T{self.value}"


@dataclass(frozen=True, order=True)
class Arc:
    """
    Chemin interne (u != v) ou cycle interne (u == v) d'une base.

    :param u: Premier sommet de branchement (indice réduit)
    :param v: Second sommet de branchement, u <= v
    :param length: Nombre d'arêtes l(R) du chemin ou du cycle
    """
    u: int
    v: int
    length: int

    @property
    def is_loop(self) -> bool:
        return self.u == self.v


@dataclass(frozen=True)
class ReducedMultigraph:
    """
    Base tricyclique dont chaque chemin de sommets de degré 2 est
    contracté en un arc portant sa longueur.

    :param branch_count: Nombre de sommets de degré >= 3
    :param arcs: Arcs et boucles, triés
    """
    branch_count: int
    arcs: Tuple[Arc, ...]

    def __post_init__(self):
        if len(self.arcs) - self.branch_count + 1 != 3:
            raise InvalidGraphError(
                f"nombre cyclomatique {len(self.arcs) - self.branch_count + 1} différent de 3"
            )

    @property
    def edge_count(self) -> int:
        return sum(arc.length for arc in self.arcs)

    @cached_property
    def shape(self) -> Tuple[Edge, ...]:
        """Multiensemble trié des paires de sommets, longueurs oubliées"""
        return tuple(sorted((arc.u, arc.v) for arc in self.arcs))

    def degree_of(self, vertex: int) -> int:
        return sum((arc.u == vertex) + (arc.v == vertex) for arc in self.arcs)

