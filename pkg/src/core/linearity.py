"""
Module: linearity.py
-------------------
Test de 2-linéarité des marches en arithmétique rationnelle exacte.

S(v) est la somme des degrés des voisins de v. Un graphe est 2-linéaire
de paramètres (a, b) si S(v) = a·d(v) + b en chaque sommet et si au moins
deux degrés distincts existent (sinon (a, b) n'est pas unique et le
verdict est Regular).

Fonctions:
    vertex_sum: S(v)
    vertex_sums: S pour tous les sommets
    solve_ab_from: (a, b) déduits d'une paire de sommets de degrés distincts
    solve_ab: (a, b) déduits de la première paire utilisable, ou None
    check_two_walk_linear: Verdict complet
    is_integral: a et b entiers

Version: 1.0
"""

from fractions import Fraction
from typing import Optional, Tuple

from src.core.graph_core import degree
from src.models.errors import InvalidGraphError, VerdictError
from src.models.graph import Graph
from src.models.verdict import Linear, LinearityVerdict, NotLinear, Regular
from src.utils.logger_config import get_logger

logger = get_logger(__name__)


def vertex_sum(g: Graph, v: int) -> int:
    degree(g, v)
    return sum(g.degrees[w] for w in g.adjacency[v])


def vertex_sums(g: Graph) -> Tuple[int, ...]:
    degrees = g.degrees
    return tuple(sum(degrees[w] for w in row) for row in g.adjacency)


def solve_ab_from(g: Graph, u: int, v: int) -> Tuple[Fraction, Fraction]:
    """
    a = (S(v) - S(u)) / (d(v) - d(u)),
    b = (d(v)·S(u) - d(u)·S(v)) / (d(v) - d(u))

    :raises InvalidGraphError: d(u) = d(v)
    """
    du, dv = degree(g, u), degree(g, v)
    if du == dv:
        raise InvalidGraphError(f"les sommets {u} et {v} ont le même degré {du}")
    su, sv = vertex_sum(g, u), vertex_sum(g, v)
    return Fraction(sv - su, dv - du), Fraction(dv * su - du * sv, dv - du)


def _seed_pair(g: Graph) -> Optional[Tuple[int, int]]:
    degrees = g.degrees
    for v in range(1, g.n):
        if degrees[v] != degrees[0]:
            return 0, v
    return None


def solve_ab(g: Graph) -> Optional[Tuple[Fraction, Fraction]]:
    """(a, b) issus du sommet 0 et du premier sommet de degré différent; None si régulier"""
    pair = _seed_pair(g)
    if pair is None:
        return None
    return solve_ab_from(g, *pair)


def check_two_walk_linear(g: Graph) -> LinearityVerdict:
    if g.n < 1:
        raise InvalidGraphError("graphe vide")
    solution = solve_ab(g)
    if solution is None:
        return Regular(g.degrees[0])
    a, b = solution
    sums = vertex_sums(g)
    for v in range(g.n):
        expected = a * g.degrees[v] + b
        if expected != sums[v]:
            logger.debug(f"S({v}) = {sums[v]} au lieu de {expected}")
            return NotLinear(v, expected, sums[v])
    return Linear(a, b)


def is_integral(verdict: LinearityVerdict) -> bool:
    if not isinstance(verdict, Linear):
        raise VerdictError(f"is_integral attend un verdict linéaire, reçu {verdict.kind}")
    return verdict.a.denominator == 1 and verdict.b.denominator == 1
