"""
Module: audit.py
---------------
Contrôles structurels des graphes tricycliques 2-linéaires.

Tout graphe tricyclique à exactement deux valeurs propres principales
doit satisfaire:
    - chaque chemin ou cycle interne de longueur >= 2 a une longueur <= 3;
      s'il est de longueur 3 et qu'une de ses extrémités est de degré d,
      aucun sommet de degré 2 n'a ses deux voisins de degré d;
    - G_0 (une passe d'élagage) est lui-même une base tricyclique;
    - tout sommet v de G_0 vérifie d(v) = d_{G_0}(v) ou d(v) = a + b;
    - s'il existe un sommet pendant, a >= 2 et a + b >= 3.

En présence de sommets pendants, et si G_0 est bien une base:
    - aucun cycle de G ne passe par deux sommets consécutifs de degrés
      >= 3 et 2 dans G_0 avec tous ses sommets de degré a + b;
    - un chemin interne de G_0 de longueur >= 3 dont les extrémités ont
      le même degré 3, 4 ou 6 dans G_0 (ou les degrés 3 et 5) a des
      sommets intérieurs de même degré dans G, pris dans {2, a + b}, et
      des extrémités de même degré dans G; s'ils sont de degré 2, sa
      longueur vaut 3;
    - un cycle interne de G_0 enraciné en degré 3, 4 ou 6 est un triangle
      dont les deux autres sommets sont de degré 2 (et a = 2 si la racine
      est de degré 3); enraciné en degré 5, c'est un triangle dont les
      deux autres sommets ont le même degré 2 ou 3, et s'il vaut 3 la
      racine est de degré 5 avec a = 3 et b = 0.

Les violations sont renvoyées comme messages lisibles, jamais levées.
Les sommets cités sont ceux de G.

Fonctions:
    audit_structure: Liste des violations d'un graphe

Version: 1.1
"""

from typing import List, Optional, Sequence

from src.core.bases import base_type
from src.core.graph_core import (
    induced_subgraph,
    internal_paths,
    is_tricyclic,
    pendant_vertices,
    simple_cycles,
)
from src.core.linearity import check_two_walk_linear
from src.models.errors import BaseTypeError
from src.models.graph import Graph
from src.models.verdict import Linear, LinearityVerdict

_EQUAL_ROOTS = (3, 4, 6)


def _path_violations(g: Graph) -> List[str]:
    violations = []
    degree_two = [v for v in range(g.n) if g.degrees[v] == 2]
    for path in internal_paths(g):
        length = len(path) - 1
        if length < 2:
            continue
        if length > 3:
            violations.append(f"chemin interne {path} de longueur {length} > 3")
            continue
        if length == 3:
            for end_degree in sorted({g.degrees[path[0]], g.degrees[path[-1]]}):
                for middle in degree_two:
                    first, second = g.adjacency[middle]
                    if g.degrees[first] == g.degrees[second] == end_degree:
                        violations.append(
                            f"chemin interne {path} de longueur 3 et chemin "
                            f"{first}-{middle}-{second} de degrés {end_degree}-2-{end_degree}"
                        )
                        break
    return violations


def _leaves_branch_vertex(g0: Graph, x: int, y: int) -> bool:
    low, high = sorted((g0.degrees[x], g0.degrees[y]))
    return low == 2 and high >= 3


def _pendant_cycle_violations(g: Graph, g0: Graph, original: Sequence[int], a, b) -> List[str]:
    violations = []
    for core_cycle in simple_cycles(g0):
        if any(g.degrees[original[v]] != a + b for v in core_cycle):
            continue
        closed = core_cycle + core_cycle[:1]
        if any(_leaves_branch_vertex(g0, x, y) for x, y in zip(closed, closed[1:])):
            cycle = tuple(original[v] for v in core_cycle)
            violations.append(f"cycle {cycle}: tous ses sommets sont de degré a + b = {a + b} malgré les pendants")
    return violations


def _root_five_violations(path, degrees, a, b) -> List[str]:
    length = len(path) - 1
    interior = degrees[1:-1]
    if length != 3 or interior[0] != interior[-1] or interior[0] not in (2, 3):
        return [f"cycle interne {path} de G_0 enraciné en degré 5: longueur {length}, degrés intérieurs {interior}"]
    if interior[0] == 3 and (degrees[0] != 5 or a != 3 or b != 0):
        return [f"cycle interne {path} de G_0 aux sommets de degré 3: d = {degrees[0]} à la racine, a = {a}, b = {b}"]
    return []


def _core_path_violations(g: Graph, g0: Graph, original: Sequence[int], a, b) -> List[str]:
    violations = []
    for core_path in internal_paths(g0):
        length = len(core_path) - 1
        if length < 3:
            continue
        ends = sorted((g0.degrees[core_path[0]], g0.degrees[core_path[-1]]))
        path = tuple(original[v] for v in core_path)
        degrees = [g.degrees[v] for v in path]
        interior = degrees[1:-1]
        cycle = path[0] == path[-1]
        if cycle and ends[0] == 5:
            violations.extend(_root_five_violations(path, degrees, a, b))
            continue
        if not ((ends[0] == ends[1] and ends[0] in _EQUAL_ROOTS) or ends == [3, 5]):
            continue

        if len(set(interior)) > 1:
            violations.append(f"chemin {path} de G_0: degrés intérieurs {interior} non constants")
        elif interior[0] not in (2, a + b):
            violations.append(f"chemin {path} de G_0: degrés intérieurs {interior} hors de {{2, a + b = {a + b}}}")
        if degrees[0] != degrees[-1]:
            violations.append(f"chemin {path} de G_0: extrémités de degrés {degrees[0]} et {degrees[-1]}")
        if 2 in (interior[0], interior[-1]) and length != 3:
            violations.append(f"chemin {path} de G_0: intérieur de degré 2 sur {length} arêtes au lieu de 3")
        if cycle:
            if length != 3 or any(d != 2 for d in interior):
                violations.append(f"cycle interne {path} de G_0: longueur {length}, degrés intérieurs {interior}")
            if ends[0] == 3 and a != 2:
                violations.append(f"cycle interne {path} de G_0 enraciné en degré 3 avec a = {a}")
    return violations


def audit_structure(g: Graph, verdict: Optional[LinearityVerdict] = None) -> List[str]:
    """
    :param g: Graphe tricyclique
    :param verdict: Verdict déjà calculé, recalculé si absent
    :return: Violations; vide pour un graphe non linéaire ou non tricyclique
    """
    if not is_tricyclic(g):
        return []
    if verdict is None:
        verdict = check_two_walk_linear(g)
    if not isinstance(verdict, Linear):
        return []

    violations = _path_violations(g)
    a, b = verdict.a, verdict.b

    pendants = pendant_vertices(g)
    g0, original = induced_subgraph(g, (v for v in range(g.n) if v not in pendants))
    core_is_base = False
    if not is_tricyclic(g0) or min(g0.degrees) < 2:
        violations.append("G_0 n'est pas une base tricyclique")
    else:
        try:
            base_type(g0)
            core_is_base = True
        except BaseTypeError as exc:
            violations.append(str(exc))

    for v in range(g.n):
        if v in pendants:
            continue
        core_degree = sum(1 for w in g.adjacency[v] if w not in pendants)
        if g.degrees[v] != core_degree and g.degrees[v] != a + b:
            violations.append(
                f"sommet {v}: d = {g.degrees[v]}, d_G0 = {core_degree}, a + b = {a + b}"
            )

    if pendants and (a < 2 or a + b < 3):
        violations.append(f"sommets pendants avec a = {a}, a + b = {a + b}")
    if pendants and core_is_base:
        violations.extend(_pendant_cycle_violations(g, g0, original, a, b))
        violations.extend(_core_path_violations(g, g0, original, a, b))
    return violations
