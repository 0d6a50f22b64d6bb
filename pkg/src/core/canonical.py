"""
Module: canonical.py
-------------------
Forme canonique et test d'isomorphisme.

La forme canonique est obtenue par raffinement de couleurs (chaque sommet
reçoit sa couleur et le multiensemble des couleurs de ses voisins jusqu'à
stabilité), puis par individualisation en arbre: chaque feuille de l'arbre
de recherche fournit un étiquetage, et l'on retient celui dont la liste
d'arêtes renumérotées est lexicographiquement minimale.

Deux sommets jumeaux (mêmes voisinages ouverts ou fermés) d'une même
cellule cible donnent des sous-arbres isomorphes: un seul est exploré.
C'est ce qui garde la recherche polynomiale sur les graphes riches en
sommets pendants.

Fonctions:
    refine: Raffinement de couleurs jusqu'à stabilité
    canonical_labeling: Étiquetage canonique d'un graphe
    canonical_graph: Graphe renuméroté canoniquement
    canonical_form: Forme canonique sous forme d'octets (graph6 canonique)
    is_isomorphic: Test d'isomorphisme

Version: 1.0
"""

from typing import List, Optional, Sequence, Tuple

from src.core.graph_core import relabel
from src.core.graph_io import to_graph6
from src.models.graph import Graph

Code = Tuple[Tuple[int, int], ...]


def refine(g: Graph, colours: Sequence[int]) -> List[int]:
    """
    Raffine une coloration jusqu'à une partition équitable.

    Les nouvelles couleurs sont les rangs des signatures triées, donc
    l'ordre relatif des anciennes cellules est conservé et le résultat
    ne dépend pas de la numérotation des sommets.
    """
    current = list(colours)
    class_count = len(set(current))
    while True:
        signatures = [
            (current[v], tuple(sorted(current[w] for w in g.adjacency[v])))
            for v in range(g.n)
        ]
        ranking = {signature: rank for rank, signature in enumerate(sorted(set(signatures)))}
        refined = [ranking[signature] for signature in signatures]
        if len(ranking) == class_count:
            return refined
        current, class_count = refined, len(ranking)


def _individualize(colours: Sequence[int], vertex: int) -> List[int]:
    target = colours[vertex]
    return [
        2 * c + (1 if c == target and w != vertex else 0)
        for w, c in enumerate(colours)
    ]


def _target_cell(colours: Sequence[int]) -> Optional[List[int]]:
    cells = {}
    for v, c in enumerate(colours):
        cells.setdefault(c, []).append(v)
    for colour in sorted(cells):
        if len(cells[colour]) > 1:
            return cells[colour]
    return None


class _Search:
    def __init__(self, g: Graph):
        self.g = g
        self.open_keys = [g.neighbour_sets[v] for v in range(g.n)]
        self.closed_keys = [g.neighbour_sets[v] | {v} for v in range(g.n)]
        self.best_code: Optional[Code] = None
        self.best_labeling: Optional[List[int]] = None

    def _twins(self, u: int, v: int) -> bool:
        return self.open_keys[u] == self.open_keys[v] or self.closed_keys[u] == self.closed_keys[v]

    def _leaf(self, labeling: List[int]):
        code = tuple(sorted(
            (labeling[u], labeling[v]) if labeling[u] < labeling[v] else (labeling[v], labeling[u])
            for u, v in self.g.edges
        ))
        if self.best_code is None or code < self.best_code:
            self.best_code, self.best_labeling = code, labeling

    def run(self, colours: List[int]):
        cell = _target_cell(colours)
        if cell is None:
            self._leaf(colours)
            return
        tried: List[int] = []
        for v in cell:
            if any(self._twins(u, v) for u in tried):
                continue
            tried.append(v)
            self.run(refine(self.g, _individualize(colours, v)))


def canonical_labeling(g: Graph) -> List[int]:
    """labeling[v] = position canonique du sommet v"""
    if g.n == 0:
        return []
    search = _Search(g)
    search.run(refine(g, [0] * g.n))
    return search.best_labeling


def canonical_graph(g: Graph) -> Graph:
    return relabel(g, canonical_labeling(g))


def canonical_form(g: Graph) -> bytes:
    """Encodage graph6 du représentant canonique; égal ssi isomorphe"""
    return to_graph6(canonical_graph(g)).encode("ascii")


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    if sorted(g.degrees) != sorted(h.degrees):
        return False
    return canonical_form(g) == canonical_form(h)
