"""
Module: graph_core.py
--------------------
Opérations structurelles sur les graphes: construction, connexité,
tricyclicité, sommets pendants, extraction de G_0 et de la base G_B,
contraction de la base en multigraphe réduit et chemins internes.

Toutes les fonctions sont pures et travaillent sur des Graph immuables;
elles peuvent être appelées depuis plusieurs threads sans verrou.

Fonctions:
    from_edge_list: Construit un Graph normalisé
    is_connected / is_tricyclic / is_unicyclic / is_bicyclic
    pendant_vertices: Sommets de degré 1
    strip_pendants_once: G_0, une seule passe de suppression
    base: G_B, suppression itérée jusqu'au point fixe
    reduce_base: Contraction des sommets de degré 2 en arcs
    internal_paths: Chemins et cycles internes avec leur longueur
    simple_cycles: Cycles élémentaires, un représentant par cycle

Classes:
    GraphBuilder: Assemblage incrémental utilisé par les constructeurs

Version: 1.0
"""

from collections import deque
from typing import Dict, Iterable, List, Sequence, Set, Tuple

from src.models.errors import InvalidGraphError
from src.models.graph import Arc, Graph, ReducedMultigraph


def from_edge_list(n: int, pairs: Iterable[Sequence[int]]) -> Graph:
    """
    Normalise une liste de paires en Graph.

    Les doublons et les paires inversées fusionnent en une seule arête.

    :raises InvalidGraphError: Boucle ou extrémité hors de 0..n-1
    """
    if n < 0:
        raise InvalidGraphError(f"nombre de sommets négatif: {n}")
    normalized = set()
    for pair in pairs:
        u, v = int(pair[0]), int(pair[1])
        if u == v:
            raise InvalidGraphError(f"boucle interdite sur le sommet {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidGraphError(f"arête ({u}, {v}) hors bornes pour n={n}")
        normalized.add((u, v) if u < v else (v, u))
    return Graph(n, tuple(sorted(normalized)))


def _check_vertex(g: Graph, v: int):
    if not 0 <= v < g.n:
        raise InvalidGraphError(f"sommet {v} hors de 0..{g.n - 1}")


def degree(g: Graph, v: int) -> int:
    _check_vertex(g, v)
    return g.degrees[v]


def neighbors(g: Graph, v: int) -> Tuple[int, ...]:
    _check_vertex(g, v)
    return g.adjacency[v]


def is_connected(g: Graph) -> bool:
    """Parcours en largeur depuis le sommet 0"""
    if g.n == 0:
        return False
    seen = [False] * g.n
    seen[0] = True
    queue = deque([0])
    reached = 1
    while queue:
        v = queue.popleft()
        for w in g.adjacency[v]:
            if not seen[w]:
                seen[w] = True
                reached += 1
                queue.append(w)
    return reached == g.n


def is_tricyclic(g: Graph) -> bool:
    return g.m == g.n + 2 and is_connected(g)


def is_bicyclic(g: Graph) -> bool:
    return g.m == g.n + 1 and is_connected(g)


def is_unicyclic(g: Graph) -> bool:
    return g.m == g.n and is_connected(g)


def is_regular(g: Graph) -> bool:
    return len(set(g.degrees)) <= 1


def pendant_vertices(g: Graph) -> Set[int]:
    return {v for v, d in enumerate(g.degrees) if d == 1}


def induced_subgraph(g: Graph, keep: Iterable[int]) -> Tuple[Graph, List[int]]:
    """
    Sous-graphe induit, renuméroté dans l'ordre croissant des sommets gardés.

    :return: (sous-graphe, liste des sommets d'origine indexée par nouveau sommet)
    """
    kept = sorted(set(keep))
    index = {v: i for i, v in enumerate(kept)}
    edges = [(index[u], index[v]) for u, v in g.edges if u in index and v in index]
    return from_edge_list(len(kept), edges), kept


def strip_pendants_once(g: Graph) -> Graph:
    """G_0: supprime en une seule passe tous les sommets de degré 1"""
    pendants = pendant_vertices(g)
    return induced_subgraph(g, (v for v in range(g.n) if v not in pendants))[0]


def base_vertices(g: Graph) -> List[int]:
    """Sommets de g qui survivent à l'élagage itéré des sommets pendants"""
    degrees = list(g.degrees)
    removed = [False] * g.n
    stack = [v for v in range(g.n) if degrees[v] == 1]
    while stack:
        v = stack.pop()
        if removed[v] or degrees[v] != 1:
            continue
        removed[v] = True
        for w in g.adjacency[v]:
            if not removed[w]:
                degrees[w] -= 1
                degrees[v] -= 1
                if degrees[w] == 1:
                    stack.append(w)
    return [v for v in range(g.n) if not removed[v]]


def base(g: Graph) -> Graph:
    """
    G_B: supprime les sommets pendants jusqu'à ce qu'il n'en reste aucun.

    :raises InvalidGraphError: g n'est pas tricyclique
    """
    if not is_tricyclic(g):
        raise InvalidGraphError(f"{g} n'est pas tricyclique")
    return induced_subgraph(g, base_vertices(g))[0]


def reduce_base(b: Graph) -> ReducedMultigraph:
    """
    Contracte chaque suite de sommets de degré 2 d'une base en un arc.

    Les sommets de branchement (degré >= 3) sont renumérotés 0..k-1 dans
    l'ordre croissant.

    :param b: Base tricyclique (degré minimum >= 2)
    """
    if any(d < 2 for d in b.degrees):
        raise InvalidGraphError("la base contient un sommet de degré < 2")
    branch = [v for v in range(b.n) if b.degrees[v] >= 3]
    if not branch:
        raise InvalidGraphError("base sans sommet de branchement")
    index = {v: i for i, v in enumerate(branch)}
    used: Set[Tuple[int, int]] = set()
    arcs = []
    for start in branch:
        for first in b.adjacency[start]:
            if _edge_key(start, first) in used:
                continue
            previous, current, length = start, first, 1
            used.add(_edge_key(previous, current))
            while current not in index:
                a, c = b.adjacency[current]
                following = c if a == previous else a
                used.add(_edge_key(current, following))
                previous, current = current, following
                length += 1
            i, j = sorted((index[start], index[current]))
            arcs.append(Arc(i, j, length))
    return ReducedMultigraph(len(branch), tuple(sorted(arcs)))


def _edge_key(u: int, v: int) -> Tuple[int, int]:
    return (u, v) if u < v else (v, u)


def internal_paths(g: Graph) -> List[Tuple[int, ...]]:
    """
    Chemins internes et cycles internes de g.

    Un chemin interne relie deux sommets de degré > 2 en ne traversant que
    des sommets de degré 2 (degrés pris dans g); c'est un cycle interne
    lorsque ses extrémités coïncident. Chaque chemin est renvoyé une seule
    fois sous forme de suite de sommets; sa longueur est len(path) - 1.
    """
    found: Dict[Tuple[int, ...], None] = {}
    for start in range(g.n):
        if g.degrees[start] <= 2:
            continue
        for first in g.adjacency[start]:
            path = [start, first]
            previous, current = start, first
            while g.degrees[current] == 2 and current != start:
                a, c = g.adjacency[current]
                following = c if a == previous else a
                path.append(following)
                previous, current = current, following
            if g.degrees[current] <= 2 and current != start:
                continue
            forward, backward = tuple(path), tuple(reversed(path))
            found.setdefault(min(forward, backward), None)
    return sorted(found)


def simple_cycles(g: Graph) -> List[Tuple[int, ...]]:
    """
    Cycles élémentaires de g, chacun une seule fois.

    Un cycle commence à son plus petit sommet et son deuxième sommet est
    inférieur au dernier. Le nombre de cycles croît exponentiellement
    avec le nombre cyclomatique: au plus 7 pour un graphe tricyclique.
    """
    cycles = []
    for start in range(g.n):
        stack = [(start, (start,))]
        while stack:
            current, path = stack.pop()
            for w in g.adjacency[current]:
                if w == start and len(path) >= 3 and path[1] < path[-1]:
                    cycles.append(path)
                elif w > start and w not in path:
                    stack.append((w, path + (w,)))
    return sorted(cycles)


class GraphBuilder:
    """
    Assemblage incrémental d'un graphe simple.

    Les sommets sont numérotés dans l'ordre de création. Une arête déjà
    présente lève InvalidGraphError: les constructeurs de familles
    s'appuient sur ce contrôle pour refuser les multi-arêtes.
    """

    def __init__(self, n: int = 0):
        self.n = n
        self._edges: Set[Tuple[int, int]] = set()

    def add_vertex(self) -> int:
        self.n += 1
        return self.n - 1

    def add_vertices(self, count: int) -> List[int]:
        return [self.add_vertex() for _ in range(count)]

    def add_edge(self, u: int, v: int):
        if u == v:
            raise InvalidGraphError(f"boucle sur le sommet {u}")
        key = _edge_key(u, v)
        if key in self._edges:
            raise InvalidGraphError(f"multi-arête {key}")
        self._edges.add(key)

    def add_path(self, u: int, v: int, length: int) -> List[int]:
        """
        Relie u à v par un chemin de `length` arêtes.

        :return: Sommets du chemin, extrémités comprises
        """
        if length < 1:
            raise InvalidGraphError(f"longueur de chemin {length} < 1")
        vertices = [u] + self.add_vertices(length - 1) + [v]
        for a, b in zip(vertices, vertices[1:]):
            self.add_edge(a, b)
        return vertices

    def add_cycle_at(self, v: int, length: int) -> List[int]:
        """Ajoute un cycle de `length` arêtes passant par v"""
        if length < 3:
            raise InvalidGraphError(f"cycle de longueur {length} < 3")
        return self.add_path(v, v, length)

    def add_pendants(self, v: int, count: int) -> List[int]:
        leaves = self.add_vertices(count)
        for leaf in leaves:
            self.add_edge(v, leaf)
        return leaves

    def build(self) -> Graph:
        return Graph(self.n, tuple(sorted(self._edges)))


def path_graph(n: int) -> Graph:
    """P_n: n sommets, n - 1 arêtes"""
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InvalidGraphError(f"C_{n} n'existe pas (n >= 3 requis)")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(leaves: int) -> Graph:
    """K_{1,k}, centre 0"""
    return from_edge_list(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shifted = [(u + g.n, v + g.n) for u, v in h.edges]
    return from_edge_list(g.n + h.n, list(g.edges) + shifted)


def add_pendants(g: Graph, v: int, count: int) -> Graph:
    """Accroche `count` nouveaux sommets pendants au sommet v"""
    _check_vertex(g, v)
    return from_edge_list(g.n + count, list(g.edges) + [(v, g.n + i) for i in range(count)])


def relabel(g: Graph, permutation: Sequence[int]) -> Graph:
    """Renumérote: le sommet v devient permutation[v]"""
    if sorted(permutation) != list(range(g.n)):
        raise InvalidGraphError("la renumérotation n'est pas une permutation de 0..n-1")
    return from_edge_list(g.n, [(permutation[u], permutation[v]) for u, v in g.edges])
