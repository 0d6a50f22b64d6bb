"""
Module: families.py
------------------
Constructeurs du catalogue de classification.

    - build_base: bases paramétrées T1..T8
    - build_H: graphes fixes H1..H30
    - build_G_family: familles paramétrées G1..G8
    - family_members_of_order / classify: recherche d'un graphe dans le catalogue
    - build_omission / known_omission: positifs connus hors des tables H et G

Les sommets des bases sont nommés comme sur les dessins: un chemin u de
paramètre n a les sommets u1..un (n sommets, n - 1 arêtes) et les
identifications de sommets de branchement se font par nom (par exemple
pour T8: u1 = v1 = w1 = O). Les décorations (sommets pendants) sont
ensuite posées par nom.

Version: 1.0
"""

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from src.core.canonical import canonical_form
from src.core.graph_core import GraphBuilder, complete_graph, add_pendants, is_tricyclic
from src.models.errors import InvalidGraphError, ParameterError
from src.models.family import (
    G_COUNT,
    G_PARAMETER_NAMES,
    H_COUNT,
    ExpectedLinearity,
    FamilyId,
    FamilyKind,
)
from src.models.graph import BaseType, Graph
from src.seed.base_catalog import BASE_PARAMETERS, G_TABLE, H_TABLE, OMISSIONS, OmissionEntry
from src.utils.logger_config import get_logger

logger = get_logger(__name__)


@dataclass
class _Drawing:
    """Graphe en construction et noms de ses sommets"""
    builder: GraphBuilder = field(default_factory=GraphBuilder)
    names: Dict[str, int] = field(default_factory=dict)

    def vertex(self, name: str) -> int:
        if name not in self.names:
            self.names[name] = self.builder.add_vertex()
        return self.names[name]

    def route(self, letter: str, first: int, last: int, count: int):
        """Chemin letter1 = first, ..., letter<count> = last"""
        vertices = self.builder.add_path(first, last, count - 1)
        for position, vertex in enumerate(vertices, 1):
            self.names[f"{letter}{position}"] = vertex

    def arm(self, letter: str, last: int, count: int) -> int:
        """Chemin pendant letter1..letter<count> = last; renvoie letter1"""
        if count == 1:
            self.names[f"{letter}1"] = last
            return last
        first = self.builder.add_vertex()
        self.route(letter, first, last, count)
        return first

    def triangle(self, at: int, first: str, second: str):
        x, y = self.vertex(first), self.vertex(second)
        self.builder.add_edge(at, x)
        self.builder.add_edge(x, y)
        self.builder.add_edge(y, at)

    def interior(self, letter: str, count: int) -> List[int]:
        """Sommets intérieurs letter2..letter<count-1>"""
        return [self.names[f"{letter}{i}"] for i in range(2, count)]


def _require(condition: bool, base: BaseType, message: str):
    if not condition:
        raise ParameterError(f"{base}: {message}")


def _at_least(base: BaseType, values: Dict[str, int], floor: int, keys: str):
    for key in keys:
        _require(values[key] >= floor, base, f"{key} = {values[key]} < {floor}")


def _draw_t1(v) -> _Drawing:
    _at_least(BaseType.T1, v, 1, "nmk")
    d = _Drawing()
    centre = d.vertex("c")
    d.triangle(d.arm("u", centre, v["n"]), "x5", "x6")
    d.triangle(d.arm("v", centre, v["m"]), "x3", "x4")
    d.triangle(d.arm("w", centre, v["k"]), "x1", "x2")
    return d


def _draw_t2(v) -> _Drawing:
    _at_least(BaseType.T2, v, 1, "kl")
    _at_least(BaseType.T2, v, 2, "nm")
    _require(not v["n"] == v["m"] == 2, BaseType.T2, "n = m = 2 crée une multi-arête")
    d = _Drawing()
    a, b = d.vertex("A"), d.vertex("B")
    d.route("u", a, b, v["n"])
    d.route("v", a, b, v["m"])
    d.triangle(d.arm("w", a, v["k"]), "x1", "x2")
    d.triangle(d.arm("r", b, v["l"]), "y1", "y2")
    return d


def _draw_t3(v) -> _Drawing:
    _at_least(BaseType.T3, v, 2, "nmk")
    _at_least(BaseType.T3, v, 1, "l")
    _require([v["n"], v["m"], v["k"]].count(2) <= 1, BaseType.T3,
             "au plus une des longueurs n, m, k peut valoir 2")
    d = _Drawing()
    p, q = d.vertex("P"), d.vertex("Q")
    for letter, key in (("u", "n"), ("v", "m"), ("w", "k")):
        d.route(letter, p, q, v[key])
    d.triangle(d.arm("r", q, v["l"]), "x1", "x2")
    return d


def _draw_t4(v) -> _Drawing:
    _at_least(BaseType.T4, v, 2, "nmpq")
    _at_least(BaseType.T4, v, 1, "k")
    _require(not v["n"] == v["m"] == 2, BaseType.T4, "n = m = 2 crée une multi-arête")
    d = _Drawing()
    p, q, r = d.vertex("P"), d.vertex("Q"), d.vertex("R")
    d.route("u", p, q, v["n"])
    d.route("v", p, q, v["m"])
    d.route("s", p, r, v["p"])
    d.route("t", q, r, v["q"])
    d.triangle(d.arm("w", r, v["k"]), "x1", "x2")
    return d


def _draw_t5(v) -> _Drawing:
    _at_least(BaseType.T5, v, 2, "nmkpq")
    _require(not v["m"] == v["p"] == 2, BaseType.T5, "m = p = 2 crée une multi-arête")
    _require(not v["k"] == v["q"] == 2, BaseType.T5, "k = q = 2 crée une multi-arête")
    d = _Drawing()
    p, q, r = d.vertex("P"), d.vertex("Q"), d.vertex("R")
    d.route("u", p, q, v["n"])
    d.route("v", p, r, v["m"])
    d.route("s", p, r, v["p"])
    d.route("w", r, q, v["k"])
    d.route("t", r, q, v["q"])
    return d


def _draw_t6(v) -> _Drawing:
    _at_least(BaseType.T6, v, 2, "nmkp")
    _require([v[key] for key in "nmkp"].count(2) <= 1, BaseType.T6,
             "au plus une des longueurs peut valoir 2")
    d = _Drawing()
    p, q = d.vertex("P"), d.vertex("Q")
    for letter, key in (("u", "n"), ("v", "m"), ("w", "k"), ("s", "p")):
        d.route(letter, p, q, v[key])
    return d


def _draw_t7(v) -> _Drawing:
    _at_least(BaseType.T7, v, 2, "nmklpq")
    _require(not v["n"] == v["k"] == 2, BaseType.T7, "n = k = 2 crée une multi-arête")
    _require(not v["m"] == v["l"] == 2, BaseType.T7, "m = l = 2 crée une multi-arête")
    d = _Drawing()
    a, b, c, e = (d.vertex(name) for name in "ABCD")
    d.route("u", a, b, v["n"])
    d.route("w", a, b, v["k"])
    d.route("v", c, e, v["m"])
    d.route("r", c, e, v["l"])
    d.route("s", a, c, v["p"])
    d.route("t", b, e, v["q"])
    return d


def _draw_t8(v) -> _Drawing:
    _at_least(BaseType.T8, v, 2, "nmklpq")
    d = _Drawing()
    o, x, y, z = (d.vertex(name) for name in "OXYZ")
    d.route("u", o, x, v["n"])
    d.route("v", o, y, v["m"])
    d.route("w", o, z, v["k"])
    d.route("t", x, y, v["q"])
    d.route("r", y, z, v["l"])
    d.route("s", z, x, v["p"])
    return d


_DRAWERS = {
    BaseType.T1: _draw_t1,
    BaseType.T2: _draw_t2,
    BaseType.T3: _draw_t3,
    BaseType.T4: _draw_t4,
    BaseType.T5: _draw_t5,
    BaseType.T6: _draw_t6,
    BaseType.T7: _draw_t7,
    BaseType.T8: _draw_t8,
}


def _draw_base(t: BaseType, lengths: Sequence[int]) -> Tuple[_Drawing, Dict[str, int]]:
    t = BaseType(t)
    names = BASE_PARAMETERS[t]
    if len(lengths) != len(names):
        raise ParameterError(f"{t} attend {len(names)} longueurs ({', '.join(names)}), reçu {len(lengths)}")
    values = dict(zip(names, (int(x) for x in lengths)))
    try:
        return _DRAWERS[t](values), values
    except InvalidGraphError as exc:
        raise ParameterError(f"{t}{tuple(lengths)}: {exc}") from exc


def build_base(t: BaseType, lengths: Sequence[int]) -> Graph:
    """
    Base Ti de longueurs données (ordre des longueurs: BASE_PARAMETERS).

    :raises ParameterError: Longueurs sous les planchers ou multi-arête
    """
    drawing, _ = _draw_base(t, lengths)
    return drawing.builder.build()


def _with_pendants(t: BaseType, lengths: Sequence[int], pendants: Sequence[str]) -> Graph:
    drawing, _ = _draw_base(t, lengths)
    for name in pendants:
        drawing.builder.add_pendants(drawing.names[name], 1)
    return drawing.builder.build()


def build_H(i: int) -> Graph:
    if i not in H_TABLE:
        raise ParameterError(f"H{i}: indice hors de 1..{H_COUNT}")
    entry = H_TABLE[i]
    return _with_pendants(entry.base, entry.lengths, entry.pendants)


def build_omission(entry: OmissionEntry) -> Graph:
    return _with_pendants(entry.base, entry.lengths, entry.pendants)


def known_omission(g: Graph) -> Optional[OmissionEntry]:
    """Entrée de OMISSIONS isomorphe à g, None sinon"""
    candidates = [entry for entry in OMISSIONS if entry.order == g.n]
    if not candidates:
        return None
    code = canonical_form(g).decode("ascii")
    return next((entry for entry in candidates if entry.graph6 == code), None)


def _decorated(t: BaseType, lengths: Sequence[int], decorations: Sequence[Tuple[str, str, int]]) -> Graph:
    """decorations: (lettre du chemin, paramètre de longueur, pendants par sommet intérieur)"""
    drawing, values = _draw_base(t, lengths)
    for letter, key, per_vertex in decorations:
        for vertex in drawing.interior(letter, values[key]):
            drawing.builder.add_pendants(vertex, per_vertex)
    return drawing.builder.build()


def build_G_family(j: int, *params: int) -> Graph:
    """
    Membre de la famille Gj.

    G1(l1), G4(l1): l1 sommets intérieurs portant chacun deux pendants.
    G7(b): K4 avec b pendants sur chaque sommet.
    Autres (k1, k2): k1 et k2 sommets intérieurs portant chacun un pendant
    sur les deux chemins décorés.

    :raises ParameterError: contraintes l1, b >= 1 et max(k1, k2) >= 1
    """
    family = FamilyId.g(j, *params)
    if j == 1:
        (l1,) = family.params
        return _decorated(BaseType.T2, (4, l1 + 2, 1, 1), [("v", "m", 2)])
    if j == 2:
        k1, k2 = family.params
        return _decorated(BaseType.T2, (4, 4, k1 + 2, k2 + 2), [("w", "k", 1), ("r", "l", 1)])
    if j == 3:
        k1, k2 = family.params
        return _decorated(BaseType.T4, (k1 + 2, 4, 4, 4, k2 + 2), [("u", "n", 1), ("w", "k", 1)])
    if j == 4:
        (l1,) = family.params
        return _decorated(BaseType.T6, (l1 + 2, 4, 4, 4), [("u", "n", 2)])
    if j == 5:
        k1, k2 = family.params
        return _decorated(BaseType.T7, (4, 4, 4, 4, k1 + 2, k2 + 2), [("s", "p", 1), ("t", "q", 1)])
    if j == 6:
        k1, k2 = family.params
        return _decorated(BaseType.T7, (4, 4, k2 + 2, k1 + 2, 4, 4), [("r", "l", 1), ("w", "k", 1)])
    if j == 7:
        (b,) = family.params
        g = complete_graph(4)
        for vertex in range(4):
            g = add_pendants(g, vertex, b)
        return g
    k1, k2 = family.params
    return _decorated(BaseType.T8, (4, 4, k1 + 2, 4, 4, k2 + 2), [("w", "k", 1), ("t", "q", 1)])


def build_family(family: FamilyId) -> Graph:
    if family.kind is FamilyKind.H:
        return build_H(family.index)
    return build_G_family(family.index, *family.params)


def family_order(j: int, params: Sequence[int]) -> int:
    """Nombre de sommets de Gj(params), sans le construire"""
    FamilyId.g(j, *params)
    if j in (1, 4):
        return 3 * params[0] + 8
    if j == 7:
        return 4 + 4 * params[0]
    return 12 + 2 * sum(params)


def family_parameter_names(j: int) -> Tuple[str, ...]:
    if j not in G_PARAMETER_NAMES:
        raise ParameterError(f"G{j}: indice hors de 1..{G_COUNT}")
    return G_PARAMETER_NAMES[j]


def _parameters_of_order(j: int, n: int) -> List[Tuple[int, ...]]:
    if j in (1, 4):
        return [(((n - 8) // 3),)] if n >= 11 and (n - 8) % 3 == 0 else []
    if j == 7:
        return [((n - 4) // 4,)] if n >= 8 and n % 4 == 0 else []
    if n < 14 or n % 2:
        return []
    total = (n - 12) // 2
    return [(k1, total - k1) for k1 in range(total + 1)]


def expected_linearity(family: FamilyId) -> ExpectedLinearity:
    if family.kind is FamilyKind.H:
        entry = H_TABLE[family.index]
        return ExpectedLinearity(family, entry.a, entry.b)
    entry = G_TABLE[family.index]
    b = family.params[0] if entry.b is None else entry.b
    return ExpectedLinearity(family, entry.a, b)


def lemma_base_type(family: FamilyId) -> BaseType:
    """Type de base dont provient le membre du catalogue"""
    if family.kind is FamilyKind.H:
        return H_TABLE[family.index].base
    return G_TABLE[family.index].base


@lru_cache(maxsize=None)
def _catalog_of_order(n: int) -> Tuple[Tuple[FamilyId, Graph, bytes], ...]:
    candidates = [FamilyId.h(i) for i in sorted(H_TABLE) if H_TABLE[i].order == n]
    for j in range(1, G_COUNT + 1):
        candidates.extend(FamilyId.g(j, *params) for params in _parameters_of_order(j, n))

    members = []
    seen: Dict[bytes, FamilyId] = {}
    for family in candidates:
        g = build_family(family)
        form = canonical_form(g)
        if form in seen:
            logger.info(f"{family} isomorphe à {seen[form]}: conservé sous {seen[form]}")
            continue
        seen[form] = family
        members.append((family, g, form))
    logger.debug(f"catalogue d'ordre {n}: {len(members)} membre(s)")
    return tuple(members)


def family_members_of_order(n: int) -> List[Tuple[FamilyId, Graph]]:
    """
    Membres du catalogue à exactement n sommets, sans doublon d'isomorphie.

    Ordre fixe: H avant G, indices puis paramètres croissants; en cas de
    collision c'est le premier identifiant qui est conservé.
    """
    if n < 1:
        raise ParameterError(f"ordre {n} < 1")
    return [(family, g) for family, g, _ in _catalog_of_order(n)]


def catalog_members(max_order: int) -> List[Tuple[FamilyId, Graph]]:
    members = []
    for n in range(1, max_order + 1):
        members.extend(family_members_of_order(n))
    return members


def classify(g: Graph) -> Optional[FamilyId]:
    """Identifiant du membre du catalogue isomorphe à g, None sinon"""
    if g.n < 1 or not is_tricyclic(g):
        return None
    members = _catalog_of_order(g.n)
    if not members:
        return None
    form = canonical_form(g)
    for family, _, member_form in members:
        if member_form == form:
            return family
    return None
