"""
Module: base_catalog.py
----------------------
Données littérales du catalogue.

REDUCED_SHAPES liste, pour chacun des 8 types de bases, les multigraphes
réduits possibles (sommets de branchement et arcs, longueurs oubliées).
Un type peut en avoir plusieurs: par exemple trois cycles liés par un arbre
se contractent différemment selon que les points d'attache coïncident ou
non. Les 15 formes couvrent toutes les bases tricycliques (degré minimum 2).

H_TABLE décrit chaque graphe fixe Hi comme une base Ti paramétrée, les
sommets qui reçoivent un sommet pendant (noms des sommets de la base) et
le couple (a, b) attendu.

G_TABLE donne, pour chaque famille Gj, le type de base dont elle provient
et la pente a attendue (b vaut 1 ou 2, ou le paramètre b pour G7).

OMISSIONS liste les graphes 2-linéaires connus qui échappent aux deux tables.

Version: 1.0
"""

from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from src.models.graph import BaseType

Shape = Tuple[Tuple[int, int], ...]

# (nombre de sommets de branchement, arcs); (i, i) est une boucle
REDUCED_SHAPES: Dict[BaseType, Tuple[Tuple[int, Shape], ...]] = {
    BaseType.T1: (
        (1, ((0, 0), (0, 0), (0, 0))),
        (2, ((0, 0), (0, 1), (1, 1), (1, 1))),
        (3, ((0, 0), (0, 1), (1, 1), (1, 2), (2, 2))),
        (4, ((0, 1), (0, 2), (0, 3), (1, 1), (2, 2), (3, 3))),
    ),
    BaseType.T2: (
        (2, ((0, 0), (0, 1), (0, 1), (1, 1))),
        (3, ((0, 1), (0, 1), (0, 2), (1, 1), (2, 2))),
        (4, ((0, 1), (0, 1), (0, 2), (1, 3), (2, 2), (3, 3))),
    ),
    BaseType.T3: (
        (2, ((0, 1), (0, 1), (0, 1), (1, 1))),
        (3, ((0, 1), (0, 1), (0, 1), (1, 2), (2, 2))),
    ),
    BaseType.T4: (
        (3, ((0, 1), (0, 1), (0, 2), (1, 2), (2, 2))),
        (4, ((0, 1), (0, 1), (0, 2), (1, 2), (2, 3), (3, 3))),
    ),
    BaseType.T5: (
        (3, ((0, 1), (0, 2), (0, 2), (1, 2), (1, 2))),
    ),
    BaseType.T6: (
        (2, ((0, 1), (0, 1), (0, 1), (0, 1))),
    ),
    BaseType.T7: (
        (4, ((0, 1), (0, 1), (0, 2), (1, 3), (2, 3), (2, 3))),
    ),
    BaseType.T8: (
        (4, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))),
    ),
}

# Noms des longueurs de chaque Ti, dans l'ordre attendu par build_base
BASE_PARAMETERS: Dict[BaseType, Tuple[str, ...]] = {
    BaseType.T1: ("n", "m", "k"),
    BaseType.T2: ("n", "m", "k", "l"),
    BaseType.T3: ("n", "m", "k", "l"),
    BaseType.T4: ("n", "m", "p", "q", "k"),
    BaseType.T5: ("n", "m", "k", "p", "q"),
    BaseType.T6: ("n", "m", "k", "p"),
    BaseType.T7: ("n", "m", "k", "l", "p", "q"),
    BaseType.T8: ("n", "m", "k", "l", "p", "q"),
}


@dataclass(frozen=True)
class HEntry:
    """
    :param base: Type de la base Ti
    :param lengths: Longueurs dans l'ordre de BASE_PARAMETERS
    :param pendants: Sommets de la base recevant chacun un sommet pendant
    :param a: Pente attendue
    :param b: Ordonnée attendue
    :param order: Nombre de sommets
    """
    base: BaseType
    lengths: Tuple[int, ...]
    pendants: Tuple[str, ...]
    a: int
    b: int
    order: int


T = BaseType

H_TABLE: Dict[int, HEntry] = {
    1: HEntry(T.T1, (1, 1, 1), (), 1, 6, 7),
    2: HEntry(T.T1, (4, 4, 4), (), 1, 3, 16),
    3: HEntry(T.T2, (2, 4, 1, 1), (), 2, 2, 8),
    4: HEntry(T.T2, (4, 4, 1, 1), (), 1, 4, 10),
    5: HEntry(T.T2, (4, 4, 2, 2), (), 2, 1, 12),
    6: HEntry(T.T2, (4, 4, 4, 4), (), 1, 3, 16),
    7: HEntry(T.T3, (3, 3, 3, 1), ("u2", "v2", "w2", "x1", "x2"), 3, 0, 12),
    8: HEntry(T.T4, (3, 3, 2, 2, 1), (), 2, 2, 7),
    9: HEntry(T.T4, (4, 2, 4, 4, 2), (), 2, 1, 12),
    10: HEntry(T.T4, (4, 4, 4, 4, 4), (), 1, 3, 16),
    11: HEntry(T.T6, (3, 3, 3, 3), ("u2", "v2", "w2", "s2"), 3, 0, 10),
    12: HEntry(T.T6, (3, 3, 2, 3), (), 1, 6, 5),
    13: HEntry(T.T6, (3, 3, 3, 3), (), 0, 8, 6),
    14: HEntry(T.T6, (4, 4, 2, 4), (), 2, 2, 8),
    15: HEntry(T.T6, (4, 4, 4, 4), (), 1, 4, 10),
    16: HEntry(T.T7, (3, 3, 2, 2, 2, 2), (), 2, 2, 6),
    17: HEntry(T.T7, (3, 3, 2, 2, 3, 3), (), 1, 4, 8),
    18: HEntry(T.T7, (3, 3, 3, 3, 2, 2), (), 1, 4, 8),
    19: HEntry(T.T7, (3, 3, 3, 3, 3, 3), (), 0, 6, 10),
    20: HEntry(T.T7, (4, 4, 2, 2, 2, 2), (), 3, -1, 8),
    21: HEntry(T.T7, (4, 4, 2, 2, 4, 4), (), 2, 1, 12),
    22: HEntry(T.T7, (4, 4, 4, 4, 2, 2), (), 2, 1, 12),
    23: HEntry(T.T7, (4, 4, 4, 4, 4, 4), (), 1, 3, 16),
    24: HEntry(T.T8, (3, 2, 2, 3, 2, 2), (), 2, 2, 6),
    25: HEntry(T.T8, (3, 2, 3, 3, 2, 3), (), 1, 4, 8),
    26: HEntry(T.T8, (3, 3, 3, 3, 3, 3), (), 0, 6, 10),
    27: HEntry(T.T8, (4, 2, 2, 4, 2, 2), (), 3, -1, 8),
    28: HEntry(T.T8, (4, 2, 4, 4, 2, 4), (), 2, 1, 12),
    29: HEntry(T.T8, (4, 4, 4, 4, 4, 4), (), 1, 3, 16),
    30: HEntry(T.T8, (2, 2, 2, 3, 3, 3), ("O",), 2, 2, 8),
}


@dataclass(frozen=True)
class GEntry:
    """
    :param base: Type de base de la famille
    :param a: Pente attendue
    :param b: Ordonnée attendue, None lorsqu'elle vaut le paramètre b
    """
    base: BaseType
    a: int
    b: Optional[int]


G_TABLE: Dict[int, GEntry] = {
    1: GEntry(T.T2, 2, 2),
    2: GEntry(T.T2, 2, 1),
    3: GEntry(T.T4, 2, 1),
    4: GEntry(T.T6, 2, 2),
    5: GEntry(T.T7, 2, 1),
    6: GEntry(T.T7, 2, 1),
    7: GEntry(T.T8, 3, None),
    8: GEntry(T.T8, 2, 1),
}


@dataclass(frozen=True)
class OmissionEntry:
    """
    Graphe tricyclique 2-linéaire absent des tables H et G.

    :param graph6: Forme canonique (graph6 du représentant canonique)
    :param base: Type de la base
    :param lengths: Longueurs dans l'ordre de BASE_PARAMETERS
    :param pendants: Sommets de la base recevant chacun un sommet pendant
    """
    graph6: str
    base: BaseType
    lengths: Tuple[int, ...]
    pendants: Tuple[str, ...]
    a: int
    b: int
    order: int


# Positifs rencontrés par l'énumération (structurée jusqu'à 10 sommets) que
# ni Hi ni Gj ne reconnaissent. Ils sont rapportés à part des contre-exemples.
# T6(2, 3, 3, 4): la route u se réduit à l'arête P-Q et S(P) = 4 + 3 + 3 + 2 = 12 = 3·4.
OMISSIONS: Tuple[OmissionEntry, ...] = (
    OmissionEntry("G@`@W{", T.T6, (2, 3, 3, 4), ("v2", "w2"), 3, 0, 8),
    OmissionEntry("I@??WYaSW", T.T7, (3, 2, 3, 4, 2, 2), ("C", "D"), 2, 2, 10),
)
