"""
Module: report.py
----------------
Structures de résultats: matrice des marches, rapport des valeurs propres
principales et rapport d'énumération par ordre.

Classes:
    WalkMatrix: Colonnes exactes A^k·1, k = 0..n-1
    MainEigenReport: Comptes exact et flottant des valeurs propres principales
    EnumerationReport: Bilan de la vérification du théorème à un ordre donné

Version: 1.0
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple


@dataclass(frozen=True)
class WalkMatrix:
    """
    :param n: Dimension
    :param columns: columns[k][v] = nombre de marches de longueur k partant de v
    """
    n: int
    columns: Tuple[Tuple[int, ...], ...]

    def entry(self, vertex: int, k: int) -> int:
        return self.columns[k][vertex]

    def rows(self) -> List[List[int]]:
        return [[column[v] for column in self.columns] for v in range(self.n)]


@dataclass(frozen=True)
class MainEigenReport:
    """
    :param exact_count: Rang de la matrice des marches
    :param float_count: Nombre de valeurs propres principales par projection (None si non calculé)
    :param main_values_float: Approximations des valeurs propres principales, décroissantes
    """
    exact_count: int
    float_count: Optional[int] = None
    main_values_float: Tuple[float, ...] = ()

    @property
    def agrees(self) -> bool:
        return self.float_count is None or self.float_count == self.exact_count

    def to_dict(self):
        return {
            "exact_count": self.exact_count,
            "float_count": self.float_count,
            "main_values_float": list(self.main_values_float),
        }


@dataclass
class EnumerationReport:
    """
    Bilan de la vérification à l'ordre n.

    Les listes de graph6 restent vides sur une implémentation correcte.
    known_omissions n'entre pas dans ok: ces graphes sont attendus.

    :param order: Nombre de sommets
    :param total: Classes d'isomorphie de graphes tricycliques connexes
    :param positives: Graphes à exactement deux valeurs propres principales
    :param classified: Graphes reconnus par le catalogue
    """
    order: int
    total: int = 0
    positives: int = 0
    classified: int = 0
    counterexamples: List[str] = field(default_factory=list)
    hagos_failures: List[str] = field(default_factory=list)
    float_disagreements: List[str] = field(default_factory=list)
    non_integral: List[str] = field(default_factory=list)
    audit_failures: List[str] = field(default_factory=list)
    classified_by_family: Dict[str, int] = field(default_factory=dict)
    # positifs à deux valeurs principales absents des tables, connus d'avance
    known_omissions: List[str] = field(default_factory=list)
    # graph6 des positifs, écrits à part (--dump-positives), hors JSON
    positive_graph6: List[str] = field(default_factory=list, repr=False)

    @property
    def ok(self) -> bool:
        return not (self.counterexamples or self.hagos_failures
                    or self.float_disagreements or self.non_integral
                    or self.audit_failures)

    def sort_lists(self):
        for values in (self.counterexamples, self.hagos_failures, self.float_disagreements,
                       self.non_integral, self.audit_failures, self.known_omissions,
                       self.positive_graph6):
            values.sort()

    def to_dict(self):
        return {
            "order": self.order,
            "total": self.total,
            "positives": self.positives,
            "classified": self.classified,
            "counterexamples": list(self.counterexamples),
            "hagos_failures": list(self.hagos_failures),
            "float_disagreements": list(self.float_disagreements),
            "non_integral": list(self.non_integral),
            "audit_failures": list(self.audit_failures),
            "known_omissions": list(self.known_omissions),
            "classified_by_family": dict(sorted(self.classified_by_family.items())),
        }
