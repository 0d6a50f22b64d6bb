"""
Module: family.py
----------------
Identifiants des membres du catalogue de classification.

Le catalogue se compose de 30 graphes fixes H1..H30 et de 8 familles
paramétrées G1..G8. Un FamilyId valide ses paramètres à la construction,
ce qui garantit qu'aucun identifiant hors des contraintes des familles
ne circule dans le code.

Classes:
    FamilyKind: H (graphe fixe) ou G (famille paramétrée)
    FamilyId: Étiquette + vecteur de paramètres entiers
    ExpectedLinearity: Couple (a, b) attendu pour un membre

Attributs:
    H_COUNT: Nombre de graphes fixes
    G_COUNT: Nombre de familles
    G_PARAMETER_NAMES: Noms des paramètres de chaque famille

Version: 1.0
"""

import re
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Tuple

from src.models.errors import ParameterError

H_COUNT = 30
G_COUNT = 8

G_PARAMETER_NAMES: Dict[int, Tuple[str, ...]] = {
    1: ("l1",),
    2: ("k1", "k2"),
    3: ("k1", "k2"),
    4: ("l1",),
    5: ("k1", "k2"),
    6: ("k1", "k2"),
    7: ("b",),
    8: ("k1", "k2"),
}

_ID_PATTERN = re.compile(r"^\s*([HG])\s*(\d+)\s*(?:[:(]\s*([-\d,\s]*)\)?)?\s*$", re.IGNORECASE)


class FamilyKind(Enum):
    H = "H"
    G = "G"


@dataclass(frozen=True)
class FamilyId:
    """
    :param kind: H ou G
    :param index: 1..30 pour H, 1..8 pour G
    :param params: Vecteur de paramètres (vide pour H)
    """
    kind: FamilyKind
    index: int
    params: Tuple[int, ...] = ()

    def __post_init__(self):
        if self.kind is FamilyKind.H:
            if not 1 <= self.index <= H_COUNT:
                raise ParameterError(f"H{self.index}: indice hors de 1..{H_COUNT}")
            if self.params:
                raise ParameterError(f"H{self.index} ne prend pas de paramètres")
            return
        if not 1 <= self.index <= G_COUNT:
            raise ParameterError(f"G{self.index}: indice hors de 1..{G_COUNT}")
        names = G_PARAMETER_NAMES[self.index]
        if len(self.params) != len(names):
            raise ParameterError(
                f"G{self.index} attend {len(names)} paramètre(s) ({', '.join(names)}), "
                f"reçu {len(self.params)}"
            )
        if any(value < 0 for value in self.params):
            raise ParameterError(f"G{self.index}: paramètres négatifs {self.params}")
        # l1 >= 1, b >= 1 et max(k1, k2) >= 1
        if max(self.params) < 1:
            raise ParameterError(
                f"G{self.index}{self.params}: au moins un paramètre doit valoir 1 ou plus"
            )

    @classmethod
    def h(cls, index: int) -> "FamilyId":
        return cls(FamilyKind.H, index)

    @classmethod
    def g(cls, index: int, *params: int) -> "FamilyId":
        return cls(FamilyKind.G, index, tuple(params))

    @classmethod
    def parse(cls, text: str) -> "FamilyId":
        """Lit "H7", "G2:1,0" ou "G2(1,0)" """
        match = _ID_PATTERN.match(text)
        if not match:
            raise ParameterError(f"identifiant de famille illisible: {text!r}")
        kind = FamilyKind(match.group(1).upper())
        raw = match.group(3)
        params: Tuple[int, ...] = ()
        if raw and raw.strip():
            try:
                params = tuple(int(part) for part in raw.split(","))
            except ValueError as exc:
                raise ParameterError(f"paramètres illisibles: {raw!r}") from exc
        return cls(kind, int(match.group(2)), params)

    def label(self) -> str:
        return f"{self.kind.value}{self.index}"

    def __str__(self):
        if not self.params:
            return self.label()
        return f"{self.label()}({','.join(str(p) for p in self.params)})"


@dataclass(frozen=True)
class ExpectedLinearity:
    """
    :param family: Membre du catalogue
    :param a: Pente attendue
    :param b: Ordonnée attendue (égale au paramètre b pour G7)
    """
    family: FamilyId
    a: int
    b: int

    def to_dict(self):
        return {"family": str(self.family), "a": self.a, "b": self.b}
