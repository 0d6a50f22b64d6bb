"""
Module: verdict.py
-----------------
Verdicts du test de 2-linéarité des marches.

Classes:
    Regular: Tous les degrés sont égaux, (a, b) n'est pas unique
    Linear: S(v) = a·d(v) + b en chaque sommet, a et b rationnels exacts
    NotLinear: Premier sommet où l'égalité échoue

Les verdicts se sérialisent en unions étiquetées via to_dict(), avec les
rationnels écrits sous forme de chaîne ("3", "-1", "3/2") pour rester exacts
en JSON.

Version: 1.0
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Union


def format_rational(value: Fraction) -> str:
    """Écrit un rationnel sans perte: entier nu ou p/q"""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class Regular:
    degree: int

    kind = "regular"

    def to_dict(self):
        return {"kind": self.kind, "degree": self.degree}

    def __str__(self):
        return "regular"


@dataclass(frozen=True)
class Linear:
    """
    :param a: Pente exacte
    :param b: Ordonnée exacte
    """
    a: Fraction
    b: Fraction

    kind = "linear"

    def to_dict(self):
        return {"kind": self.kind, "a": format_rational(self.a), "b": format_rational(self.b)}

    def __str__(self):
        return f"linear({format_rational(self.a)},{format_rational(self.b)})"


@dataclass(frozen=True)
class NotLinear:
    """
    :param vertex: Sommet témoin
    :param expected: Valeur a·d(v) + b prédite par la paire de départ
    :param actual: Valeur S(v) observée
    """
    vertex: int
    expected: Fraction
    actual: int

    kind = "not-linear"

    def to_dict(self):
        return {
            "kind": self.kind,
            "vertex": self.vertex,
            "expected": format_rational(self.expected),
            "actual": self.actual,
        }

    def __str__(self):
        return (f"not-linear(v={self.vertex},expected={format_rational(self.expected)},"
                f"actual={self.actual})")


LinearityVerdict = Union[Regular, Linear, NotLinear]
