"""
Module: errors.py
----------------
Hiérarchie des exceptions de la bibliothèque.

Toutes les erreurs levées volontairement par le code dérivent de
TricyclicError, ce qui permet à l'interface en ligne de commande de les
intercepter d'un seul bloc. Les contre-exemples du théorème et les échecs
de l'équivalence de Hagos ne sont jamais des exceptions : ce sont des
données du rapport d'énumération.

Classes:
    TricyclicError: Racine de la hiérarchie
    InvalidGraphError: Graphe invalide ou précondition structurelle violée
    GraphFormatError: Texte graph6 / liste d'arêtes mal formé
    ParameterError: Paramètres de constructeur ou bornes invalides
    VerdictError: Opération appelée sur un verdict du mauvais type
    ConvergenceError: Le solveur de Jacobi n'a pas convergé
    BaseTypeError: Aucune des 8 bases ne correspond (bogue)

Version: 1.0
"""


class TricyclicError(Exception):
    """Erreur de base de la bibliothèque"""


class InvalidGraphError(TricyclicError, ValueError):
    """Boucle, extrémité hors bornes ou graphe ne respectant pas une précondition"""


class GraphFormatError(TricyclicError, ValueError):
    """Encodage textuel d'un graphe illisible"""


class ParameterError(TricyclicError, ValueError):
    """Paramètres hors des contraintes d'un constructeur ou d'une commande"""


class VerdictError(TricyclicError, TypeError):
    """Opération réservée aux verdicts linéaires"""


class ConvergenceError(TricyclicError, RuntimeError):
    """Budget de balayages du solveur propre épuisé"""

    def __init__(self, sweeps, off_norm):
        """
        :param sweeps: Nombre de balayages effectués
        :param off_norm: Norme hors-diagonale atteinte au dernier balayage
        """
        super().__init__(
            f"Jacobi non convergé après {sweeps} balayages "
            f"(norme hors-diagonale {off_norm:.3e})"
        )
        self.sweeps = sweeps
        self.off_norm = off_norm


class BaseTypeError(TricyclicError, RuntimeError):
    """Multigraphe réduit absent du catalogue des 8 bases"""
