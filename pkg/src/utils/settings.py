"""
Module: settings.py
------------------
Valeurs par défaut d'une exécution, surchargées par les options de la
ligne de commande. Aucun fichier de configuration ni variable
d'environnement n'est lu.

Classes:
    RunSettings: Paramètres immuables d'une exécution

Version: 1.0
"""

from dataclasses import dataclass, replace

STRATEGIES = ("naive", "structured")

NAIVE_MAX_ORDER = 8
STRUCTURED_MAX_ORDER = 12


@dataclass(frozen=True)
class RunSettings:
    """
    :param max_order: Ordre maximal de la vérification
    :param strategy: "naive" ou "structured"
    :param threads: Nombre maximal de threads d'énumération
    :param cluster_tol: Tolérance relative de regroupement des valeurs propres
    :param main_tol: Seuil (relatif à n) de la projection du vecteur tout-un
    :param jacobi_tol: Seuil relatif de la norme hors-diagonale
    :param jacobi_max_sweeps: Budget de balayages de Jacobi
    :param long_run_order: Au-delà de cet ordre, --allow-long est exigé
    """
    max_order: int = 8
    strategy: str = "structured"
    threads: int = 1
    cluster_tol: float = 1e-8
    main_tol: float = 1e-16
    jacobi_tol: float = 1e-12
    jacobi_max_sweeps: int = 100
    long_run_order: int = 8

    def with_overrides(self, **overrides) -> "RunSettings":
        """Copie avec les options non nulles remplacées"""
        return replace(self, **{key: value for key, value in overrides.items() if value is not None})


DEFAULT_SETTINGS = RunSettings()
