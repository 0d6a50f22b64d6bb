"""
Package: core
-----------
Algorithmes de la bibliothèque: entrées/sorties, structure, forme
canonique, linéarité, spectre, catalogue, audit et énumération.

Version: 1.0
"""
