"""
Package: ui
---------
Affichage console (colorama) et formateurs de logs.
"""
