"""
Package: seed
-----------
Données littérales transcrites une fois pour toutes: multigraphes réduits
des 8 types de bases et table des graphes H1..H30.
"""
