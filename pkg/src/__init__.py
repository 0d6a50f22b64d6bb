"""
Package: src
-----------------
Graphes tricycliques à exactement deux valeurs propres principales.

Ce package fournit les outils pour décider, en arithmétique exacte, si un
graphe est 2-linéaire par les marches, compter ses valeurs propres
principales, construire le catalogue des familles extrémales, et vérifier
par énumération exhaustive qu'il est complet aux petits ordres.

Structure:
    core/: Algorithmes (graphes, linéarité, spectre, familles, énumération)
    models/: Modèles de données (graphe, verdicts, familles, rapports)
    seed/: Tables du catalogue (bases réduites, familles H et G)
    ui/: Rendu console et formatage des logs
    utils/: Journalisation et paramètres d'exécution
    cli.py: Interface en ligne de commande

Version: 1.0
"""
