"""
Package: utils
------------
Journalisation et paramètres d'exécution.
"""
