"""
Package: tests
-------------
Tests de la bibliothèque, un module par module de src/.

Les tests longs (énumération naïve à l'ordre 8, balayage des familles
jusqu'à 40 sommets, vérification complète) portent le marqueur `slow` et
ne s'exécutent qu'avec l'option --runslow.
"""
