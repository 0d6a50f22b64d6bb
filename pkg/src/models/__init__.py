"""
Package: models
-------------
Valeurs immuables manipulées par la bibliothèque.

Contenu:
    - errors.py: Hiérarchie des exceptions
    - graph.py: Graph, BaseType, Arc, ReducedMultigraph
    - verdict.py: Verdicts Regular / Linear / NotLinear
    - family.py: FamilyId et ExpectedLinearity
    - report.py: WalkMatrix, MainEigenReport, EnumerationReport

Relations:
    Graph
    ├── ReducedMultigraph (base contractée)
    └── BaseType (type reconnu)

    EnumerationReport
    └── FamilyId (histogramme des classifications)

Version: 1.0
"""

from src.models.errors import (
    BaseTypeError,
    ConvergenceError,
    GraphFormatError,
    InvalidGraphError,
    ParameterError,
    TricyclicError,
    VerdictError,
)
from src.models.graph import Arc, BaseType, Graph, ReducedMultigraph
from src.models.verdict import Linear, LinearityVerdict, NotLinear, Regular
from src.models.family import ExpectedLinearity, FamilyId, FamilyKind
from src.models.report import EnumerationReport, MainEigenReport, WalkMatrix
