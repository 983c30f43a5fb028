"""Domain types and schemas."""
from .colouring import LABELS, Colouring, ListAssignment
from .formula import CoveringCollection, NaeFormula, literal_value
from .gadget import GadgetKind, GadgetOutput, SubstitutionPattern
from .graph import BipartiteChairFreeClass, Bipartition, Edge, Embedding, Graph, Layering
from .schemas import (
    Answer,
    CapsConfig,
    ClaimResult,
    ColouringMode,
    CommandConfig,
    CommandResult,
    GadgetReport,
    OracleResult,
    PatternSpec,
    ProblemKind,
    TransversalKind,
)
from .solver import (
    MINUS_PRIVATE,
    WHOLE_GRAPH,
    ColouringFamily,
    ExtensionTriple,
    Triangle,
    TriangleContext,
)

__all__ = [
    "LABELS",
    "Answer",
    "BipartiteChairFreeClass",
    "Bipartition",
    "CapsConfig",
    "ClaimResult",
    "Colouring",
    "ColouringFamily",
    "ColouringMode",
    "CommandConfig",
    "CommandResult",
    "CoveringCollection",
    "Edge",
    "Embedding",
    "ExtensionTriple",
    "GadgetKind",
    "GadgetOutput",
    "GadgetReport",
    "Graph",
    "Layering",
    "ListAssignment",
    "MINUS_PRIVATE",
    "NaeFormula",
    "OracleResult",
    "PatternSpec",
    "ProblemKind",
    "SubstitutionPattern",
    "TransversalKind",
    "Triangle",
    "TriangleContext",
    "WHOLE_GRAPH",
    "literal_value",
]
