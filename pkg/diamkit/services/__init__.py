"""Services package."""
from .config_service import ConfigService
from .graph_service import GraphService
from .pattern_service import PatternService
from .colouring_service import ColouringService
from .oracle_service import OracleService
from .instance_service import InstanceService
from .chair import (
    BipartiteService,
    ExtensionService,
    FamilyService,
    SolverService,
    TriangleService,
)
from .reductions import (
    ExtremalService,
    GadgetService,
    IndependentSetService,
    NaeService,
    VerifierService,
)

__all__ = [
    "ConfigService",
    "GraphService",
    "PatternService",
    "ColouringService",
    "OracleService",
    "InstanceService",
    "BipartiteService",
    "ExtensionService",
    "FamilyService",
    "SolverService",
    "TriangleService",
    "ExtremalService",
    "GadgetService",
    "IndependentSetService",
    "NaeService",
    "VerifierService",
]
