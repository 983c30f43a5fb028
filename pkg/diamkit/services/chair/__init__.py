"""Chair-free solver pipeline."""
from .bipartite_service import BipartiteService
from .extension_service import ExtensionService
from .family_service import FamilyService
from .solver_service import SolverService
from .triangle_service import TriangleService

__all__ = [
    "BipartiteService",
    "ExtensionService",
    "FamilyService",
    "SolverService",
    "TriangleService",
]
