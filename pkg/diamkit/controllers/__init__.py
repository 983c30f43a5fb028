"""Controllers package."""
from .instance_controller import InstanceController
from .reduction_controller import ReductionController
from .solve_controller import SolveController

__all__ = [
    "InstanceController",
    "ReductionController",
    "SolveController",
]
