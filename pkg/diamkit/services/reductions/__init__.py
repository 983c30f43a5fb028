"""Hardness gadgets, the extremal family and their verifier."""
from .extremal_service import ExtremalService, a_formula
from .gadget_service import GadgetService
from .independent_set_service import IndependentSetService
from .nae_service import NaeService
from .verifier_service import VerifierService

__all__ = [
    "ExtremalService",
    "GadgetService",
    "IndependentSetService",
    "NaeService",
    "VerifierService",
    "a_formula",
]
