"""Shared fixtures: wired services and the formulas used across suites."""
import pytest

from diamkit.models import CapsConfig, NaeFormula
from diamkit.services import (
    BipartiteService,
    ColouringService,
    ExtensionService,
    ExtremalService,
    FamilyService,
    GadgetService,
    GraphService,
    IndependentSetService,
    InstanceService,
    NaeService,
    OracleService,
    PatternService,
    SolverService,
    TriangleService,
    VerifierService,
)


@pytest.fixture
def caps():
    return CapsConfig()


@pytest.fixture
def graph_service():
    return GraphService()


@pytest.fixture
def pattern_service(graph_service):
    return PatternService(graph_service)


@pytest.fixture
def colouring_service(graph_service):
    return ColouringService(graph_service)


@pytest.fixture
def oracle_service(graph_service, colouring_service, caps):
    return OracleService(graph_service, colouring_service, caps)


@pytest.fixture
def triangle_service(graph_service):
    return TriangleService(graph_service)


@pytest.fixture
def family_service(triangle_service, colouring_service):
    return FamilyService(triangle_service, colouring_service)


@pytest.fixture
def solver_service(graph_service, pattern_service, colouring_service, family_service):
    return SolverService(
        graph_service=graph_service,
        pattern_service=pattern_service,
        colouring_service=colouring_service,
        family_service=family_service,
        extension_service=ExtensionService(graph_service),
        bipartite_service=BipartiteService(pattern_service, colouring_service),
    )


@pytest.fixture
def instance_service(graph_service, pattern_service):
    return InstanceService(graph_service, pattern_service)


@pytest.fixture
def nae_service():
    return NaeService()


@pytest.fixture
def gadget_service(graph_service, nae_service):
    return GadgetService(graph_service, nae_service)


@pytest.fixture
def independent_set_service(graph_service, pattern_service):
    return IndependentSetService(graph_service, pattern_service)


@pytest.fixture
def extremal_service():
    return ExtremalService()


@pytest.fixture
def verifier_service(
    graph_service, pattern_service, colouring_service, oracle_service, gadget_service, caps
):
    return VerifierService(
        graph_service=graph_service,
        pattern_service=pattern_service,
        colouring_service=colouring_service,
        oracle_service=oracle_service,
        gadget_service=gadget_service,
        caps=caps,
    )


@pytest.fixture
def three_clause_formula():
    """(x1, x2, x3), (~x1, ~x2, ~x3), (x1, ~x2, ~x3)."""
    return NaeFormula(num_variables=3, clauses=((1, 2, 3), (-1, -2, -3), (1, -2, -3)))


@pytest.fixture
def positive_formula():
    """(x1, x2, x3), (x1, x3, x4), (x2, x3, x4)."""
    return NaeFormula(num_variables=4, clauses=((1, 2, 3), (1, 3, 4), (2, 3, 4)))


@pytest.fixture
def single_clause_formula():
    return NaeFormula(num_variables=3, clauses=((1, 2, 3),))
