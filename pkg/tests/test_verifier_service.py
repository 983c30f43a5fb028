import random
from dataclasses import replace

import pytest

from diamkit.models import CapsConfig, CoveringCollection, Graph, NaeFormula
from diamkit.services import OracleService, PatternService, VerifierService


def _with_tail(gadget, length):
    """The gadget with a path of ``length`` new vertices hanging from z."""
    graph = gadget.graph
    tail = list(range(graph.n, graph.n + length))
    edges = list(graph.edges()) + list(zip([0] + tail[:-1], tail))
    roles = gadget.roles + tuple(f"t:{i}" for i in range(1, length + 1))
    return replace(gadget, graph=Graph.from_edges(graph.n + length, edges), roles=roles)


class TestNaeGadgets:

    def test_ioct_three_clause(self, verifier_service, gadget_service, three_clause_formula):
        report = verifier_service.verify_gadget(gadget_service.build_ioct_gadget(three_clause_formula))
        assert report.passed
        assert report.vertex_count == 16
        for claim in ("roles", "diameter", "forbidden", "equivalence", "certificate"):
            assert report.status_of(claim) == "pass"

    def test_unsatisfiable_ioct(self, verifier_service, gadget_service):
        formula = NaeFormula(
            num_variables=3, clauses=((-1, -2, -3), (1, 2, -3), (1, -2, 3), (-1, 2, 3))
        )
        report = verifier_service.verify_gadget(gadget_service.build_ioct_gadget(formula))
        assert report.status_of("equivalence") == "pass"
        assert report.status_of("certificate") == "skipped"

    def test_acyclic_single_clause(self, verifier_service, gadget_service, single_clause_formula):
        collection = CoveringCollection.of([(1, 0), (2, 0), (3, 0)])
        report = verifier_service.verify_gadget(
            gadget_service.build_acyclic_gadget(single_clause_formula, collection)
        )
        assert report.passed
        assert report.status_of("equivalence") == "pass"

    def test_large_pattern_is_skipped_not_passed(
        self, graph_service, colouring_service, oracle_service, gadget_service, single_clause_formula
    ):
        verifier = VerifierService(
            graph_service=graph_service,
            pattern_service=PatternService(graph_service, pattern_cap=12),
            colouring_service=colouring_service,
            oracle_service=oracle_service,
            gadget_service=gadget_service,
            caps=CapsConfig(),
        )
        report = verifier.verify_gadget(gadget_service.build_star_gadget(single_clause_formula))
        assert report.vertex_count == 69
        assert report.status_of("forbidden") == "skipped"
        assert report.status_of("equivalence") == "pass"
        assert report.status_of("certificate") == "pass"
        assert report.passed

    def test_star_equivalence_above_vertex_cap(self, verifier_service, gadget_service):
        satisfiable = NaeFormula(num_variables=3, clauses=((1, 2, 3),))
        unsatisfiable = NaeFormula(num_variables=1, clauses=((1, 1, 1),))
        for formula, expected in ((satisfiable, True), (unsatisfiable, False)):
            gadget = gadget_service.build_star_gadget(formula)
            assert gadget.graph.n > CapsConfig().verification_vertices
            report = verifier_service.verify_gadget(gadget)
            claim = next(c for c in report.claims if c.name == "equivalence")
            assert claim.status == "pass"
            assert f"NAE satisfiable {expected}" in claim.detail
        assert gadget.graph.n == 35

    def test_acyclic_equivalence_above_vertex_cap(
        self, verifier_service, gadget_service, three_clause_formula
    ):
        collection = CoveringCollection.of([(1, 2), (2, 0), (3, 0), (-1, 1), (-2, 2), (-3, 1)])
        gadget = gadget_service.build_acyclic_gadget(three_clause_formula, collection)
        assert gadget.graph.n == 34
        report = verifier_service.verify_gadget(gadget)
        assert report.status_of("equivalence") == "pass"
        assert report.passed

    def test_mode_search_budget(self, graph_service, colouring_service, gadget_service):
        oracle = OracleService(graph_service, colouring_service, CapsConfig(enumeration=5))
        verifier = VerifierService(
            graph_service=graph_service,
            pattern_service=PatternService(graph_service),
            colouring_service=colouring_service,
            oracle_service=oracle,
            gadget_service=gadget_service,
            caps=CapsConfig(enumeration=5),
        )
        formula = NaeFormula(num_variables=3, clauses=((1, 2, 3),))
        report = verifier.verify_gadget(gadget_service.build_star_gadget(formula))
        assert report.status_of("equivalence") == "skipped"

    def test_tail_breaks_claims(self, verifier_service, gadget_service, three_clause_formula):
        gadget = _with_tail(gadget_service.build_ioct_gadget(three_clause_formula), 4)
        report = verifier_service.verify_gadget(gadget)
        assert not report.passed
        assert report.status_of("roles") == "pass"
        assert report.status_of("diameter") == "fail"
        assert report.status_of("forbidden") == "fail"
        assert report.status_of("certificate") == "fail"

    def test_missing_role(self, verifier_service, gadget_service, single_clause_formula):
        gadget = gadget_service.build_ioct_gadget(single_clause_formula)
        report = verifier_service.verify_gadget(replace(gadget, roles=gadget.roles[:-1]))
        assert report.status_of("roles") == "fail"


class TestIndependentSetGadgets:

    def test_triangle_free(self, verifier_service, independent_set_service, graph_service):
        report = verifier_service.verify_gadget(
            independent_set_service.build_is_diam2_trianglefree(graph_service.cycle(5))
        )
        assert report.passed
        assert report.status_of("alpha") == "pass"
        assert report.status_of("forbidden") == "pass"

    def test_k14_free(self, verifier_service, independent_set_service, graph_service):
        report = verifier_service.verify_gadget(
            independent_set_service.build_is_diam2_k14free(graph_service.cycle(7))
        )
        assert report.passed
        assert report.status_of("alpha") == "pass"

    def test_petersen_alpha_skipped(self, verifier_service, independent_set_service, graph_service):
        report = verifier_service.verify_gadget(
            independent_set_service.build_is_diam2_k14free(graph_service.petersen())
        )
        assert report.status_of("alpha") == "skipped"
        assert report.status_of("diameter") == "pass"

    def test_wrong_offset_fails(self, verifier_service, independent_set_service, graph_service):
        gadget = independent_set_service.build_is_diam2_k14free(graph_service.cycle(5))
        report = verifier_service.verify_gadget(replace(gadget, alpha_offset=2))
        assert report.status_of("alpha") == "fail"


def _random_small_formula(rng):
    """One or two clauses over three or four variables, no clause repeating
    the literals of the first."""
    n = rng.randint(3, 4)
    count = rng.randint(1, 2)
    clauses = []
    while len(clauses) < count:
        variables = rng.sample(range(1, n + 1), 3)
        clause = tuple(v if rng.random() < 0.5 else -v for v in variables)
        if clauses and set(clause) <= set(clauses[0]):
            continue
        clauses.append(clause)
    return NaeFormula(num_variables=n, clauses=tuple(clauses))


class TestRandomFormulas:

    @pytest.mark.parametrize("seed", range(50))
    def test_all_gadgets(self, verifier_service, gadget_service, nae_service, seed):
        rng = random.Random(seed)
        formula = _random_small_formula(rng)
        variant_a, collection = nae_service.to_variant_a(formula)
        assert variant_a == formula
        positive = NaeFormula(
            num_variables=formula.num_variables,
            clauses=tuple(tuple(abs(lit) for lit in clause) for clause in formula.clauses),
        )
        gadgets = [
            gadget_service.build_ioct_gadget(formula),
            gadget_service.build_acyclic_gadget(formula, collection),
            gadget_service.build_star_gadget(positive),
        ]
        for gadget in gadgets:
            report = verifier_service.verify_gadget(gadget)
            assert report.passed, (seed, gadget.kind, report.claims)
            for claim in ("roles", "diameter", "equivalence", "certificate"):
                assert report.status_of(claim) == "pass", (seed, gadget.kind, claim)
