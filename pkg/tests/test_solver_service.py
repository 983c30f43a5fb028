import pytest

from diamkit.exceptions import DisconnectedGraphError, InvalidInputError, PreconditionViolation
from diamkit.models import (
    MINUS_PRIVATE,
    WHOLE_GRAPH,
    Colouring,
    ColouringMode,
    Graph,
    ProblemKind,
    Triangle,
    TransversalKind,
)

MODES = {
    ProblemKind.THREECOL: ColouringMode.PROPER,
    ProblemKind.ACYCLIC3COL: ColouringMode.ACYCLIC,
    ProblemKind.STAR3COL: ColouringMode.STAR,
}

# triangle 0,1,2; vertices 3 and 4 only see 0; vertex 5 sees 1 and 2
ONE_APEX = Graph.from_edges(
    6, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4), (1, 5), (2, 5), (3, 5)]
)


def _assert_certificate(colouring_service, graph, problem, answer):
    if not answer.answer:
        return
    if problem.is_colouring:
        colouring = Colouring.of(answer.colouring)
        assert colouring_service.verify_colouring(graph, colouring, MODES[problem])
        return
    kind = "ioct" if problem == ProblemKind.IOCT else "ifvs"
    assert colouring_service.verify_transversal_set(
        graph, answer.transversal, TransversalKind(kind=kind, k=answer.k)
    )


def _assert_agrees_with_oracle(solver_service, oracle_service, colouring_service, graph, d):
    for problem in ProblemKind:
        answer = solver_service.solve(graph, d, problem)
        expected = oracle_service.brute_force(graph, problem)
        assert answer.answer == expected.answer, (problem, graph)
        _assert_certificate(colouring_service, graph, problem, answer)
        if problem.is_colouring or not expected.answer:
            continue
        assert answer.optimum == expected.optimum, (problem, graph)
        if problem == ProblemKind.NEARBIP:
            continue
        for k in range(graph.n + 1):
            bounded = solver_service.solve(graph, d, problem, k)
            assert bounded.answer == (k >= expected.optimum), (problem, k, graph)
            _assert_certificate(colouring_service, graph, problem, bounded)


class TestTriangle:

    def test_k4(self, triangle_service, graph_service):
        assert triangle_service.find_triangle(graph_service.complete(4)) == Triangle.of(0, 1, 2)

    def test_gd(self, triangle_service, extremal_service):
        graph = extremal_service.generate_gd(2)
        triangle = triangle_service.find_triangle(graph)
        x, y, z = triangle.vertices
        assert graph.has_edge(x, y) and graph.has_edge(x, z) and graph.has_edge(y, z)

    def test_bipartite_rejected(self, triangle_service, graph_service):
        with pytest.raises(PreconditionViolation):
            triangle_service.find_triangle(graph_service.cycle(6))

    def test_triangle_next_to_hole(self, triangle_service):
        # the first layer edge closes a pentagon; 5 sees two consecutive pentagon vertices
        graph = Graph.from_edges(
            7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 2), (5, 3), (6, 5)]
        )
        assert triangle_service.find_triangle(graph) == Triangle.of(2, 3, 5)

    def test_context_of_central_triangle(self, triangle_service, extremal_service):
        context = triangle_service.triangle_context(extremal_service.generate_gd(2), Triangle.of(0, 1, 2))
        assert context.s == (3, 4, 5, 6, 7, 8)
        assert context.n1_star == ()
        assert context.owners == (0, 1, 2)

    def test_context_sees_whole_triangle(self, triangle_service, graph_service):
        context = triangle_service.triangle_context(graph_service.complete(4), Triangle.of(0, 1, 2))
        assert context.full_neighbours == (3,)
        assert context.sees_whole_triangle

    def test_context_private_of_apex(self, triangle_service, extremal_service):
        context = triangle_service.triangle_context(extremal_service.generate_gd(3), Triangle.of(0, 3, 4))
        assert context.private_of(0) == (1, 2)

    def test_context_needs_a_triangle(self, triangle_service, graph_service):
        with pytest.raises(InvalidInputError):
            triangle_service.triangle_context(graph_service.path(3), Triangle.of(0, 1, 2))


class TestFamily:

    def test_triangle(self, family_service, graph_service):
        family = family_service.colouring_family(graph_service.complete(3), 1, 10**6)
        assert family.variant == WHOLE_GRAPH
        assert len(family) == 6

    def test_gd(self, family_service, extremal_service):
        family = family_service.colouring_family(extremal_service.generate_gd(2), 3, 10**6)
        assert family.variant == WHOLE_GRAPH
        assert len(family) == 48

    def test_k4(self, family_service, graph_service):
        assert family_service.colouring_family(graph_service.complete(4), 1, 10**6) is None

    def test_single_apex(self, family_service, colouring_service):
        family = family_service.colouring_family(ONE_APEX, 2, 10**6)
        assert family.variant == MINUS_PRIVATE
        assert family.apex == 0
        assert family.private == (3, 4)
        for member in family.members:
            assert member[3] == member[4] == 0
            assert colouring_service.is_proper_partial(ONE_APEX, member)


class TestBipartite:

    def test_star_colouring_of_small_complex(self, solver_service, graph_service, colouring_service):
        graph = graph_service.complete_bipartite(5, 2)
        answer = solver_service.solve(graph, 2, ProblemKind.STAR3COL)
        assert answer.answer
        assert answer.route == "bipartite"
        _assert_certificate(colouring_service, graph, ProblemKind.STAR3COL, answer)

    def test_acyclic_and_ifvs(self, solver_service, graph_service):
        graph = graph_service.complete_bipartite(5, 3)
        assert not solver_service.solve(graph, 2, ProblemKind.ACYCLIC3COL).answer
        assert solver_service.solve(graph, 2, ProblemKind.IFVS, 2).answer
        assert not solver_service.solve(graph, 2, ProblemKind.IFVS, 1).answer

    @pytest.mark.parametrize("problem", list(ProblemKind))
    def test_closed_form_matches_oracle(
        self, problem, solver_service, oracle_service, colouring_service, graph_service
    ):
        for a, b, removed in ((9, 3, 2), (7, 2, 0), (6, 4, 4), (10, 2, 1)):
            graph = graph_service.complex(a, b, removed)
            d = graph_service.diameter(graph)
            answer = solver_service.solve(graph, d, problem)
            expected = oracle_service.brute_force(graph, problem)
            assert answer.route == "bipartite"
            assert answer.answer == expected.answer
            if expected.answer and problem.is_transversal:
                assert answer.optimum == expected.optimum
            _assert_certificate(colouring_service, graph, problem, answer)

    def test_large_complex(self, solver_service, graph_service, colouring_service):
        graph = graph_service.complex(3000, 3, 3)
        answer = solver_service.solve(graph, 3, ProblemKind.IFVS, 2)
        assert answer.answer
        assert answer.optimum == 2
        assert solver_service.solve(graph, 3, ProblemKind.NEARBIP).answer
        assert not solver_service.solve(graph, 3, ProblemKind.STAR3COL).answer
        _assert_certificate(colouring_service, graph, ProblemKind.IFVS, answer)

    def test_long_path_breaks_diameter(self, solver_service, graph_service):
        with pytest.raises(PreconditionViolation):
            solver_service.solve(graph_service.path(12), 3, ProblemKind.IFVS)


class TestSolve:

    def test_pentagon(self, solver_service, graph_service):
        c5 = graph_service.cycle(5)
        nearbip = solver_service.solve(c5, 2, ProblemKind.NEARBIP)
        assert nearbip.answer
        assert len(nearbip.transversal) == 1
        assert not solver_service.solve(c5, 2, ProblemKind.STAR3COL).answer
        assert solver_service.solve(c5, 2, ProblemKind.ACYCLIC3COL).answer

    def test_k4_infeasible(self, solver_service, graph_service):
        answer = solver_service.solve(graph_service.complete(4), 1, ProblemKind.THREECOL)
        assert not answer.answer
        assert answer.route == "tiny"

    def test_gd(self, solver_service, oracle_service, colouring_service, extremal_service):
        graph = extremal_service.generate_gd(2)
        _assert_agrees_with_oracle(solver_service, oracle_service, colouring_service, graph, 3)

    def test_single_apex_route(self, solver_service, oracle_service, colouring_service):
        for problem in ProblemKind:
            assert solver_service.solve(ONE_APEX, 2, problem).route == "minus_private"
        _assert_agrees_with_oracle(solver_service, oracle_service, colouring_service, ONE_APEX, 2)

    def test_disconnected(self, solver_service, graph_service):
        with pytest.raises(DisconnectedGraphError):
            solver_service.solve(graph_service.empty(2), 1, ProblemKind.THREECOL)

    def test_verify_chair_free(self, solver_service, pattern_service):
        chair = pattern_service.build_pattern(pattern_service.parse_pattern_name("chair"))
        with pytest.raises(PreconditionViolation) as info:
            solver_service.solve(chair, 3, ProblemKind.IFVS, verify_chair_free=True)
        assert sorted(info.value.witness) == [0, 1, 2, 3, 4]

    def test_verify_diameter(self, solver_service, graph_service):
        with pytest.raises(PreconditionViolation):
            solver_service.solve(graph_service.path(5), 2, ProblemKind.THREECOL, verify_diameter=True)

    def test_monotone_in_k(self, solver_service, graph_service):
        graph = graph_service.cycle(7)
        answers = [solver_service.solve(graph, 3, ProblemKind.IOCT, k).answer for k in range(8)]
        assert answers == sorted(answers)


class TestOracleEquivalence:

    def test_atlas(self, solver_service, oracle_service, colouring_service, instance_service, graph_service):
        for graph in instance_service.atlas(7):
            d = max(graph_service.diameter(graph), 1)
            _assert_agrees_with_oracle(solver_service, oracle_service, colouring_service, graph, d)

    @pytest.mark.parametrize("seeds", [range(0, 125), range(125, 250)])
    def test_random(self, solver_service, oracle_service, colouring_service, instance_service, graph_service, seeds):
        for seed in seeds:
            n = 8 + seed % 5
            graph = instance_service.random_chair_free(n, seed=seed)
            d = graph_service.diameter(graph)
            _assert_agrees_with_oracle(solver_service, oracle_service, colouring_service, graph, d)

    @pytest.mark.parametrize("seeds", [range(0, 125), range(125, 250)])
    def test_random_tripartite(
        self, solver_service, oracle_service, colouring_service, instance_service, graph_service, seeds
    ):
        non_bipartite = 0
        for seed in seeds:
            n = 8 + seed % 5
            graph = instance_service.random_tripartite_chair_free(n, seed=seed)
            d = graph_service.diameter(graph)
            assert solver_service.solve(graph, d, ProblemKind.THREECOL).answer
            if graph_service.bipartition(graph)[0] is None:
                non_bipartite += 1
            _assert_agrees_with_oracle(solver_service, oracle_service, colouring_service, graph, d)
        # most samples go through the triangle and family pipeline
        assert non_bipartite > len(seeds) // 2


class TestStructuralBounds:

    def test_size_and_private_bounds(
        self, triangle_service, oracle_service, instance_service, graph_service
    ):
        corpus = list(instance_service.atlas(7))
        corpus += [instance_service.random_chair_free(8 + s % 5, seed=s) for s in range(40)]
        corpus += [
            instance_service.random_tripartite_chair_free(8 + s % 5, seed=s) for s in range(40)
        ]
        for graph in corpus:
            d = max(graph_service.diameter(graph), 1)
            if graph.n < 2 * d + 2 or graph_service.bipartition(graph)[0] is not None:
                continue
            if oracle_service.count_3_colourings(graph) == 0:
                continue
            context = triangle_service.triangle_context(graph, triangle_service.find_triangle(graph))
            assert not context.exceeds_size_bound(d)
            if len(context.owners) >= 2:
                assert len(context.s) <= 6
