import itertools
import random

import networkx as nx
import pytest

from diamkit.exceptions import CapExceededError
from diamkit.models import CapsConfig, Colouring, ColouringMode, Graph, NaeFormula, ProblemKind
from diamkit.services import OracleService


def _max_independent_sets(graph):
    for size in range(graph.n, -1, -1):
        found = [
            members for members in itertools.combinations(graph.vertices(), size)
            if not any(graph.has_edge(u, v) for u, v in itertools.combinations(members, 2))
        ]
        if found:
            return size, list(found[0])
    return 0, []


class TestBruteForce:

    def test_k4_not_colourable(self, oracle_service, graph_service):
        assert not oracle_service.brute_force(graph_service.complete(4), ProblemKind.THREECOL).answer

    def test_pentagon_ioct(self, oracle_service, graph_service):
        result = oracle_service.brute_force(graph_service.cycle(5), ProblemKind.IOCT)
        assert result.answer
        assert result.optimum == 1

    def test_pentagon_colourings(self, oracle_service, graph_service):
        c5 = graph_service.cycle(5)
        assert oracle_service.brute_force(c5, ProblemKind.ACYCLIC3COL).answer
        assert not oracle_service.brute_force(c5, ProblemKind.STAR3COL).answer

    def test_gd_ifvs(self, oracle_service, extremal_service):
        result = oracle_service.brute_force(extremal_service.generate_gd(2), ProblemKind.IFVS)
        assert result.optimum == 3
        assert len(result.witness_set) == 3

    def test_bound_k(self, oracle_service, graph_service):
        k53 = graph_service.complete_bipartite(5, 3)
        assert oracle_service.brute_force(k53, ProblemKind.IFVS, 2).answer
        assert not oracle_service.brute_force(k53, ProblemKind.IFVS, 1).answer

    def test_witnesses_verify(self, oracle_service, colouring_service, graph_service):
        modes = {
            ProblemKind.THREECOL: ColouringMode.PROPER,
            ProblemKind.ACYCLIC3COL: ColouringMode.ACYCLIC,
            ProblemKind.STAR3COL: ColouringMode.STAR,
        }
        for nx_graph in nx.graph_atlas_g()[1:120]:
            graph = graph_service.from_networkx(nx_graph)
            for problem in ProblemKind:
                result = oracle_service.brute_force(graph, problem)
                if not result.answer:
                    continue
                colouring = Colouring.of(result.colouring)
                if problem.is_colouring:
                    assert colouring_service.verify_colouring(graph, colouring, modes[problem])
                else:
                    assert colouring.colour_class(1) == tuple(result.witness_set)

    def test_consistency_across_problems(self, oracle_service, graph_service):
        for nx_graph in nx.graph_atlas_g()[1:300]:
            graph = graph_service.from_networkx(nx_graph)
            threecol = oracle_service.brute_force(graph, ProblemKind.THREECOL).answer
            assert threecol == (oracle_service.count_3_colourings(graph) > 0)
            if not threecol:
                continue
            ioct = oracle_service.brute_force(graph, ProblemKind.IOCT).optimum
            ifvs = oracle_service.brute_force(graph, ProblemKind.IFVS)
            if ifvs.answer:
                assert ioct <= ifvs.optimum

    def test_cap(self, graph_service, colouring_service):
        oracle = OracleService(graph_service, colouring_service, CapsConfig(oracle_vertices=4))
        with pytest.raises(CapExceededError):
            oracle.brute_force(graph_service.path(5), ProblemKind.THREECOL)

    def test_fixed_labels(self, oracle_service, graph_service):
        colouring = oracle_service.find_mode_colouring(
            graph_service.path(3), ColouringMode.STAR, fixed={0: 2, 2: 2}
        )
        assert colouring[0] == colouring[2] == 2


class TestIndependentSet:

    def test_values(self, oracle_service, graph_service):
        assert oracle_service.max_independent_set(graph_service.cycle(5)).optimum == 2
        assert oracle_service.max_independent_set(graph_service.complete_bipartite(5, 3)).optimum == 5
        assert oracle_service.max_independent_set(graph_service.petersen()).optimum == 4

    def test_agrees_with_exhaustive_search(self, oracle_service):
        rng = random.Random(13)
        for _ in range(120):
            n = rng.randint(0, 12)
            graph = Graph.from_edges(
                n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.3]
            )
            size, witness = _max_independent_sets(graph)
            result = oracle_service.max_independent_set(graph)
            assert result.optimum == size
            assert result.witness_set == witness

    def test_cap(self, graph_service, colouring_service):
        oracle = OracleService(graph_service, colouring_service, CapsConfig(independent_set_vertices=5))
        with pytest.raises(CapExceededError):
            oracle.max_independent_set(graph_service.path(6))


class TestCounting:

    def test_values(self, oracle_service, graph_service, extremal_service):
        assert oracle_service.count_3_colourings(graph_service.complete(3)) == 6
        assert oracle_service.count_3_colourings(graph_service.cycle(5)) == 30
        assert oracle_service.count_3_colourings(extremal_service.generate_gd(2)) == 48

    def test_cap(self, graph_service, colouring_service):
        oracle = OracleService(graph_service, colouring_service, CapsConfig(count=5))
        with pytest.raises(CapExceededError):
            oracle.count_3_colourings(graph_service.complete(3))


class TestNaeBrute:

    def test_all_equal_clause(self, oracle_service):
        assert oracle_service.nae_brute(NaeFormula(num_variables=1, clauses=((1, 1, 1),))) is None

    def test_first_assignment(self, oracle_service, single_clause_formula):
        assert oracle_service.nae_brute(single_clause_formula) == (True, False, False)

    def test_three_clause_formula(self, oracle_service, three_clause_formula):
        assignment = oracle_service.nae_brute(three_clause_formula)
        assert assignment == (False, True, False)
        assert three_clause_formula.is_satisfied_by(assignment)

    def test_complement_symmetry(self, oracle_service):
        rng = random.Random(17)
        for _ in range(100):
            n = rng.randint(1, 5)
            clauses = tuple(
                tuple(rng.choice((1, -1)) * rng.randint(1, n) for _ in range(3))
                for _ in range(rng.randint(1, 6))
            )
            formula = NaeFormula(num_variables=n, clauses=clauses)
            assignment = oracle_service.nae_brute(formula)
            satisfiable = any(
                formula.is_satisfied_by(values)
                for values in itertools.product((False, True), repeat=n)
            )
            assert (assignment is not None) == satisfiable
            if assignment is not None:
                assert formula.is_satisfied_by(tuple(not value for value in assignment))

    def test_cap(self, graph_service, colouring_service):
        oracle = OracleService(graph_service, colouring_service, CapsConfig(nae_variables=2))
        with pytest.raises(CapExceededError):
            oracle.nae_brute(NaeFormula(num_variables=3, clauses=((1, 2, 3),)))
