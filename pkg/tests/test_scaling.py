import time

import pytest

from diamkit.models import ProblemKind


def _best_time(run, repeats=3):
    """Smallest wall-clock time of ``repeats`` calls."""
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        run()
        best = min(best, time.perf_counter() - start)
    return best


class TestTwoListScaling:

    def test_chain_doubling(self, colouring_service, graph_service):
        timings = []
        for n in (100_000, 200_000):
            graph = graph_service.path(n)
            lists = [[1, 2] if v % 2 else [2, 3] for v in range(n)]
            assert colouring_service.two_list_colouring(graph, lists) is not None
            timings.append(
                _best_time(lambda: colouring_service.two_list_colouring(graph, lists), repeats=2)
            )
        assert timings[1] <= 3 * timings[0], timings


class TestBipartiteScaling:

    @pytest.mark.parametrize("problem, k", [(ProblemKind.NEARBIP, None), (ProblemKind.IFVS, 2)])
    def test_complex_doubling(self, solver_service, graph_service, problem, k):
        timings = []
        for n in (100_000, 200_000):
            graph = graph_service.complex(n, 3, 3)
            answer = solver_service.solve(graph, 3, problem, k)
            assert answer.answer
            assert answer.optimum == 2
            timings.append(_best_time(lambda: solver_service.solve(graph, 3, problem, k)))
        assert timings[0] < 1.0, timings
        assert timings[1] <= 3 * timings[0], timings
