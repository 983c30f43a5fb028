"""Exponential-time ground truth for the solver and the reductions.

Nothing here is called by the linear-time path; every search is guarded by
a cap from the configuration and overflows loudly instead of approximating.
"""
from itertools import combinations
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from diamkit.exceptions import CapExceededError
from diamkit.models import (
    LABELS,
    CapsConfig,
    Colouring,
    ColouringMode,
    Graph,
    NaeFormula,
    OracleResult,
    ProblemKind,
    literal_value,
)
from diamkit.services.colouring_service import ColouringService
from diamkit.services.graph_service import GraphService
from diamkit.utils import get_category_logger

logger = get_category_logger(__name__, "oracle")


class _ModeSearch:
    """Backtracking for proper, acyclic or star 3-colourings.

    Vertices are coloured in breadth-first order; each placement is checked
    against the already placed vertices only. At most ``budget`` labels are
    placed before the search gives up.
    """

    def __init__(
        self,
        graph: Graph,
        mode: ColouringMode,
        fixed: Dict[int, int],
        order: List[int],
        budget: int,
    ):
        self.graph = graph
        self.mode = mode
        self.fixed = fixed
        self.order = order
        self.budget = budget
        self.placements = 0
        self.labels = [0] * graph.n

    def run(self) -> Optional[Colouring]:
        if self._extend(0):
            return Colouring.of(self.labels)
        return None

    def _extend(self, i: int) -> bool:
        if i == len(self.order):
            return True
        v = self.order[i]
        choices = (self.fixed[v],) if v in self.fixed else LABELS
        for label in choices:
            if any(self.labels[w] == label for w in self.graph.neighbours(v)):
                continue
            self.placements += 1
            if self.placements > self.budget:
                raise CapExceededError(
                    f"{self.mode.value} colouring search on {self.graph.n} vertices", self.budget
                )
            self.labels[v] = label
            if self._admissible(v) and self._extend(i + 1):
                return True
            self.labels[v] = 0
        return False

    def _admissible(self, v: int) -> bool:
        if self.mode == ColouringMode.PROPER:
            return True
        own = self.labels[v]
        for other in LABELS:
            if other == own:
                continue
            if self.mode == ColouringMode.ACYCLIC and self._closes_cycle(v, own, other):
                return False
            if self.mode == ColouringMode.STAR and self._has_path_of_four(v, own, other):
                return False
        return True

    def _closes_cycle(self, v: int, own: int, other: int) -> bool:
        """Two neighbours of v in one component of the placed (own, other) subgraph."""
        labels = self.labels
        graph = self.graph
        targets = [w for w in graph.neighbours(v) if labels[w] == other]
        if len(targets) < 2:
            return False
        seen = {v}
        for start in targets:
            if start in seen:
                return True
            stack = [start]
            seen.add(start)
            while stack:
                u = stack.pop()
                for w in graph.neighbours(u):
                    if w in seen or labels[w] not in (own, other):
                        continue
                    seen.add(w)
                    stack.append(w)
        return False

    def _has_path_of_four(self, v: int, own: int, other: int) -> bool:
        """A bichromatic path on four vertices with v at an end or second."""
        labels = self.labels
        graph = self.graph
        firsts = [a for a in graph.neighbours(v) if labels[a] == other]
        for a in firsts:
            for b in graph.neighbours(a):
                if b == v or labels[b] != own:
                    continue
                # v - a - b - c
                if any(c != a and labels[c] == other for c in graph.neighbours(b)):
                    return True
            # a - v - b - c with b another neighbour of v
            if len(firsts) >= 2 and any(
                c != v and labels[c] == own for c in graph.neighbours(a)
            ):
                return True
        return False


class OracleService:
    """Service for exhaustive reference answers."""

    def __init__(
        self,
        graph_service: GraphService,
        colouring_service: ColouringService,
        caps: Optional[CapsConfig] = None,
    ):
        """Initialize oracle service.

        Args:
            graph_service: Graph primitives
            colouring_service: Colouring enumeration and verifiers
            caps: Caps for every search, defaults when omitted
        """
        self.graph_service = graph_service
        self.colouring_service = colouring_service
        self.caps = caps or CapsConfig()

    # ------------------------------------------------------- six problems

    def brute_force(self, graph: Graph, problem: ProblemKind, k: Optional[int] = None) -> OracleResult:
        """Exact answer by exhaustive search.

        Raises:
            CapExceededError: If the graph exceeds ``oracle_vertices``
        """
        cap = self.caps.oracle_vertices
        if graph.n > cap:
            raise CapExceededError(f"oracle on {graph.n} vertices", cap)

        if problem.is_colouring:
            mode = {
                ProblemKind.THREECOL: ColouringMode.PROPER,
                ProblemKind.ACYCLIC3COL: ColouringMode.ACYCLIC,
                ProblemKind.STAR3COL: ColouringMode.STAR,
            }[problem]
            colouring = self.find_mode_colouring(graph, mode)
            logger.debug(f"Oracle {problem.value} on n={graph.n}: {colouring is not None}")
            return OracleResult(
                answer=colouring is not None,
                colouring=list(colouring.labels) if colouring else None,
            )

        if self.find_mode_colouring(graph, ColouringMode.PROPER) is None:
            return OracleResult(answer=False)
        forest = problem != ProblemKind.IOCT
        for members in self._independent_sets_by_size(graph):
            colouring = self._colour_around(graph, members, forest)
            if colouring is None:
                continue
            optimum = len(members)
            bound = None if problem == ProblemKind.NEARBIP else k
            answer = bound is None or optimum <= bound
            logger.debug(f"Oracle {problem.value} on n={graph.n}: optimum {optimum}")
            return OracleResult(
                answer=answer,
                optimum=optimum,
                witness_set=list(members) if answer else None,
                colouring=list(colouring.labels) if answer else None,
            )
        return OracleResult(answer=False)

    def find_mode_colouring(
        self,
        graph: Graph,
        mode: ColouringMode,
        fixed: Optional[Dict[int, int]] = None,
    ) -> Optional[Colouring]:
        """First colouring of the given mode found by backtracking.

        Args:
            graph: Host graph
            mode: proper, acyclic or star
            fixed: Prescribed labels; without them vertex 0 gets label 1

        Returns:
            A colouring, or None

        Raises:
            CapExceededError: If more than ``caps.enumeration`` labels are placed
        """
        if graph.n == 0:
            return Colouring.of(())
        fixed = dict(fixed) if fixed else {0: 1}
        order: List[int] = []
        for component in self.graph_service.connected_components(graph):
            layering = self.graph_service.bfs_layering(graph, (component[0],))
            order.extend(v for layer in layering.layers for v in layer)
        return _ModeSearch(graph, mode, fixed, order, self.caps.enumeration).run()

    @staticmethod
    def _independent_sets_by_size(graph: Graph) -> Iterator[Tuple[int, ...]]:
        """Independent sets by increasing size, lexicographic within a size."""
        for size in range(graph.n + 1):
            for members in combinations(graph.vertices(), size):
                chosen = set(members)
                if all(w not in chosen for v in members for w in graph.neighbours(v)):
                    yield members

    def _colour_around(
        self, graph: Graph, members: Sequence[int], forest: bool
    ) -> Optional[Colouring]:
        """Colour I with 1 and 2-colour G - I if it is a forest (or bipartite)."""
        gs = self.graph_service
        chosen = set(members)
        rest, mapping = gs.induced_subgraph(graph, (v for v in graph.vertices() if v not in chosen))
        if forest and not gs.is_forest(rest):
            return None
        bipartition, _ = gs.bipartition(rest)
        if bipartition is None:
            return None
        return Colouring.from_classes(
            graph.n,
            {
                1: members,
                2: (mapping[i] for i in bipartition.first),
                3: (mapping[i] for i in bipartition.second),
            },
        )

    # --------------------------------------------------- independent set

    def max_independent_set(self, graph: Graph) -> OracleResult:
        """Maximum independent set by branch and bound.

        The reported witness is the lexicographically least maximum set.

        Raises:
            CapExceededError: If the graph exceeds ``independent_set_vertices``
        """
        cap = self.caps.independent_set_vertices
        if graph.n > cap:
            raise CapExceededError(f"independent set oracle on {graph.n} vertices", cap)
        closed = [(1 << v) | sum(1 << w for w in graph.neighbours(v)) for v in graph.vertices()]
        full = (1 << graph.n) - 1
        alpha = _alpha(full, closed, -1)

        chosen: List[int] = []
        remaining = full
        for v in graph.vertices():
            if not remaining >> v & 1:
                continue
            later = remaining & ~closed[v] & ~((1 << (v + 1)) - 1)
            need = alpha - len(chosen) - 1
            if _alpha(later, closed, need - 1) >= need:
                chosen.append(v)
                remaining = later
            else:
                remaining &= ~(1 << v)
        logger.debug(f"alpha={alpha} on n={graph.n}")
        return OracleResult(answer=True, optimum=alpha, witness_set=chosen)

    # ---------------------------------------------------------- counting

    def count_3_colourings(self, graph: Graph) -> int:
        """Exact number of proper 3-colourings.

        Raises:
            CapExceededError: Past the ``count`` cap
        """
        return self.colouring_service.count_3_colourings(graph, self.caps.count)

    # ------------------------------------------------------------ NAE-SAT

    def nae_brute(self, formula: NaeFormula) -> Optional[Tuple[bool, ...]]:
        """First not-all-equal satisfying assignment, or None.

        Variables are decided from x_n down to x_1, False before True; a
        clause is checked once its smallest variable is decided.

        Raises:
            CapExceededError: If the formula has more than ``nae_variables`` variables
        """
        cap = self.caps.nae_variables
        n = formula.num_variables
        if n > cap:
            raise CapExceededError(f"NAE search over {n} variables", cap)
        due: Dict[int, List[Tuple[int, int, int]]] = {}
        for clause in formula.clauses:
            due.setdefault(min(abs(lit) for lit in clause), []).append(clause)
        assignment = [False] * n

        def decide(var: int) -> bool:
            if var == 0:
                return True
            for value in (False, True):
                assignment[var - 1] = value
                if all(
                    len({literal_value(lit, assignment) for lit in clause}) == 2
                    for clause in due.get(var, ())
                ):
                    if decide(var - 1):
                        return True
            return False

        if decide(n):
            logger.debug(f"NAE formula with {n} variables is satisfiable")
            return tuple(assignment)
        return None


def _alpha(mask: int, closed: Sequence[int], floor: int) -> int:
    """Independence number of G[mask] if it exceeds ``floor``.

    Returns a value at most ``floor`` otherwise. Branches on a vertex of
    maximum degree after taking every vertex of degree at most one.
    """
    taken = 0
    while True:
        if not mask:
            return taken
        best_v = -1
        best_degree = -1
        edges = 0
        reduced = False
        m = mask
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            degree = (closed[v] & mask).bit_count() - 1
            if degree <= 1:
                mask &= ~closed[v]
                taken += 1
                reduced = True
                break
            edges += degree
            if degree > best_degree:
                best_v, best_degree = v, degree
        if reduced:
            continue
        break

    size = mask.bit_count()
    edges //= 2
    bound = size - -(-edges // best_degree)
    if taken + bound <= floor:
        return taken + bound
    with_v = 1 + _alpha(mask & ~closed[best_v], closed, floor - taken - 1)
    without_v = _alpha(mask & ~(1 << best_v), closed, max(floor - taken, with_v))
    return taken + max(with_v, without_v)
