"""Linear-time solver for the six problems on chair-free graphs of bounded diameter."""
from typing import Iterable, Iterator, Optional

from diamkit.exceptions import DisconnectedGraphError, PreconditionViolation
from diamkit.models import (
    LABELS,
    MINUS_PRIVATE,
    Answer,
    Colouring,
    ColouringFamily,
    ColouringMode,
    Graph,
    ProblemKind,
)
from diamkit.models.schemas import Route
from diamkit.services.chair.bipartite_service import BipartiteService
from diamkit.services.chair.extension_service import ExtensionService
from diamkit.services.chair.family_service import FamilyService
from diamkit.services.colouring_service import ColouringService
from diamkit.services.graph_service import GraphService
from diamkit.services.pattern_service import PatternService
from diamkit.utils import get_category_logger

logger = get_category_logger(__name__, "solver")

_MODES = {
    ProblemKind.THREECOL: ColouringMode.PROPER,
    ProblemKind.ACYCLIC3COL: ColouringMode.ACYCLIC,
    ProblemKind.STAR3COL: ColouringMode.STAR,
}


class SolverService:
    """Service answering colouring and transversal problems.

    Every yes carries a certificate built from a 3-colouring: the colouring
    itself, or one of its colour classes as the transversal.
    """

    def __init__(
        self,
        graph_service: GraphService,
        pattern_service: PatternService,
        colouring_service: ColouringService,
        family_service: FamilyService,
        extension_service: ExtensionService,
        bipartite_service: BipartiteService,
        enumeration_cap: int = 10**7,
    ):
        self.graph_service = graph_service
        self.pattern_service = pattern_service
        self.colouring_service = colouring_service
        self.family_service = family_service
        self.extension_service = extension_service
        self.bipartite_service = bipartite_service
        self.enumeration_cap = enumeration_cap

    def solve(
        self,
        graph: Graph,
        d: int,
        problem: ProblemKind,
        k: Optional[int] = None,
        verify_chair_free: bool = False,
        verify_diameter: bool = False,
    ) -> Answer:
        """Decide ``problem`` on a connected chair-free graph of diameter at most d.

        Args:
            graph: Input graph
            d: Diameter bound, trusted unless ``verify_diameter`` is set
            problem: Problem to decide
            k: Transversal size bound for ifvs and ioct, None for any size
            verify_chair_free: Search for a chair before solving
            verify_diameter: Compute the diameter before solving

        Returns:
            Answer with certificate and route

        Raises:
            DisconnectedGraphError: On disconnected input
            PreconditionViolation: On a chair or a diameter above d found by
                the verification flags, or a chair met while solving
            CapExceededError: If an enumeration exceeds its cap
        """
        gs = self.graph_service
        if not gs.is_connected(graph):
            raise DisconnectedGraphError("solver needs a connected graph")
        if verify_chair_free:
            chair_free, witness = self.pattern_service.is_chair_free(graph)
            if not chair_free:
                raise PreconditionViolation("graph contains a chair", witness=witness)
        if verify_diameter and graph.n:
            diameter = gs.diameter(graph)
            if diameter > d:
                raise PreconditionViolation(f"diameter {diameter} exceeds bound {d}")

        logger.info(f"Solving {problem.value} on n={graph.n} m={graph.m} with d={d}")
        if d == 1:
            members = self.colouring_service.enumerate_3_colourings(graph, self.enumeration_cap)
            return self.evaluate(graph, members, problem, k, "tiny")

        bipartition, _ = gs.bipartition(graph)
        if bipartition is not None:
            return self.bipartite_service.solve_bipartite(
                graph, problem, d, k, self.enumeration_cap, self.evaluate, bipartition
            )

        family = self.family_service.colouring_family(graph, d, self.enumeration_cap)
        if family is None:
            logger.info("Graph is not 3-colourable")
            return self._no(problem, k, "infeasible")
        if family.variant == MINUS_PRIVATE:
            return self.evaluate(
                graph, self._extensions(graph, family, problem), problem, k, "minus_private"
            )
        return self.evaluate(graph, family.members, problem, k, "whole_graph")

    def _extensions(
        self, graph: Graph, family: ColouringFamily, problem: ProblemKind
    ) -> Iterator[Colouring]:
        """Candidate 3-colourings of G from every member of the family."""
        for member in family.members:
            triple = self.extension_service.build_triple(graph, family, member)
            if triple is None:
                continue
            yield from self.extension_service.candidates(graph, family, triple, problem)

    def evaluate(
        self,
        graph: Graph,
        colourings: Iterable[Colouring],
        problem: ProblemKind,
        k: Optional[int],
        route: Route,
    ) -> Answer:
        """Decide a problem over candidate total 3-colourings of the graph.

        The first candidate that works is reported; for transversal problems
        the first class of minimum size.
        """
        cs = self.colouring_service
        if problem.is_colouring:
            mode = _MODES[problem]
            for colouring in colourings:
                if mode == ColouringMode.PROPER or cs.verify_colouring(graph, colouring, mode):
                    logger.debug(f"{problem.value}: certificate found on route {route}")
                    return Answer(
                        problem=problem, answer=True, colouring=list(colouring.labels), route=route
                    )
            return self._no(problem, k, route)

        best: Optional[Colouring] = None
        best_label = 0
        best_size = graph.n + 1
        for colouring in colourings:
            for label in LABELS:
                members = colouring.colour_class(label)
                if len(members) >= best_size:
                    continue
                if problem != ProblemKind.IOCT and not self._leaves_forest(graph, members):
                    continue
                best, best_label, best_size = colouring, label, len(members)

        if best is None:
            return self._no(problem, k, route)
        bound = None if problem == ProblemKind.NEARBIP else k
        answer = bound is None or best_size <= bound
        logger.debug(f"{problem.value}: minimum class size {best_size} on route {route}")
        return Answer(
            problem=problem,
            k=bound,
            answer=answer,
            optimum=best_size,
            colouring=list(best.labels) if answer else None,
            transversal=list(best.colour_class(best_label)) if answer else None,
            route=route,
        )

    def _leaves_forest(self, graph: Graph, removed) -> bool:
        gone = set(removed)
        rest, _ = self.graph_service.induced_subgraph(
            graph, (v for v in graph.vertices() if v not in gone)
        )
        return self.graph_service.is_forest(rest)

    @staticmethod
    def _no(problem: ProblemKind, k: Optional[int], route: Route) -> Answer:
        bound = k if problem in (ProblemKind.IFVS, ProblemKind.IOCT) else None
        return Answer(problem=problem, k=bound, answer=False, route=route)
