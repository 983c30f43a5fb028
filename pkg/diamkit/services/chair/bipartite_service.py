"""Closed-form answers for connected bipartite chair-free graphs."""
from typing import Callable, List, Optional

from diamkit.exceptions import PreconditionViolation
from diamkit.models import Answer, Bipartition, Colouring, Graph, ProblemKind
from diamkit.services.colouring_service import ColouringService
from diamkit.services.pattern_service import PatternService
from diamkit.utils import get_category_logger

logger = get_category_logger(__name__, "solver")

Evaluator = Callable[[Graph, List[Colouring], ProblemKind, Optional[int], str], Answer]


class BipartiteService:
    """Service for the bipartite branch of the solver."""

    def __init__(self, pattern_service: PatternService, colouring_service: ColouringService):
        self.pattern_service = pattern_service
        self.colouring_service = colouring_service

    def solve_bipartite(
        self,
        graph: Graph,
        problem: ProblemKind,
        d: int,
        k: Optional[int],
        cap: int,
        evaluate: Evaluator,
        bipartition: Optional[Bipartition] = None,
    ) -> Answer:
        """Answer a problem on a connected bipartite chair-free graph.

        Small graphs are decided over all their 3-colourings. A larger graph
        of diameter at most d is a complete bipartite graph minus a matching
        with parts S_1 (larger) and S_2, and every answer follows from |S_2|.

        Args:
            graph: Connected bipartite chair-free graph
            problem: Problem to decide
            d: Diameter bound
            k: Transversal size bound, None for any size
            cap: Enumeration cap for the small case
            evaluate: Decides a problem over a list of total 3-colourings
            bipartition: Parts when already known

        Raises:
            PreconditionViolation: If the graph is not bipartite, is a path
                or cycle too long for diameter d, or contains a chair
        """
        if graph.n <= max(8, 2 * d):
            members = self.colouring_service.enumerate_3_colourings(graph, cap)
            logger.debug(f"Bipartite n={graph.n}: deciding over {len(members)} colourings")
            return evaluate(graph, members, problem, k, "bipartite")

        shape = self.pattern_service.classify_bipartite_chair_free(graph, bipartition)
        if not shape.is_complex:
            raise PreconditionViolation(
                f"a {shape.tag} on {graph.n} vertices has diameter greater than {d}"
            )
        first, second = shape.bipartition.first, shape.bipartition.second
        s = second[0]
        colouring = Colouring.from_classes(graph.n, {1: first, 2: second[1:], 3: (s,)})
        logger.debug(f"Complex with |S_1|={len(first)} |S_2|={len(second)}")

        if problem == ProblemKind.THREECOL:
            two = Colouring.from_classes(graph.n, {1: first, 2: second})
            return Answer(problem=problem, answer=True, colouring=list(two.labels), route="bipartite")
        if problem == ProblemKind.IOCT:
            two = Colouring.from_classes(graph.n, {1: first, 2: second})
            return Answer(
                problem=problem,
                k=k,
                answer=True,
                optimum=0,
                colouring=list(two.labels),
                transversal=[],
                route="bipartite",
            )
        if problem in (ProblemKind.IFVS, ProblemKind.NEARBIP):
            optimum = len(second) - 1
            answer = problem == ProblemKind.NEARBIP or k is None or optimum <= k
            return Answer(
                problem=problem,
                k=k if problem == ProblemKind.IFVS else None,
                answer=answer,
                optimum=optimum,
                colouring=list(colouring.labels) if answer else None,
                transversal=list(second[1:]) if answer else None,
                route="bipartite",
            )

        answer = len(second) <= 2
        return Answer(
            problem=problem,
            answer=answer,
            colouring=list(colouring.labels) if answer else None,
            route="bipartite",
        )
