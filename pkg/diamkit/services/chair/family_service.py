"""Bounded family of 3-colourings for chair-free graphs of bounded diameter."""
from itertools import product
from typing import List, Optional

from diamkit.exceptions import PreconditionViolation
from diamkit.models import (
    LABELS,
    MINUS_PRIVATE,
    WHOLE_GRAPH,
    Colouring,
    ColouringFamily,
    Graph,
    TriangleContext,
)
from diamkit.services.chair.triangle_service import TriangleService
from diamkit.services.colouring_service import ColouringService
from diamkit.utils import get_category_logger

logger = get_category_logger(__name__, "solver")

# largest S = P(x) u P(y) u P(z) in a 3-colourable chair-free graph when two
# triangle vertices own private neighbours
MAX_SHARED_PRIVATE = 6


class FamilyService:
    """Service computing either all 3-colourings of G or those of G - P(x)."""

    def __init__(self, triangle_service: TriangleService, colouring_service: ColouringService):
        self.triangle_service = triangle_service
        self.colouring_service = colouring_service

    def colouring_family(self, graph: Graph, d: int, cap: int) -> Optional[ColouringFamily]:
        """Build the colouring family of a non-bipartite chair-free graph.

        Args:
            graph: Connected chair-free non-bipartite graph of diameter at most d
            d: Diameter bound
            cap: Largest number of colourings of G - N_1 to enumerate

        Returns:
            The family, or None when the graph is not 3-colourable

        Raises:
            CapExceededError: If G - N_1 has more than ``cap`` 3-colourings
            PreconditionViolation: If the graph turns out to contain a chair
        """
        cs = self.colouring_service
        if graph.n <= 2 * d + 1:
            members = cs.enumerate_3_colourings(graph, cap)
            logger.debug(f"Small graph n={graph.n}: {len(members)} colourings enumerated")
            if not members:
                return None
            return ColouringFamily(variant=WHOLE_GRAPH, members=tuple(members))

        triangle = self.triangle_service.find_triangle(graph)
        context = self.triangle_service.triangle_context(graph, triangle)
        if context.sees_whole_triangle:
            logger.debug(f"Vertex {context.full_neighbours[0]} sees the whole triangle")
            return None
        if context.exceeds_size_bound(d):
            logger.debug(
                f"{context.outside_count} vertices outside N_1 exceed {context.size_bound(d)}"
            )
            return None

        survivors = self._extendable_colourings(graph, context, cap)
        if not survivors:
            return None

        s = context.s
        owners = context.owners
        if not s:
            logger.debug(f"S is empty: {len(survivors)} colourings of the whole graph")
            return ColouringFamily(
                variant=WHOLE_GRAPH, members=tuple(survivors), triangle=triangle, context=context
            )
        if len(owners) == 1:
            apex = owners[0]
            private = context.private_of(apex)
            logger.debug(
                f"Only {apex} owns private neighbours ({len(private)}): "
                f"{len(survivors)} colourings of G - P(x)"
            )
            return ColouringFamily(
                variant=MINUS_PRIVATE,
                members=tuple(survivors),
                triangle=triangle,
                apex=apex,
                private=private,
                context=context,
            )

        if len(s) > MAX_SHARED_PRIVATE:
            raise PreconditionViolation(
                f"{len(owners)} triangle vertices own {len(s)} private neighbours in a 3-colourable graph"
            )
        members = self._expand_private(graph, context, survivors)
        logger.debug(f"{len(owners)} owners, |S|={len(s)}: {len(members)} colourings of G")
        return ColouringFamily(
            variant=WHOLE_GRAPH, members=tuple(members), triangle=triangle, context=context
        )

    def _extendable_colourings(
        self, graph: Graph, context: TriangleContext, cap: int
    ) -> List[Colouring]:
        """Colourings of G - S that extend to G, with S left at label 0."""
        cs = self.colouring_service
        n1 = set(context.n1)
        outside = [v for v in graph.vertices() if v not in n1]
        triangle = context.triangle.vertices
        s_set = set(context.s)

        survivors: List[Colouring] = []
        for base in cs.enumerate_3_colourings(graph, cap, domain=outside):
            updates = {}
            for w in context.n1_star:
                # the one triangle vertex w misses gives w its label
                missing = next(t for t in triangle if not graph.has_edge(w, t))
                updates[w] = base[missing]
            candidate = base.with_labels(updates)
            if not cs.is_proper_partial(graph, candidate):
                continue

            lists = []
            for v in graph.vertices():
                if v in s_set:
                    owner = next(t for t in triangle if graph.has_edge(v, t))
                    lists.append([label for label in LABELS if label != candidate[owner]])
                else:
                    lists.append([candidate[v]])
            if cs.two_list_colouring(graph, lists) is not None:
                survivors.append(candidate)
        logger.debug(f"{len(survivors)} colourings of G - S extend to G")
        return survivors

    def _expand_private(
        self, graph: Graph, context: TriangleContext, survivors: List[Colouring]
    ) -> List[Colouring]:
        """All 3-colourings of G obtained by colouring S on top of each survivor."""
        cs = self.colouring_service
        s = context.s
        triangle = context.triangle.vertices
        owner_of = {v: next(t for t in triangle if graph.has_edge(v, t)) for v in s}
        members: List[Colouring] = []
        for base in survivors:
            lists = [
                [label for label in LABELS if label != base[owner_of[v]]] for v in s
            ]
            for choice in product(*lists):
                colouring = base.with_labels(dict(zip(s, choice)))
                if cs.is_proper_partial(graph, colouring):
                    members.append(colouring)
        return members
