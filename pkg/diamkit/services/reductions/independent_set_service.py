"""Diameter-2 reductions for Independent Set.

Each builder returns a :class:`GadgetOutput` whose ``source`` is the input
graph and whose ``alpha_offset`` records alpha(output) - alpha(source).
"""
from itertools import combinations
from typing import List, Tuple

from diamkit.exceptions import DisconnectedGraphError, PreconditionViolation
from diamkit.models import Edge, GadgetKind, GadgetOutput, Graph
from diamkit.services.graph_service import GraphService
from diamkit.services.pattern_service import PatternService
from diamkit.utils import get_category_logger

logger = get_category_logger(__name__, "reduction")


class IndependentSetService:
    """Service for the Independent Set gadgets and the H-free dichotomy."""

    def __init__(self, graph_service: GraphService, pattern_service: PatternService):
        self.graph_service = graph_service
        self.pattern_service = pattern_service

    def _require_connected(self, graph: Graph) -> None:
        if not self.graph_service.is_connected(graph):
            raise DisconnectedGraphError("independent set gadgets need a connected graph")

    def _require_triangle_free(self, graph: Graph) -> None:
        triangle = self.pattern_service.find_induced(graph, self.graph_service.complete(3))
        if triangle is not None:
            raise PreconditionViolation("graph contains a triangle", witness=triangle)

    # ----------------------------------------------------- triangle-free

    @staticmethod
    def greedy_independent_set(graph: Graph, u: int, v: int) -> Tuple[int, ...]:
        """Maximal independent set containing the non-adjacent u and v,
        completed greedily in ascending vertex order."""
        chosen = {u, v}
        blocked = set(graph.neighbours(u)) | set(graph.neighbours(v))
        for w in graph.vertices():
            if w in chosen or w in blocked:
                continue
            chosen.add(w)
            blocked.update(graph.neighbours(w))
        return tuple(sorted(chosen))

    def build_is_diam2_trianglefree(self, graph: Graph) -> GadgetOutput:
        """Triangle-free graph of diameter at most 2 with alpha raised by n^2.

        Args:
            graph: Connected triangle-free graph on n >= 2 vertices without a
                dominating vertex

        Returns:
            Gadget with a copy of G, one x_uv per non-adjacent pair joined to a
            maximal independent set through u and v, and n^2 vertices Y joined
            to every x_uv

        Raises:
            PreconditionViolation: On a triangle, a dominating vertex or n < 2
            DisconnectedGraphError: If G is disconnected
        """
        n = graph.n
        if n < 2:
            raise PreconditionViolation(f"need at least 2 vertices, got {n}")
        self._require_connected(graph)
        self._require_triangle_free(graph)
        dominating = self.pattern_service.dominating_vertex(graph)
        if dominating is not None:
            raise PreconditionViolation(
                f"vertex {dominating + 1} dominates the graph", witness=(dominating,)
            )

        edges: List[Edge] = list(graph.edges())
        roles = [f"g:{v + 1}" for v in graph.vertices()]
        x_vertices = []
        for u, v in combinations(graph.vertices(), 2):
            if graph.has_edge(u, v):
                continue
            x = len(roles)
            roles.append(f"x:{u + 1},{v + 1}")
            x_vertices.append(x)
            edges.extend((w, x) for w in self.greedy_independent_set(graph, u, v))
        for j in range(1, n * n + 1):
            y = len(roles)
            roles.append(f"y:{j}")
            edges.extend((x, y) for x in x_vertices)

        result = Graph.from_edges(len(roles), edges)
        logger.info(
            f"Triangle-free gadget: {n} -> {result.n} vertices, {len(x_vertices)} pair vertices"
        )
        return GadgetOutput(
            kind=GadgetKind.IS_TRIANGLE_FREE,
            graph=result,
            roles=tuple(roles),
            diameter_bound=2,
            forbidden="K3",
            source=graph,
            alpha_offset=n * n,
        )

    # --------------------------------------------------------- K_{1,4}-free

    def peel_low_degree(self, graph: Graph) -> Tuple[Graph, Tuple[int, ...], int]:
        """Repeatedly put a vertex of degree at most 1 into the solution.

        The lowest such vertex is taken first and removed together with its
        neighbour.

        Returns:
            ``(core, mapping, offset)`` where ``mapping`` gives the host id of
            every core vertex and ``offset`` counts the peeled vertices
        """
        alive = set(graph.vertices())
        offset = 0
        while True:
            low = next(
                (
                    v for v in sorted(alive)
                    if sum(1 for w in graph.neighbours(v) if w in alive) <= 1
                ),
                None,
            )
            if low is None:
                break
            alive.discard(low)
            alive.difference_update(graph.neighbours(low))
            offset += 1
        core, mapping = self.graph_service.induced_subgraph(graph, alive)
        logger.debug(f"Peeled {offset} low-degree vertices, core has {core.n} vertices")
        return core, mapping, offset

    def build_is_diam2_k14free(self, graph: Graph) -> GadgetOutput:
        """K_{1,4}-free graph of diameter 2 from a subcubic triangle-free graph.

        After peeling the vertices of degree at most one, every pair of
        disjoint edges e1, e2 of the core gets a vertex x_{e1,e2} adjacent to
        their four endpoints; these and an apex y form a clique. The recorded
        offset is ``1 - peeled`` since alpha(core) = alpha(G) - peeled.

        Raises:
            PreconditionViolation: On a triangle or a vertex of degree above 3
            DisconnectedGraphError: If G is disconnected
        """
        self._require_connected(graph)
        self._require_triangle_free(graph)
        heavy = next((v for v in graph.vertices() if graph.degree(v) > 3), None)
        if heavy is not None:
            witness = (heavy,) + graph.neighbours(heavy)[:4]
            raise PreconditionViolation(f"vertex {heavy + 1} is the centre of a K1,4", witness=witness)

        core, mapping, offset = self.peel_low_degree(graph)
        roles = [f"g:{mapping[v] + 1}" for v in core.vertices()]
        edges: List[Edge] = list(core.edges())
        clique: List[int] = []
        core_edges = list(core.edges())
        for e1, e2 in combinations(core_edges, 2):
            if set(e1) & set(e2):
                continue
            x = len(roles)
            label = ",".join(str(mapping[v] + 1) for v in e1 + e2)
            roles.append(f"x:{label}")
            edges.extend((v, x) for v in e1 + e2)
            clique.append(x)
        y = len(roles)
        roles.append("y")
        clique.append(y)
        edges.extend(combinations(clique, 2))

        result = Graph.from_edges(len(roles), edges)
        logger.info(
            f"K1,4-free gadget: {graph.n} -> {result.n} vertices, peeled {offset}"
        )
        return GadgetOutput(
            kind=GadgetKind.IS_K14_FREE,
            graph=result,
            roles=tuple(roles),
            diameter_bound=2,
            forbidden="K1,4",
            source=graph,
            alpha_offset=1 - offset,
        )

    # ------------------------------------------------------------ dichotomy

    def add_dominating_vertex(self, graph: Graph) -> Graph:
        """G plus one vertex adjacent to every vertex of G."""
        apex = graph.n
        return Graph.from_edges(
            graph.n + 1, list(graph.edges()) + [(v, apex) for v in graph.vertices()]
        )

    def dominating_gadget(self, graph: Graph) -> GadgetOutput:
        result = self.add_dominating_vertex(graph)
        roles = tuple(f"g:{v + 1}" for v in graph.vertices()) + ("apex",)
        return GadgetOutput(
            kind=GadgetKind.DOMINATING,
            graph=result,
            roles=roles,
            diameter_bound=2,
            source=graph,
        )

    def independent_set_reduction(self, pattern: Graph, graph: Graph) -> GadgetOutput:
        """Reduce Independent Set on G to H-free graphs of diameter at most 2.

        Args:
            pattern: The forbidden graph H
            graph: Instance G, which must meet the chosen gadget's preconditions

        Returns:
            The gadget for the branch of the dichotomy that H falls in
        """
        ps = self.pattern_service
        if ps.contains_induced_cycle(pattern, 3):
            branch = "triangle"
            result = self.build_is_diam2_trianglefree(graph)
        elif ps.contains_induced_cycle(pattern):
            branch = "long cycle"
            result = self.dominating_gadget(graph)
        elif pattern.max_degree() >= 4:
            branch = "claw with four leaves"
            result = self.build_is_diam2_k14free(graph)
        else:
            branch = "dominating vertex"
            result = self.dominating_gadget(graph)
        logger.info(f"Independent set reduction for H on {pattern.n} vertices: {branch} branch")
        return result

