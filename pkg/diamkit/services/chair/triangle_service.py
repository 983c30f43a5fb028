"""Triangle finding and the sets obtained by partitioning from a triangle."""
from typing import List, Optional, Tuple

from diamkit.exceptions import InvalidInputError, PreconditionViolation
from diamkit.models import Graph, Triangle, TriangleContext
from diamkit.services.graph_service import GraphService
from diamkit.utils import get_category_logger

logger = get_category_logger(__name__, "solver")


class TriangleService:
    """Service for the triangle a non-bipartite chair-free graph must contain."""

    def __init__(self, graph_service: GraphService):
        self.graph_service = graph_service

    def find_triangle(self, graph: Graph) -> Triangle:
        """Find a triangle in a connected non-bipartite chair-free graph.

        A breadth-first search from vertex 0 yields an edge inside a layer
        with the smallest layer index. Its fundamental cycle is odd and is
        shortened along chords until it is induced. An induced odd cycle of
        length at least 5 has an outside neighbour; in a chair-free graph
        that neighbour sees two consecutive cycle vertices.

        Returns:
            Triangle with ascending vertices

        Raises:
            PreconditionViolation: On bipartite input, when no vertex lies
                outside an induced odd cycle, or with a chair as witness
        """
        if graph.n == 0:
            raise PreconditionViolation("graph is bipartite")
        layering = self.graph_service.bfs_layering(graph, (0,))
        edge = self._first_layer_edge(graph, layering.layers, layering.layer_index)
        if edge is None:
            raise PreconditionViolation("graph is bipartite")

        cycle = self.graph_service.fundamental_cycle(
            edge[0], edge[1], layering.parents, layering.layer_index
        )
        cycle = self._shorten(graph, cycle)
        if len(cycle) == 3:
            triangle = Triangle.of(*cycle)
            logger.debug(f"Triangle {triangle.vertices} from layer edge {edge}")
            return triangle
        return self._triangle_next_to_hole(graph, cycle)

    @staticmethod
    def _first_layer_edge(graph: Graph, layers, layer_index) -> Optional[Tuple[int, int]]:
        for layer in layers:
            for u in layer:
                for w in graph.neighbours(u):
                    if w > u and layer_index[w] == layer_index[u]:
                        return (u, w)
        return None

    @staticmethod
    def _shorten(graph: Graph, cycle: List[int]) -> List[int]:
        """Split an odd cycle along chords, keeping the odd part, until induced."""
        while len(cycle) > 3:
            position = {v: i for i, v in enumerate(cycle)}
            length = len(cycle)
            chord = None
            for i, v in enumerate(cycle):
                for w in graph.neighbours(v):
                    j = position.get(w)
                    if j is None or j <= i + 1 or (i == 0 and j == length - 1):
                        continue
                    chord = (i, j)
                    break
                if chord:
                    break
            if chord is None:
                return cycle
            i, j = chord
            inner = cycle[i:j + 1]
            cycle = inner if len(inner) % 2 == 1 else cycle[j:] + cycle[:i + 1]
        return cycle

    def _triangle_next_to_hole(self, graph: Graph, cycle: List[int]) -> Triangle:
        on_cycle = set(cycle)
        length = len(cycle)
        position = {v: i for i, v in enumerate(cycle)}
        for y in graph.vertices():
            if y in on_cycle:
                continue
            hits = sorted(position[w] for w in graph.neighbours(y) if w in on_cycle)
            if not hits:
                continue
            hit_set = set(hits)
            for i in hits:
                if (i + 1) % length in hit_set:
                    triangle = Triangle.of(y, cycle[i], cycle[(i + 1) % length])
                    logger.debug(f"Triangle {triangle.vertices} next to an induced {length}-cycle")
                    return triangle
            for i in hits:
                if (i + 2) % length not in hit_set:
                    witness = (
                        cycle[i],
                        y,
                        cycle[(i - 1) % length],
                        cycle[(i + 1) % length],
                        cycle[(i + 2) % length],
                    )
                    raise PreconditionViolation("graph contains a chair", witness=witness)
        raise PreconditionViolation(
            f"induced {length}-cycle with no outside neighbour; graph too small for this procedure"
        )

    def triangle_context(self, graph: Graph, triangle: Triangle) -> TriangleContext:
        """Partition the graph from a triangle.

        Raises:
            InvalidInputError: If the three vertices are not pairwise adjacent
        """
        x, y, z = triangle.vertices
        if not (graph.has_edge(x, y) and graph.has_edge(x, z) and graph.has_edge(y, z)):
            raise InvalidInputError(f"{triangle.vertices} is not a triangle")

        layering = self.graph_service.bfs_layering(graph, triangle.vertices)
        n1 = layering.layer(1)
        n2 = layering.layer(2)
        corners = triangle.vertices
        private: Tuple[List[int], List[int], List[int]] = ([], [], [])
        n1_star: List[int] = []
        full: List[int] = []
        for w in n1:
            seen = [i for i, t in enumerate(corners) if graph.has_edge(w, t)]
            if len(seen) == 3:
                full.append(w)
            elif len(seen) == 2:
                n1_star.append(w)
            else:
                private[seen[0]].append(w)

        n2_set = set(n2)
        n2_star = sorted({u for w in n1_star for u in graph.neighbours(w) if u in n2_set})
        context = TriangleContext(
            triangle=triangle,
            layering=layering,
            n1=n1,
            n2=n2,
            n1_star=tuple(n1_star),
            n2_star=tuple(n2_star),
            private=(tuple(private[0]), tuple(private[1]), tuple(private[2])),
            full_neighbours=tuple(full),
            vertex_count=graph.n,
        )
        logger.debug(
            f"Context of {corners}: |N_1|={len(n1)} |N_1*|={len(n1_star)} "
            f"private={[len(p) for p in private]} full={len(full)}"
        )
        return context
