"""Graph parsing, serialization and the linear-time primitives."""
from collections import deque
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from diamkit.exceptions import DisconnectedGraphError, GraphFormatError, InvalidInputError
from diamkit.models import Bipartition, Edge, Graph, Layering
from diamkit.utils import get_category_logger

logger = get_category_logger(__name__, "graph")


def _content_lines(text: str) -> Iterable[Tuple[int, List[str]]]:
    """Yield (line number, tokens) for every non-blank, non-comment line."""
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield number, line.split()


def _parse_int(token: str, number: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphFormatError(f"line {number}: {what} '{token}' is not an integer")


class GraphService:
    """Service for graph I/O and breadth-first primitives.

    Every method is pure; the service carries no state and may be shared.
    """

    # ------------------------------------------------------------------ I/O

    def parse_graph(self, text: str) -> Graph:
        """Parse the edge-list format.

        Args:
            text: ``p <n> <m>`` header followed by ``m`` lines ``e <u> <v>``
                (1-based ids, ``#`` comments allowed)

        Returns:
            Parsed graph

        Raises:
            GraphFormatError: On a malformed header or edge line, or a wrong edge count
            InvalidInputError: On out-of-range ids, loops or duplicate edges
        """
        lines = iter(_content_lines(text))
        header = next(lines, None)
        if header is None:
            raise GraphFormatError("missing 'p <n> <m>' header")
        number, tokens = header
        if len(tokens) != 3 or tokens[0] != "p":
            raise GraphFormatError(f"line {number}: expected 'p <n> <m>', got '{' '.join(tokens)}'")
        n = _parse_int(tokens[1], number, "vertex count")
        m = _parse_int(tokens[2], number, "edge count")
        if n < 0 or m < 0:
            raise GraphFormatError(f"line {number}: negative size in header")

        edges: List[Edge] = []
        for number, tokens in lines:
            if len(tokens) != 3 or tokens[0] != "e":
                raise GraphFormatError(f"line {number}: expected 'e <u> <v>', got '{' '.join(tokens)}'")
            u = _parse_int(tokens[1], number, "vertex")
            v = _parse_int(tokens[2], number, "vertex")
            if not (1 <= u <= n and 1 <= v <= n):
                raise InvalidInputError(f"line {number}: vertex out of range 1..{n}")
            edges.append((u - 1, v - 1))

        if len(edges) != m:
            raise GraphFormatError(f"header announces {m} edges, found {len(edges)}")
        graph = Graph.from_edges(n, edges)
        logger.debug(f"Parsed graph n={graph.n} m={graph.m}")
        return graph

    def serialize_graph(self, graph: Graph, comments: Sequence[str] = ()) -> str:
        """Canonical edge-list text, edges in lexicographic order."""
        out = [f"# {comment}" for comment in comments]
        out.append(f"p {graph.n} {graph.m}")
        out.extend(f"e {u + 1} {v + 1}" for u, v in graph.edges())
        return "\n".join(out) + "\n"

    def to_networkx(self, graph: Graph) -> nx.Graph:
        nx_graph = nx.Graph()
        nx_graph.add_nodes_from(graph.vertices())
        nx_graph.add_edges_from(graph.edges())
        return nx_graph

    def from_networkx(self, nx_graph: nx.Graph) -> Graph:
        """Convert, relabelling nodes to ``0..n-1`` in sorted node order."""
        index = {node: i for i, node in enumerate(sorted(nx_graph.nodes))}
        return Graph.from_edges(len(index), ((index[u], index[v]) for u, v in nx_graph.edges))

    # --------------------------------------------------------- breadth-first

    def bfs_layering(self, graph: Graph, seeds: Iterable[int]) -> Layering:
        """Partition the vertices from a seed set.

        One breadth-first search from all seeds at once (the seeds act as the
        children of a virtual source).

        Args:
            graph: Host graph
            seeds: Non-empty seed set S

        Returns:
            Layering with N_0 = S; unreachable vertices are listed separately

        Raises:
            InvalidInputError: On an empty seed set or an out-of-range seed
        """
        seed_tuple = tuple(sorted(set(seeds)))
        if not seed_tuple:
            raise InvalidInputError("empty seed set")
        for s in seed_tuple:
            if not 0 <= s < graph.n:
                raise InvalidInputError(f"seed {s} out of range for n={graph.n}")

        layer_index = [-1] * graph.n
        parents = [-1] * graph.n
        for s in seed_tuple:
            layer_index[s] = 0
        layers: List[Tuple[int, ...]] = [seed_tuple]
        frontier = list(seed_tuple)
        while frontier:
            nxt: List[int] = []
            depth = len(layers)
            for u in frontier:
                for w in graph.neighbours(u):
                    if layer_index[w] == -1:
                        layer_index[w] = depth
                        parents[w] = u
                        nxt.append(w)
            if nxt:
                layers.append(tuple(sorted(nxt)))
            frontier = nxt

        unreached = tuple(v for v in graph.vertices() if layer_index[v] == -1)
        return Layering(
            seeds=seed_tuple,
            layers=tuple(layers),
            layer_index=tuple(layer_index),
            parents=tuple(parents),
            unreached=unreached,
        )

    def eccentricity(self, graph: Graph, v: int) -> int:
        """Largest distance from ``v``.

        Raises:
            DisconnectedGraphError: If some vertex is unreachable from ``v``
        """
        layering = self.bfs_layering(graph, (v,))
        if layering.unreached:
            raise DisconnectedGraphError(
                f"vertex {layering.unreached[0] + 1} unreachable from {v + 1}"
            )
        return layering.depth

    def diameter(self, graph: Graph) -> int:
        """Exact diameter by one breadth-first search per vertex (quadratic).

        Raises:
            InvalidInputError: On the empty graph
            DisconnectedGraphError: On disconnected input
        """
        if graph.n == 0:
            raise InvalidInputError("diameter of the empty graph is undefined")
        return max(self.eccentricity(graph, v) for v in graph.vertices())

    def connected_components(self, graph: Graph) -> List[List[int]]:
        """Components as ascending vertex lists, ordered by smallest vertex."""
        seen = [False] * graph.n
        components: List[List[int]] = []
        for root in graph.vertices():
            if seen[root]:
                continue
            seen[root] = True
            queue = deque([root])
            members = [root]
            while queue:
                u = queue.popleft()
                for w in graph.neighbours(u):
                    if not seen[w]:
                        seen[w] = True
                        members.append(w)
                        queue.append(w)
            components.append(sorted(members))
        return components

    def is_connected(self, graph: Graph) -> bool:
        return len(self.connected_components(graph)) <= 1

    def bipartition(self, graph: Graph) -> Tuple[Optional[Bipartition], Optional[List[int]]]:
        """2-colour the graph by breadth-first search.

        Returns:
            ``(bipartition, None)`` when bipartite, else ``(None, cycle)``
            where ``cycle`` is the fundamental odd cycle closed by the first
            conflicting edge met in search order
        """
        side = [-1] * graph.n
        parents = [-1] * graph.n
        depth = [0] * graph.n
        for root in graph.vertices():
            if side[root] != -1:
                continue
            side[root] = 0
            queue = deque([root])
            while queue:
                u = queue.popleft()
                for w in graph.neighbours(u):
                    if side[w] == -1:
                        side[w] = 1 - side[u]
                        parents[w] = u
                        depth[w] = depth[u] + 1
                        queue.append(w)
                    elif side[w] == side[u]:
                        cycle = self.fundamental_cycle(u, w, parents, depth)
                        logger.debug(f"Odd cycle of length {len(cycle)} closed by edge ({u}, {w})")
                        return None, cycle

        first = [v for v in graph.vertices() if side[v] == 0]
        second = [v for v in graph.vertices() if side[v] == 1]
        return Bipartition.ordered(first, second), None

    @staticmethod
    def fundamental_cycle(u: int, v: int, parents: Sequence[int], depth: Sequence[int]) -> List[int]:
        """Tree path u..lca..v closed by the non-tree edge uv."""
        left, right = [u], [v]
        a, b = u, v
        while depth[a] > depth[b]:
            a = parents[a]
            left.append(a)
        while depth[b] > depth[a]:
            b = parents[b]
            right.append(b)
        while a != b:
            a = parents[a]
            b = parents[b]
            left.append(a)
            right.append(b)
        # both lists end at the common ancestor
        return left + right[-2::-1]

    def is_forest(self, graph: Graph) -> bool:
        """A graph is a forest iff it has exactly n - m components."""
        if graph.n == 0:
            return True
        if graph.m >= graph.n:
            return False
        return len(self.connected_components(graph)) == graph.n - graph.m

    def is_star_forest(self, graph: Graph) -> bool:
        """Forest whose every component has diameter at most 2.

        A tree of order p has diameter at most 2 iff its maximum degree is
        p - 1 (or p <= 2).
        """
        if not self.is_forest(graph):
            return False
        for component in self.connected_components(graph):
            size = len(component)
            if size <= 2:
                continue
            if max(graph.degree(v) for v in component) != size - 1:
                return False
        return True

    # ------------------------------------------------------------ subgraphs

    def induced_subgraph(self, graph: Graph, vertices: Iterable[int]) -> Tuple[Graph, Tuple[int, ...]]:
        """Subgraph induced by ``vertices``.

        Returns:
            ``(subgraph, mapping)`` where ``mapping[i]`` is the host id of
            subgraph vertex ``i`` (ascending)
        """
        mapping = tuple(sorted(set(vertices)))
        index = {v: i for i, v in enumerate(mapping)}
        edges = []
        for v in mapping:
            for w in graph.neighbours(v):
                if w > v and w in index:
                    edges.append((index[v], index[w]))
        return Graph.from_edges(len(mapping), edges), mapping

    def neighbourhood_of_set(self, graph: Graph, vertices: Iterable[int]) -> Tuple[int, ...]:
        """N(U): vertices outside U with a neighbour in U."""
        members = set(vertices)
        out = {w for v in members for w in graph.neighbours(v) if w not in members}
        return tuple(sorted(out))

    def private_neighbours(self, graph: Graph, vertices: Iterable[int]) -> Dict[int, Tuple[int, ...]]:
        """Map each v in S to its private neighbours with respect to S."""
        members = sorted(set(vertices))
        member_set = set(members)
        hits: Dict[int, int] = {}
        owner: Dict[int, int] = {}
        for v in members:
            for w in graph.neighbours(v):
                if w not in member_set:
                    hits[w] = hits.get(w, 0) + 1
                    owner[w] = v
        result: Dict[int, List[int]] = {v: [] for v in members}
        for w, count in hits.items():
            if count == 1:
                result[owner[w]].append(w)
        return {v: tuple(sorted(ws)) for v, ws in result.items()}

    # ------------------------------------------------------------- builders

    @staticmethod
    def path(n: int) -> Graph:
        return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))

    @staticmethod
    def cycle(n: int) -> Graph:
        if n < 3:
            raise InvalidInputError(f"cycle needs at least 3 vertices, got {n}")
        return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @staticmethod
    def complete(n: int) -> Graph:
        return Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)))

    @staticmethod
    def empty(n: int) -> Graph:
        return Graph.from_edges(n, ())

    @staticmethod
    def complete_bipartite(a: int, b: int) -> Graph:
        """K_{a,b}; part A is ``0..a-1``."""
        return Graph.from_edges(a + b, ((u, a + v) for u in range(a) for v in range(b)))

    @staticmethod
    def complex(a: int, b: int, removed: int) -> Graph:
        """K_{a,b} minus the matching ``{(i, a + i) : i < removed}``."""
        if removed > min(a, b) or removed < 0:
            raise InvalidInputError(f"cannot remove a matching of size {removed} from K_{a},{b}")
        return Graph.from_edges(
            a + b,
            ((u, a + v) for u in range(a) for v in range(b) if not (u == v and u < removed)),
        )

    @staticmethod
    def petersen() -> Graph:
        outer = [(i, (i + 1) % 5) for i in range(5)]
        spokes = [(i, i + 5) for i in range(5)]
        inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        return Graph.from_edges(10, outer + spokes + inner)

    @staticmethod
    def disjoint_union(*graphs: Graph) -> Graph:
        edges: List[Edge] = []
        offset = 0
        for graph in graphs:
            edges.extend((u + offset, v + offset) for u, v in graph.edges())
            offset += graph.n
        return Graph.from_edges(offset, edges)
