"""Immutable graph values used on every hot path."""
from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence, Tuple

from diamkit.exceptions import InvalidInputError

Edge = Tuple[int, int]
Embedding = Tuple[int, ...]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adjacency[v]`` is the ascending tuple of neighbours of ``v``. Instances
    are hashable and compare structurally.
    """

    adjacency: Tuple[Tuple[int, ...], ...]
    edge_count: int

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> "Graph":
        """Build a graph from an edge iterable.

        Args:
            n: Number of vertices
            edges: Pairs of 0-based vertex ids, in any orientation

        Returns:
            The graph

        Raises:
            InvalidInputError: On loops, duplicate edges or out-of-range ids
        """
        if n < 0:
            raise InvalidInputError(f"negative vertex count {n}")
        buckets = [[] for _ in range(n)]
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidInputError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InvalidInputError(f"loop at vertex {u}")
            buckets[u].append(v)
            buckets[v].append(u)
            m += 1
        adjacency = []
        for v, nbrs in enumerate(buckets):
            nbrs.sort()
            for i in range(1, len(nbrs)):
                if nbrs[i] == nbrs[i - 1]:
                    raise InvalidInputError(f"duplicate edge ({v}, {nbrs[i]})")
            adjacency.append(tuple(nbrs))
        return cls(adjacency=tuple(adjacency), edge_count=m)

    @property
    def n(self) -> int:
        """Number of vertices."""
        return len(self.adjacency)

    @property
    def m(self) -> int:
        """Number of edges."""
        return self.edge_count

    def vertices(self) -> range:
        return range(len(self.adjacency))

    def neighbours(self, v: int) -> Tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def max_degree(self) -> int:
        return max((len(nbrs) for nbrs in self.adjacency), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        """Adjacency test by binary search in the sorted neighbour list."""
        nbrs = self.adjacency[u]
        i = bisect_left(nbrs, v)
        return i < len(nbrs) and nbrs[i] == v

    def edges(self) -> Iterator[Edge]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs[bisect_left(nbrs, u + 1):]:
                yield (u, v)


@dataclass(frozen=True)
class Layering:
    """Breadth-first partition of the vertices from a seed set.

    ``layer_index[v]`` is -1 and ``parents[v]`` is -1 for vertices that the
    search never reached; ``unreached`` lists them. Seeds have parent -1.
    """

    seeds: Tuple[int, ...]
    layers: Tuple[Tuple[int, ...], ...]
    layer_index: Tuple[int, ...]
    parents: Tuple[int, ...]
    unreached: Tuple[int, ...] = ()

    @property
    def depth(self) -> int:
        """Highest non-empty layer index."""
        return len(self.layers) - 1

    def layer(self, i: int) -> Tuple[int, ...]:
        """Layer ``N_i``, empty when ``i`` is past the last layer."""
        if 0 <= i < len(self.layers):
            return self.layers[i]
        return ()


@dataclass(frozen=True)
class Bipartition:
    """Two independent parts covering the graph, larger part first."""

    first: Tuple[int, ...]
    second: Tuple[int, ...]

    @classmethod
    def ordered(cls, part_a: Sequence[int], part_b: Sequence[int]) -> "Bipartition":
        a, b = tuple(sorted(part_a)), tuple(sorted(part_b))
        if len(b) > len(a) or (len(a) == len(b) and a and b and b[0] < a[0]):
            a, b = b, a
        return cls(first=a, second=b)


@dataclass(frozen=True)
class BipartiteChairFreeClass:
    """Trichotomy of connected bipartite chair-free graphs.

    ``removed_matching`` lists the non-edges between the parts when the graph
    is a complete bipartite graph minus a matching. It is also filled for a
    cycle or path that happens to be such a graph (for example C_6).
    """

    tag: str
    bipartition: Bipartition
    removed_matching: Optional[Tuple[Edge, ...]] = None

    @property
    def is_complex(self) -> bool:
        return self.removed_matching is not None
