"""Intermediate structures of the chair-free solver pipeline."""
from dataclasses import dataclass, field
from typing import Optional, Tuple

from diamkit.models.colouring import Colouring
from diamkit.models.graph import Layering


@dataclass(frozen=True)
class Triangle:
    """Three pairwise adjacent vertices, ascending."""

    x: int
    y: int
    z: int

    @classmethod
    def of(cls, a: int, b: int, c: int) -> "Triangle":
        x, y, z = sorted((a, b, c))
        return cls(x=x, y=y, z=z)

    @property
    def vertices(self) -> Tuple[int, int, int]:
        return (self.x, self.y, self.z)


@dataclass(frozen=True)
class TriangleContext:
    """Sets obtained by partitioning the graph from a triangle.

    ``private[i]`` is the private neighbourhood of ``triangle.vertices[i]``.
    ``full_neighbours`` are the vertices of N_1 adjacent to the whole
    triangle; any of them rules out a 3-colouring.
    """

    triangle: Triangle
    layering: Layering
    n1: Tuple[int, ...]
    n2: Tuple[int, ...]
    n1_star: Tuple[int, ...]
    n2_star: Tuple[int, ...]
    private: Tuple[Tuple[int, ...], Tuple[int, ...], Tuple[int, ...]]
    full_neighbours: Tuple[int, ...]
    vertex_count: int

    @property
    def s(self) -> Tuple[int, ...]:
        """S = N_1 minus N_1*, the union of the private neighbourhoods."""
        return tuple(sorted(self.private[0] + self.private[1] + self.private[2]))

    @property
    def owners(self) -> Tuple[int, ...]:
        """Triangle vertices that have at least one private neighbour."""
        return tuple(
            t for t, own in zip(self.triangle.vertices, self.private) if own
        )

    @property
    def outside_count(self) -> int:
        """|V(G) - N_1|."""
        return self.vertex_count - len(self.n1)

    @staticmethod
    def size_bound(d: int) -> int:
        return 9 * 2 ** d + 2

    def exceeds_size_bound(self, d: int) -> bool:
        return self.outside_count > self.size_bound(d)

    @property
    def sees_whole_triangle(self) -> bool:
        return bool(self.full_neighbours)

    def private_of(self, v: int) -> Tuple[int, ...]:
        return self.private[self.triangle.vertices.index(v)]


WHOLE_GRAPH = "whole_graph"
MINUS_PRIVATE = "minus_private"


@dataclass(frozen=True)
class ColouringFamily:
    """Bounded family of 3-colourings.

    In the ``whole_graph`` variant the members are all 3-colourings of G.
    In the ``minus_private`` variant they are the 3-colourings of G - P(x)
    that extend to G, with the vertices of P(x) labelled 0.
    """

    variant: str
    members: Tuple[Colouring, ...]
    triangle: Optional[Triangle] = None
    apex: Optional[int] = None
    private: Tuple[int, ...] = ()
    context: Optional[TriangleContext] = field(default=None, compare=False)

    def __len__(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class ExtensionTriple:
    """A family member, its forced extension and the free part S_c.

    ``extended`` labels everything except ``free``; ``components`` lists the
    components of G[S_c] as (side A, side B) with the smallest vertex in
    side A. ``colours`` is (c(x), c(y), c(z)).
    """

    member: Colouring
    extended: Colouring
    free: Tuple[int, ...]
    components: Tuple[Tuple[Tuple[int, ...], Tuple[int, ...]], ...]
    colours: Tuple[int, int, int]

    @property
    def smaller_sides(self) -> Tuple[int, ...]:
        """W: the smaller side of every component, side A on ties."""
        out = []
        for side_a, side_b in self.components:
            out.extend(side_a if len(side_a) <= len(side_b) else side_b)
        return tuple(sorted(out))

    def orient(self, sides_to_first: Tuple[int, ...]) -> Colouring:
        """Complete the extension.

        Args:
            sides_to_first: Per component, 0 if side A takes c(y) and side B
                takes c(z), 1 for the swap

        Returns:
            A total colouring of G
        """
        _, b, c = self.colours
        updates = {}
        for (side_a, side_b), flip in zip(self.components, sides_to_first):
            first, second = (b, c) if flip == 0 else (c, b)
            for v in side_a:
                updates[v] = first
            for v in side_b:
                updates[v] = second
        return self.extended.with_labels(updates)
