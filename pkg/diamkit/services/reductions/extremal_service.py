"""Chair-free graphs of diameter 2d - 1 with many 3-colourings."""
from typing import List

from diamkit.exceptions import CapExceededError, InvalidInputError
from diamkit.models import Edge, GadgetKind, GadgetOutput, Graph
from diamkit.utils import get_category_logger

logger = get_category_logger(__name__, "reduction")


def a_formula(d: int) -> int:
    """Number of 3-colourings of G_d: 6 * 2^(3 * (2^(d-1) - 1))."""
    if d < 1:
        raise InvalidInputError(f"d must be positive, got {d}")
    return 6 * 2 ** (3 * (2 ** (d - 1) - 1))


class ExtremalService:
    """Service generating the family G_1, G_2, ...

    G_1 is a triangle; G_{l} hangs two adjacent children below every vertex
    of the last level of G_{l-1}, each child adjacent to its parent.
    Vertex v_i^l (1-based level and index) has id 3(2^(l-1) - 1) + i - 1.
    """

    def __init__(self, max_depth: int = 22):
        self.max_depth = max_depth

    @staticmethod
    def vertex_id(level: int, index: int) -> int:
        return 3 * (2 ** (level - 1) - 1) + index - 1

    def generate_gd(self, d: int) -> Graph:
        """G_d on 3(2^d - 1) vertices.

        Raises:
            InvalidInputError: If d < 1
            CapExceededError: If d exceeds the configured depth
        """
        if d < 1:
            raise InvalidInputError(f"d must be positive, got {d}")
        if d > self.max_depth:
            raise CapExceededError(f"G_d at depth {d}", self.max_depth)
        edges: List[Edge] = [(0, 1), (0, 2), (1, 2)]
        for level in range(2, d + 1):
            for i in range(1, 3 * 2 ** (level - 2) + 1):
                parent = self.vertex_id(level - 1, i)
                left = self.vertex_id(level, 2 * i - 1)
                right = self.vertex_id(level, 2 * i)
                edges.extend([(parent, left), (parent, right), (left, right)])
        graph = Graph.from_edges(3 * (2 ** d - 1), edges)
        logger.debug(f"G_{d}: {graph.n} vertices, {graph.m} edges")
        return graph

    def gd_gadget(self, d: int) -> GadgetOutput:
        """G_d with its role map and claims (exact diameter 2d - 1, chair-free)."""
        graph = self.generate_gd(d)
        roles = tuple(
            f"v:{level}:{i}"
            for level in range(1, d + 1)
            for i in range(1, 3 * 2 ** (level - 1) + 1)
        )
        return GadgetOutput(
            kind=GadgetKind.EXTREMAL,
            graph=graph,
            roles=roles,
            diameter_bound=2 * d - 1,
            diameter_exact=True,
            forbidden="chair",
            parameter=d,
        )
