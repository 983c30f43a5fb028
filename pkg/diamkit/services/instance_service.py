"""Instance generators for the CLI and the test corpus."""
import random
from typing import Callable, List, Optional

import networkx as nx

from diamkit.exceptions import CapExceededError, InvalidInputError
from diamkit.models import Edge, Graph
from diamkit.services.graph_service import GraphService
from diamkit.services.pattern_service import PatternService
from diamkit.utils import get_category_logger

logger = get_category_logger(__name__, "graph")

ATLAS_MAX_VERTICES = 7


class InstanceService:
    """Service producing random and exhaustive chair-free instances."""

    def __init__(
        self,
        graph_service: GraphService,
        pattern_service: PatternService,
        max_attempts: int = 10_000,
    ):
        """Initialize instance service.

        Args:
            graph_service: Graph primitives
            pattern_service: Chair detection for rejection sampling
            max_attempts: Samples drawn before giving up
        """
        self.graph_service = graph_service
        self.pattern_service = pattern_service
        self.max_attempts = max_attempts

    def pattern(self, name: str) -> Graph:
        ps = self.pattern_service
        return ps.build_pattern(ps.parse_pattern_name(name))

    def random_chair_free(
        self,
        n: int,
        seed: int = 0,
        density: float = 0.75,
        max_diameter: Optional[int] = None,
    ) -> Graph:
        """Connected chair-free graph drawn by rejection sampling.

        Each sample is a random recursive spanning tree plus every other pair
        independently with probability ``density``.

        Raises:
            InvalidInputError: On n < 1 or a density outside [0, 1]
            CapExceededError: If no sample is accepted within the attempt budget
        """
        self._check_arguments(n, density)
        rng = random.Random(seed)
        return self._rejection_sample(n, lambda: self._sample(rng, n, density), max_diameter)

    def random_tripartite_chair_free(
        self,
        n: int,
        seed: int = 0,
        density: float = 0.8,
        max_diameter: Optional[int] = None,
    ) -> Graph:
        """Connected chair-free graph with a planted proper 3-colouring.

        Vertices get a random part out of three (vertices 0 and 1 in
        different parts); the spanning tree and the extra pairs only join
        different parts.

        Raises:
            InvalidInputError: On n < 1 or a density outside [0, 1]
            CapExceededError: If no sample is accepted within the attempt budget
        """
        self._check_arguments(n, density)
        rng = random.Random(seed)
        return self._rejection_sample(
            n, lambda: self._sample_tripartite(rng, n, density), max_diameter
        )

    @staticmethod
    def _check_arguments(n: int, density: float) -> None:
        if n < 1:
            raise InvalidInputError(f"need at least one vertex, got {n}")
        if not 0.0 <= density <= 1.0:
            raise InvalidInputError(f"density {density} outside [0, 1]")

    def _rejection_sample(
        self, n: int, sample: Callable[[], Graph], max_diameter: Optional[int]
    ) -> Graph:
        for attempt in range(1, self.max_attempts + 1):
            graph = sample()
            if max_diameter is not None and self.graph_service.diameter(graph) > max_diameter:
                continue
            chair_free, _ = self.pattern_service.is_chair_free(graph)
            if chair_free:
                logger.debug(f"Accepted random graph n={n} m={graph.m} after {attempt} samples")
                return graph
        raise CapExceededError(f"no chair-free sample on {n} vertices", self.max_attempts)

    @staticmethod
    def _sample(rng: random.Random, n: int, density: float) -> Graph:
        edges: List[Edge] = [(rng.randrange(v), v) for v in range(1, n)]
        tree = {(min(e), max(e)) for e in edges}
        for u in range(n):
            for v in range(u + 1, n):
                if (u, v) not in tree and rng.random() < density:
                    edges.append((u, v))
        return Graph.from_edges(n, edges)

    @staticmethod
    def _sample_tripartite(rng: random.Random, n: int, density: float) -> Graph:
        part = [0, 1][:n] + [rng.randrange(3) for _ in range(2, n)]
        edges: List[Edge] = []
        for v in range(1, n):
            earlier = [u for u in range(v) if part[u] != part[v]]
            edges.append((rng.choice(earlier), v))
        tree = set(edges)
        for u in range(n):
            for v in range(u + 1, n):
                if part[u] != part[v] and (u, v) not in tree and rng.random() < density:
                    edges.append((u, v))
        return Graph.from_edges(n, edges)

    def atlas(self, max_vertices: int) -> List[Graph]:
        """All connected chair-free graphs on 1..max_vertices vertices, up to
        isomorphism, in graph atlas order.

        Raises:
            InvalidInputError: Past the atlas range
        """
        if not 1 <= max_vertices <= ATLAS_MAX_VERTICES:
            raise InvalidInputError(
                f"atlas covers 1..{ATLAS_MAX_VERTICES} vertices, got {max_vertices}"
            )
        out = []
        for nx_graph in nx.graph_atlas_g():
            size = nx_graph.number_of_nodes()
            if size == 0 or size > max_vertices or not nx.is_connected(nx_graph):
                continue
            graph = self.graph_service.from_networkx(nx_graph)
            if self.pattern_service.is_chair_free(graph)[0]:
                out.append(graph)
        logger.info(f"Atlas up to {max_vertices} vertices: {len(out)} connected chair-free graphs")
        return out
