"""Induced-subgraph detection and structural classifiers."""
import re
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from diamkit.exceptions import (
    CapExceededError,
    DisconnectedGraphError,
    InvalidInputError,
    PreconditionViolation,
)
from diamkit.models import (
    BipartiteChairFreeClass,
    Bipartition,
    Edge,
    Embedding,
    Graph,
    PatternSpec,
)
from diamkit.services.graph_service import GraphService
from diamkit.utils import get_category_logger

logger = get_category_logger(__name__, "pattern")

CHAIR = PatternSpec(kind="subdivided_claw", h=1, i=1, j=2)

_NAME_RE = {
    "path": re.compile(r"^P(\d+)$"),
    "cycle": re.compile(r"^C(\d+)$"),
    "complete": re.compile(r"^K(\d+)$"),
    "star": re.compile(r"^K1,(\d+)$"),
    "subdivided_star": re.compile(r"^K1,(\d+)\^(\d+)$"),
    "subdivided_claw": re.compile(r"^S(\d+),(\d+),(\d+)$"),
}


class _InducedSearch:
    """Backtracking search for one induced embedding of a pattern."""

    def __init__(self, host: Graph, pattern: Graph, anchors: Optional[Sequence[int]]):
        self.host = host
        self.pattern = pattern
        self.anchors = tuple(sorted(set(anchors))) if anchors is not None else None
        self.order = self._pattern_order(pattern)
        self.position = {p: i for i, p in enumerate(self.order)}
        self.earlier_nbrs: List[List[int]] = []
        self.earlier_non_nbrs: List[List[int]] = []
        for i, p in enumerate(self.order):
            before = self.order[:i]
            self.earlier_nbrs.append([q for q in before if pattern.has_edge(p, q)])
            self.earlier_non_nbrs.append([q for q in before if not pattern.has_edge(p, q)])
        self.twin_before = self._twin_constraints(pattern)
        self.pattern_sig = [self._signature(pattern, p) for p in pattern.vertices()]
        self.host_sig = [self._signature(host, v) for v in host.vertices()]
        self.image: Dict[int, int] = {}
        self.used = set()

    @staticmethod
    def _signature(graph: Graph, v: int) -> Tuple[int, ...]:
        return tuple(sorted((graph.degree(w) for w in graph.neighbours(v)), reverse=True))

    @staticmethod
    def _pattern_order(pattern: Graph) -> List[int]:
        """BFS from the highest-degree vertex, higher degree first within a layer."""
        key = lambda v: (-pattern.degree(v), v)
        placed = [False] * pattern.n
        order: List[int] = []
        for start in sorted(pattern.vertices(), key=key):
            if placed[start]:
                continue
            placed[start] = True
            layer = [start]
            while layer:
                order.extend(layer)
                nxt = set()
                for u in layer:
                    for w in pattern.neighbours(u):
                        if not placed[w]:
                            placed[w] = True
                            nxt.add(w)
                layer = sorted(nxt, key=key)
        return order

    def _twin_constraints(self, pattern: Graph) -> Dict[int, int]:
        """Map a pattern vertex to the previous twin in search order.

        Twins (equal open or equal closed neighbourhoods) are interchangeable,
        so their images may be required to increase along the search order.
        """
        classes: Dict[Tuple[str, Tuple[int, ...]], List[int]] = {}
        for p in self.order:
            if self.anchors is not None and p == self.order[0]:
                continue
            open_nbhd = pattern.neighbours(p)
            closed_nbhd = tuple(sorted(open_nbhd + (p,)))
            classes.setdefault(("open", open_nbhd), []).append(p)
            classes.setdefault(("closed", closed_nbhd), []).append(p)
        before: Dict[int, int] = {}
        for members in classes.values():
            for prev, cur in zip(members, members[1:]):
                before[cur] = prev
        return before

    def _dominates(self, v: int, p: int) -> bool:
        host_sig = self.host_sig[v]
        pat_sig = self.pattern_sig[p]
        if len(host_sig) < len(pat_sig):
            return False
        return all(h >= q for h, q in zip(host_sig, pat_sig))

    def _candidates(self, i: int) -> Iterable[int]:
        p = self.order[i]
        nbrs = self.earlier_nbrs[i]
        if nbrs:
            return self.host.neighbours(self.image[nbrs[0]])
        if i == 0 and self.anchors is not None:
            return self.anchors
        return self.host.vertices()

    def _fits(self, i: int, v: int) -> bool:
        p = self.order[i]
        if v in self.used or self.host.degree(v) < self.pattern.degree(p):
            return False
        twin = self.twin_before.get(p)
        if twin is not None and v < self.image[twin]:
            return False
        if not self._dominates(v, p):
            return False
        for q in self.earlier_nbrs[i]:
            if not self.host.has_edge(v, self.image[q]):
                return False
        for q in self.earlier_non_nbrs[i]:
            if self.host.has_edge(v, self.image[q]):
                return False
        return True

    def run(self) -> Optional[Embedding]:
        if self._extend(0):
            return tuple(self.image[p] for p in self.pattern.vertices())
        return None

    def _extend(self, i: int) -> bool:
        if i == len(self.order):
            return True
        p = self.order[i]
        for v in self._candidates(i):
            if not self._fits(i, v):
                continue
            self.image[p] = v
            self.used.add(v)
            if self._extend(i + 1):
                return True
            self.used.discard(v)
            del self.image[p]
        return False


class PatternService:
    """Service for pattern construction and H-freeness checks."""

    def __init__(self, graph_service: GraphService, pattern_cap: int = 24):
        """Initialize pattern service.

        Args:
            graph_service: Graph primitives
            pattern_cap: Largest pattern order accepted by find_induced
        """
        self.graph_service = graph_service
        self.pattern_cap = pattern_cap

    def build_pattern(self, spec: PatternSpec) -> Graph:
        """Build a pattern with the centre first, then its arms.

        Raises:
            InvalidInputError: On missing or out-of-range parameters
        """
        gs = self.graph_service
        if spec.kind in ("path", "cycle", "complete", "star"):
            if spec.r is None or spec.r < 1:
                raise InvalidInputError(f"{spec.kind} needs r >= 1")
            if spec.kind == "path":
                return gs.path(spec.r)
            if spec.kind == "cycle":
                return gs.cycle(spec.r)
            if spec.kind == "complete":
                return gs.complete(spec.r)
            return Graph.from_edges(spec.r + 1, ((0, leaf) for leaf in range(1, spec.r + 1)))

        if spec.kind == "subdivided_claw":
            h, i, j = spec.h, spec.i, spec.j
            if h is None or i is None or j is None or not 1 <= h <= i <= j:
                raise InvalidInputError("subdivided claw needs 1 <= h <= i <= j")
            return self._spider((h, i, j))

        if spec.kind == "subdivided_star":
            if spec.r is None or spec.r < 1 or spec.ell is None or spec.ell < 0:
                raise InvalidInputError("subdivided star needs r >= 1 and ell >= 0")
            return self._spider((1,) * (spec.r - 1) + (spec.ell + 1,))

        if spec.vertex_count is None or spec.vertex_count < 0:
            raise InvalidInputError("explicit pattern needs vertex_count")
        return Graph.from_edges(spec.vertex_count, (tuple(e) for e in spec.edges))

    @staticmethod
    def _spider(arms: Sequence[int]) -> Graph:
        """Centre 0 with pendant paths of the given lengths, numbered arm by arm."""
        edges: List[Edge] = []
        nxt = 1
        for length in arms:
            prev = 0
            for _ in range(length):
                edges.append((prev, nxt))
                prev = nxt
                nxt += 1
        return Graph.from_edges(nxt, edges)

    def parse_pattern_name(self, name: str) -> PatternSpec:
        """Parse names such as ``chair``, ``P5``, ``C7``, ``K4``, ``K1,4``,
        ``S1,1,2`` or ``K1,4^3``.

        Raises:
            InvalidInputError: On an unknown name
        """
        text = name.strip().replace(" ", "").replace("_", "")
        if text.lower() == "chair":
            return CHAIR
        if text.lower() == "claw":
            return PatternSpec(kind="star", r=3)
        for kind, pattern in _NAME_RE.items():
            match = pattern.match(text)
            if not match:
                continue
            values = [int(g) for g in match.groups()]
            if kind == "subdivided_star":
                return PatternSpec(kind=kind, r=values[0], ell=values[1])
            if kind == "subdivided_claw":
                h, i, j = sorted(values)
                return PatternSpec(kind=kind, h=h, i=i, j=j)
            return PatternSpec(kind=kind, r=values[0])
        raise InvalidInputError(f"unknown pattern '{name}'")

    def find_induced(
        self,
        graph: Graph,
        pattern: Graph,
        anchors: Optional[Sequence[int]] = None,
    ) -> Optional[Embedding]:
        """Find an induced copy of ``pattern`` in ``graph``.

        Exponential in the worst case; meant for verification only.

        Args:
            graph: Host graph
            pattern: Pattern graph
            anchors: Optional host candidates for the first searched pattern
                vertex (a highest-degree one)

        Returns:
            Embedding ``e`` with ``e[p]`` the host image of pattern vertex ``p``,
            or None

        Raises:
            CapExceededError: If the pattern is larger than the cap
        """
        if pattern.n > self.pattern_cap:
            raise CapExceededError(f"pattern has {pattern.n} vertices", self.pattern_cap)
        if pattern.n == 0:
            return ()
        if pattern.n > graph.n:
            return None
        embedding = _InducedSearch(graph, pattern, anchors).run()
        logger.debug(
            f"Induced search n={graph.n} pattern n={pattern.n}: "
            f"{'found' if embedding is not None else 'absent'}"
        )
        return embedding

    def is_h_free(self, graph: Graph, pattern: Graph, anchors: Optional[Sequence[int]] = None) -> bool:
        return self.find_induced(graph, pattern, anchors) is None

    def is_chair_free(self, graph: Graph) -> Tuple[bool, Optional[Embedding]]:
        """Chair-freeness with a witness embedding when a chair exists."""
        witness = self.find_induced(graph, self.build_pattern(CHAIR))
        return witness is None, witness

    def in_class_s(self, graph: Graph) -> bool:
        """Every component is a path or a subdivided claw."""
        for component in self.graph_service.connected_components(graph):
            degrees = [graph.degree(v) for v in component]
            edges = sum(degrees) // 2
            if edges != len(component) - 1:
                return False
            if max(degrees, default=0) > 3 or degrees.count(3) > 1:
                return False
        return True

    def is_polyad(self, graph: Graph) -> bool:
        """Tree with exactly one vertex of degree at least 3."""
        if graph.n == 0 or graph.m != graph.n - 1 or not self.graph_service.is_connected(graph):
            return False
        return sum(1 for v in graph.vertices() if graph.degree(v) >= 3) == 1

    def dominating_vertex(self, graph: Graph) -> Optional[int]:
        for v in graph.vertices():
            if graph.degree(v) == graph.n - 1:
                return v
        return None

    def has_dominating_vertex(self, graph: Graph) -> bool:
        return self.dominating_vertex(graph) is not None

    def contains_induced_cycle(self, graph: Graph, length: Optional[int] = None) -> bool:
        """Whether the graph has an induced cycle (of the given length).

        Any cycle contains a chordless one, so without a length this is the
        forest test.
        """
        if length is None:
            return not self.graph_service.is_forest(graph)
        return self.find_induced(graph, self.graph_service.cycle(length)) is not None

    def classify_bipartite_chair_free(
        self,
        graph: Graph,
        bipartition: Optional[Bipartition] = None,
    ) -> BipartiteChairFreeClass:
        """Classify a connected bipartite chair-free graph.

        Returns:
            Tag ``cycle``, ``path`` or ``complex``. The removed matching is
            attached whenever the graph is a complete bipartite graph minus
            a matching, including cycles and paths that are such graphs.

        Raises:
            DisconnectedGraphError: On disconnected input
            PreconditionViolation: If the graph is not bipartite or fits none
                of the three shapes (so it contains a chair)
        """
        gs = self.graph_service
        if not gs.is_connected(graph):
            raise DisconnectedGraphError("classification needs a connected graph")
        if bipartition is None:
            bipartition, odd_cycle = gs.bipartition(graph)
            if bipartition is None:
                raise PreconditionViolation("graph is not bipartite", witness=tuple(odd_cycle))

        removed = self._removed_matching(graph, bipartition)
        if graph.max_degree() <= 2:
            tag = "cycle" if graph.m == graph.n and graph.n >= 3 else "path"
            return BipartiteChairFreeClass(tag=tag, bipartition=bipartition, removed_matching=removed)
        if removed is None:
            raise PreconditionViolation(
                "bipartite graph is neither a cycle, a path nor a complete bipartite graph minus a matching"
            )
        logger.debug(f"Complex with parts {len(bipartition.first)}/{len(bipartition.second)}, "
                     f"{len(removed)} removed edges")
        return BipartiteChairFreeClass(tag="complex", bipartition=bipartition, removed_matching=removed)

    @staticmethod
    def _removed_matching(graph: Graph, bipartition: Bipartition) -> Optional[Tuple[Edge, ...]]:
        """Non-edges across the parts if they form a matching, else None."""
        partner: Dict[int, int] = {}
        for own, other in ((bipartition.first, bipartition.second),
                           (bipartition.second, bipartition.first)):
            for v in own:
                missing = len(other) - graph.degree(v)
                if missing > 1:
                    return None
                if missing == 1:
                    nbrs = set(graph.neighbours(v))
                    partner[v] = next(w for w in other if w not in nbrs)
        for v, w in partner.items():
            if partner.get(w) != v:
                return None
        return tuple(sorted((min(v, w), max(v, w)) for v, w in partner.items() if v < w))
