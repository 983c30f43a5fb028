"""Colouring verifiers, 2-list colouring and bounded 3-colouring enumeration."""
from collections import deque
from itertools import combinations
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Set, Tuple

from diamkit.exceptions import CapExceededError, GraphFormatError, InvalidInputError
from diamkit.models import LABELS, Colouring, ColouringMode, Graph, ListAssignment, TransversalKind
from diamkit.services.graph_service import GraphService
from diamkit.utils import get_category_logger

logger = get_category_logger(__name__, "colouring")


def _strongly_connected_components(succ: Sequence[List[int]]) -> List[int]:
    """Tarjan's algorithm without recursion.

    Returns:
        Component id per node; ids follow reverse topological order
    """
    n = len(succ)
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    comp = [-1] * n
    stack: List[int] = []
    counter = 0
    comp_count = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, i = work[-1]
            if i < len(succ[v]):
                work[-1] = (v, i + 1)
                w = succ[v][i]
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w]:
                    low[v] = min(low[v], index[w])
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp[w] = comp_count
                    if w == v:
                        break
                comp_count += 1
    return comp


class ColouringService:
    """Service for colouring certificates and small colouring searches."""

    def __init__(self, graph_service: GraphService, enumeration_cap: int = 10**7):
        """Initialize colouring service.

        Args:
            graph_service: Graph primitives
            enumeration_cap: Default cap on enumerated 3-colourings
        """
        self.graph_service = graph_service
        self.enumeration_cap = enumeration_cap

    # ---------------------------------------------------------- verifiers

    @staticmethod
    def _require_total(graph: Graph, colouring: Colouring) -> None:
        if len(colouring) != graph.n:
            raise InvalidInputError(
                f"colouring has {len(colouring)} labels for {graph.n} vertices"
            )
        if not colouring.is_total:
            v = next(v for v in graph.vertices() if colouring[v] not in LABELS)
            raise InvalidInputError(f"vertex {v + 1} has no label in 1..3")

    @staticmethod
    def is_proper_partial(graph: Graph, colouring: Colouring) -> bool:
        """No edge joins two vertices with the same non-zero label."""
        for u, v in graph.edges():
            if colouring[u] and colouring[u] == colouring[v]:
                return False
        return True

    def verify_colouring(self, graph: Graph, colouring: Colouring, mode: ColouringMode) -> bool:
        """Check a total labelling against a colouring mode.

        Raises:
            InvalidInputError: On a partial labelling
        """
        self._require_total(graph, colouring)
        if not self.is_proper_partial(graph, colouring):
            return False
        if mode == ColouringMode.PROPER:
            return True
        classes = colouring.classes()
        check = (
            self.graph_service.is_forest if mode == ColouringMode.ACYCLIC
            else self.graph_service.is_star_forest
        )
        for a, b in combinations(LABELS, 2):
            pair, _ = self.graph_service.induced_subgraph(graph, classes[a] + classes[b])
            if not check(pair):
                return False
        return True

    def verify_transversal_set(
        self,
        graph: Graph,
        vertices: Iterable[int],
        kind: TransversalKind,
    ) -> bool:
        """Whether I is independent, G - I is a forest (ifvs) or bipartite
        (ioct), and |I| <= k when k is set."""
        members = set(vertices)
        if any(not 0 <= v < graph.n for v in members):
            raise InvalidInputError("transversal vertex out of range")
        if kind.k is not None and len(members) > kind.k:
            return False
        for v in members:
            if any(w in members for w in graph.neighbours(v)):
                return False
        rest, _ = self.graph_service.induced_subgraph(
            graph, (v for v in graph.vertices() if v not in members)
        )
        if kind.kind == "ifvs":
            return self.graph_service.is_forest(rest)
        bipartition, _ = self.graph_service.bipartition(rest)
        return bipartition is not None

    def verify_transversal_class(
        self,
        graph: Graph,
        colouring: Colouring,
        class_label: int,
        kind: TransversalKind,
    ) -> bool:
        """Whether a colour class of a proper colouring is a valid transversal.

        Raises:
            InvalidInputError: On a partial or improper colouring
        """
        self._require_total(graph, colouring)
        if not self.is_proper_partial(graph, colouring):
            raise InvalidInputError("colouring is not proper")
        if class_label not in LABELS:
            raise InvalidInputError(f"class label {class_label} not in 1..3")
        return self.verify_transversal_set(graph, colouring.colour_class(class_label), kind)

    # ----------------------------------------------------- 2-list colouring

    def two_list_colouring(self, graph: Graph, lists: ListAssignment) -> Optional[Colouring]:
        """Colour the graph from lists of size at most two.

        Singletons are propagated first; the remaining vertices become
        boolean variables of a 2-SAT instance solved through the strongly
        connected components of its implication graph.

        Returns:
            A colouring respecting the lists, or None

        Raises:
            InvalidInputError: On a list longer than 2 or a label outside 1..3
        """
        if len(lists) != graph.n:
            raise InvalidInputError(f"{len(lists)} lists for {graph.n} vertices")
        options: List[List[int]] = []
        for v, lst in enumerate(lists):
            entries = sorted(set(lst))
            if len(entries) > 2:
                raise InvalidInputError(f"list of vertex {v + 1} has more than two labels")
            if any(label not in LABELS for label in entries):
                raise InvalidInputError(f"list of vertex {v + 1} holds a label outside 1..3")
            if not entries:
                return None
            options.append(entries)

        labels = [0] * graph.n
        queue = deque(v for v in graph.vertices() if len(options[v]) == 1)
        while queue:
            v = queue.popleft()
            if labels[v]:
                continue
            label = options[v][0]
            labels[v] = label
            for w in graph.neighbours(v):
                if labels[w]:
                    if labels[w] == label:
                        return None
                    continue
                if label in options[w]:
                    options[w].remove(label)
                    if not options[w]:
                        return None
                    if len(options[w]) == 1:
                        queue.append(w)

        free = [v for v in graph.vertices() if not labels[v]]
        if free:
            slot = {v: i for i, v in enumerate(free)}
            succ: List[List[int]] = [[] for _ in range(2 * len(free))]
            for v in free:
                for w in graph.neighbours(v):
                    if w < v or w not in slot:
                        continue
                    for a_pos, a in enumerate(options[v]):
                        for b_pos, b in enumerate(options[w]):
                            if a != b:
                                continue
                            lit_v = 2 * slot[v] + a_pos
                            lit_w = 2 * slot[w] + b_pos
                            # not both: v picks a and w picks b
                            succ[lit_v].append(lit_w ^ 1)
                            succ[lit_w].append(lit_v ^ 1)
            comp = _strongly_connected_components(succ)
            for v in free:
                i = slot[v]
                if comp[2 * i] == comp[2 * i + 1]:
                    return None
                labels[v] = options[v][0] if comp[2 * i] < comp[2 * i + 1] else options[v][1]
        return Colouring.of(labels)

    # ---------------------------------------------------------- enumeration

    def iter_3_colourings(
        self,
        graph: Graph,
        domain: Optional[Iterable[int]] = None,
        fixed: Optional[Dict[int, int]] = None,
    ) -> Iterator[Colouring]:
        """Yield proper 3-colourings in lexicographic order.

        Args:
            graph: Host graph
            domain: Vertices to colour (default all); others stay 0 and are
                ignored, so this enumerates colourings of G[domain]
            fixed: Labels prescribed for some domain vertices
        """
        order = sorted(set(domain)) if domain is not None else list(graph.vertices())
        in_domain: Set[int] = set(order)
        fixed = fixed or {}
        labels = [0] * graph.n
        earlier = [
            [w for w in graph.neighbours(v) if w in in_domain and w < v] for v in order
        ]
        if not order:
            yield Colouring.of(labels)
            return
        choices = [(fixed[v],) if v in fixed else LABELS for v in order]
        cursor = [0] * len(order)
        i = 0
        while i >= 0:
            if i == len(order):
                yield Colouring.of(labels)
                i -= 1
                continue
            v = order[i]
            placed = False
            while cursor[i] < len(choices[i]):
                label = choices[i][cursor[i]]
                cursor[i] += 1
                if all(labels[w] != label for w in earlier[i]):
                    labels[v] = label
                    placed = True
                    break
            if placed:
                i += 1
                if i < len(order):
                    cursor[i] = 0
            else:
                labels[v] = 0
                i -= 1

    def enumerate_3_colourings(
        self,
        graph: Graph,
        cap: Optional[int] = None,
        domain: Optional[Iterable[int]] = None,
    ) -> List[Colouring]:
        """All proper 3-colourings, or an overflow past ``cap``.

        Raises:
            CapExceededError: If more than ``cap`` colourings exist
        """
        cap = cap if cap is not None else self.enumeration_cap
        out: List[Colouring] = []
        for colouring in self.iter_3_colourings(graph, domain):
            if len(out) >= cap:
                raise CapExceededError("too many 3-colourings to enumerate", cap)
            out.append(colouring)
        logger.debug(f"Enumerated {len(out)} 3-colourings")
        return out

    def count_3_colourings(self, graph: Graph, cap: int) -> int:
        """Count proper 3-colourings, stopping with an overflow past ``cap``."""
        count = 0
        for _ in self.iter_3_colourings(graph):
            count += 1
            if count > cap:
                raise CapExceededError("too many 3-colourings to count", cap)
        return count

    # ------------------------------------------------------------- helpers

    @staticmethod
    def colour_classes(colouring: Colouring) -> Dict[int, Tuple[int, ...]]:
        return colouring.classes()

    @staticmethod
    def normalise_labels(colouring: Colouring, first: int = 0) -> Colouring:
        """Relabel so ``first`` gets 1 and the other labels follow first use."""
        mapping: Dict[int, int] = {}
        if colouring[first]:
            mapping[colouring[first]] = 1
        for label in colouring.labels:
            if label and label not in mapping:
                mapping[label] = len(mapping) + 1
        return Colouring.of(mapping.get(label, 0) for label in colouring.labels)

    # ------------------------------------------------------------------ I/O

    def parse_colouring(self, text: str) -> Colouring:
        """Parse ``c <n>`` followed by ``n`` lines ``v <vertex> <label>``.

        Raises:
            GraphFormatError: On malformed text
            InvalidInputError: On labels outside 1..3 or repeated vertices
        """
        rows = self._rows(text, "c", 3)
        n, entries = rows
        labels = [0] * n
        for vertex, label in entries:
            if not 1 <= vertex <= n:
                raise InvalidInputError(f"vertex {vertex} out of range 1..{n}")
            if labels[vertex - 1]:
                raise InvalidInputError(f"vertex {vertex} labelled twice")
            if label not in LABELS:
                raise InvalidInputError(f"label {label} of vertex {vertex} not in 1..3")
            labels[vertex - 1] = label
        if len(entries) != n:
            raise GraphFormatError(f"header announces {n} labels, found {len(entries)}")
        return Colouring.of(labels)

    @staticmethod
    def serialize_colouring(colouring: Colouring) -> str:
        lines = [f"c {len(colouring)}"]
        lines.extend(f"v {v + 1} {label}" for v, label in enumerate(colouring.labels))
        return "\n".join(lines) + "\n"

    def parse_vertex_set(self, text: str) -> Tuple[int, ...]:
        """Parse ``s <size>`` followed by ``size`` lines ``v <vertex>`` (returned 0-based)."""
        size, entries = self._rows(text, "s", 2)
        if len(entries) != size:
            raise GraphFormatError(f"header announces {size} vertices, found {len(entries)}")
        vertices = [vertex - 1 for (vertex,) in entries]
        if any(v < 0 for v in vertices):
            raise InvalidInputError("vertex ids are 1-based")
        if len(set(vertices)) != len(vertices):
            raise InvalidInputError("vertex listed twice")
        return tuple(sorted(vertices))

    @staticmethod
    def serialize_vertex_set(vertices: Iterable[int]) -> str:
        members = sorted(vertices)
        lines = [f"s {len(members)}"]
        lines.extend(f"v {v + 1}" for v in members)
        return "\n".join(lines) + "\n"

    @staticmethod
    def _rows(text: str, tag: str, width: int) -> Tuple[int, List[Tuple[int, ...]]]:
        header: Optional[int] = None
        entries: List[Tuple[int, ...]] = []
        for number, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            tokens = line.split()
            try:
                if header is None:
                    if len(tokens) != 2 or tokens[0] != tag:
                        raise GraphFormatError(f"line {number}: expected '{tag} <count>'")
                    header = int(tokens[1])
                    continue
                if len(tokens) != width or tokens[0] != "v":
                    raise GraphFormatError(f"line {number}: malformed entry '{line}'")
                entries.append(tuple(int(t) for t in tokens[1:]))
            except ValueError:
                raise GraphFormatError(f"line {number}: expected integers in '{line}'")
        if header is None:
            raise GraphFormatError(f"missing '{tag} <count>' header")
        return header, entries
