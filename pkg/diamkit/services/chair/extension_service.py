"""Extending colourings of G - P(x) across the private neighbourhood of x.

Each family member is first extended deterministically: vertices of P(x)
with one available colour fix the 2-colouring of their component. The
remaining components S_c can be 2-coloured on c(y) and c(z) in any
orientation; the problem-specific routines below keep only a bounded
number of orientations that are enough to decide each problem.
"""
from collections import deque
from itertools import product
from typing import Dict, List, Optional, Sequence, Set, Tuple

from diamkit.exceptions import PreconditionViolation
from diamkit.models import LABELS, Colouring, ColouringFamily, ExtensionTriple, Graph, ProblemKind
from diamkit.services.graph_service import GraphService
from diamkit.utils import get_category_logger

logger = get_category_logger(__name__, "solver")

Component = Tuple[Tuple[int, ...], Tuple[int, ...]]


class ExtensionService:
    """Service building extension triples and their candidate completions."""

    def __init__(self, graph_service: GraphService):
        self.graph_service = graph_service

    # -------------------------------------------------------------- triples

    def build_triple(
        self, graph: Graph, family: ColouringFamily, member: Colouring
    ) -> Optional[ExtensionTriple]:
        """Extend a member of a minus_private family to G - S_c.

        Returns:
            The triple, or None when the member does not extend (a component
            of G[P(x)] is odd or its forced colours clash)
        """
        triangle = family.triangle
        x = family.apex
        y, z = (t for t in triangle.vertices if t != x)
        colours = (member[x], member[y], member[z])
        private = set(family.private)

        available: Dict[int, Set[int]] = {}
        for u in family.private:
            used = {member[w] for w in graph.neighbours(u) if w not in private and member[w]}
            available[u] = set(LABELS) - used
            if not available[u]:
                return None

        updates: Dict[int, int] = {}
        free: List[int] = []
        components: List[Component] = []
        seen: Set[int] = set()
        for root in family.private:
            if root in seen:
                continue
            side = self._two_colour(graph, root, private, seen)
            if side is None:
                return None
            members = sorted(side)
            forced = [u for u in members if len(available[u]) == 1]
            if not forced:
                side_a = tuple(u for u in members if side[u] == 0)
                side_b = tuple(u for u in members if side[u] == 1)
                components.append((side_a, side_b))
                free.extend(members)
                continue
            anchor = forced[0]
            anchor_colour = next(iter(available[anchor]))
            other = ({colours[1], colours[2]} - {anchor_colour}).pop()
            for u in members:
                label = anchor_colour if side[u] == side[anchor] else other
                if label not in available[u]:
                    return None
                updates[u] = label

        components.sort(key=lambda comp: comp[0][0])
        return ExtensionTriple(
            member=member,
            extended=member.with_labels(updates),
            free=tuple(sorted(free)),
            components=tuple(components),
            colours=colours,
        )

    def _two_colour(
        self, graph: Graph, root: int, allowed: Set[int], seen: Set[int]
    ) -> Optional[Dict[int, int]]:
        """Parity map of the component of ``root`` in G[allowed], None if odd."""
        side = {root: 0}
        seen.add(root)
        queue = deque([root])
        odd = False
        while queue:
            u = queue.popleft()
            for w in graph.neighbours(u):
                if w not in allowed:
                    continue
                if w not in side:
                    side[w] = 1 - side[u]
                    seen.add(w)
                    queue.append(w)
                elif side[w] == side[u]:
                    odd = True
        return None if odd else side

    # ----------------------------------------------------------- candidates

    def candidates(
        self,
        graph: Graph,
        family: ColouringFamily,
        triple: ExtensionTriple,
        problem: ProblemKind,
    ) -> List[Colouring]:
        """Completions of a triple that suffice to decide ``problem``."""
        if not triple.components:
            return [triple.orient(())]
        if problem == ProblemKind.THREECOL:
            return [self._default(triple)]
        if problem in (ProblemKind.ACYCLIC3COL, ProblemKind.STAR3COL):
            return self._acyclic_or_star(graph, family, triple, problem)
        if problem == ProblemKind.IOCT:
            return self._odd_cycle_transversal(triple)
        return self._feedback_vertex_set(graph, family, triple)

    @staticmethod
    def _default(triple: ExtensionTriple) -> Colouring:
        return triple.orient((0,) * len(triple.components))

    @staticmethod
    def _all_orientations(triple: ExtensionTriple) -> List[Colouring]:
        return [triple.orient(flips) for flips in product((0, 1), repeat=len(triple.components))]

    def _common_neighbours(self, graph: Graph, family: ColouringFamily) -> Tuple[int, ...]:
        """N(y) and N(z) intersected, without x."""
        x = family.apex
        y, z = (t for t in family.triangle.vertices if t != x)
        return tuple(w for w in graph.neighbours(y) if w != x and graph.has_edge(w, z))

    def _second_layer_contacts(
        self, graph: Graph, family: ColouringFamily, vertices: Sequence[int]
    ) -> List[int]:
        """Vertices of ``vertices`` with a neighbour in N_2."""
        n2 = set(family.context.n2)
        return [s for s in vertices if any(w in n2 for w in graph.neighbours(s))]

    def _acyclic_or_star(
        self,
        graph: Graph,
        family: ColouringFamily,
        triple: ExtensionTriple,
        problem: ProblemKind,
    ) -> List[Colouring]:
        gs = self.graph_service
        free = triple.free
        free_graph, _ = gs.induced_subgraph(graph, free)
        if not gs.is_forest(free_graph):
            return []
        free_set = set(free)
        common = set(self._common_neighbours(graph, family))
        if any(w in common for s in free for w in graph.neighbours(s)):
            return []
        if len(free) <= 2:
            return self._all_orientations(triple)

        contacts = self._second_layer_contacts(graph, family, free)
        if contacts:
            s = contacts[0]
            component = next(a + b for a, b in triple.components if s in a or s in b)
            if len(free_set) - len(component) >= 2:
                return []
            return self._all_orientations(triple)

        # x separates S_c from the rest of the graph
        if problem == ProblemKind.ACYCLIC3COL:
            return [self._default(triple)]
        if not gs.is_star_forest(free_graph):
            return []
        # independent S_c: one colour on all of it; otherwise x already sees
        # both colours and the orientation is irrelevant
        count = len(triple.components)
        return [triple.orient((0,) * count), triple.orient((1,) * count)]

    @staticmethod
    def _odd_cycle_transversal(triple: ExtensionTriple) -> List[Colouring]:
        """Smaller sides on c(y), then smaller sides on c(z)."""
        towards_y = tuple(0 if len(a) <= len(b) else 1 for a, b in triple.components)
        towards_z = tuple(1 - flip for flip in towards_y)
        return [triple.orient(towards_y), triple.orient(towards_z)]

    def _feedback_vertex_set(
        self, graph: Graph, family: ColouringFamily, triple: ExtensionTriple
    ) -> List[Colouring]:
        default = self._default(triple)
        out = [default]
        components = triple.components
        if len(components) == 1:
            out.append(triple.orient((1,)))
            return out

        _, b, c = triple.colours
        common = self._common_neighbours(graph, family)
        if common:
            w = common[0]
            hit = {s for s in triple.free if graph.has_edge(s, w)}
            for target in (b, c):
                out.extend(self._force_into_class(triple, hit, target))
            return out

        if not self._second_layer_contacts(graph, family, triple.free):
            for target in (b, c):
                out.append(self._smaller_sides_to(triple, target))
            return out

        # every vertex of S_c sees the same N_2 vertex: all but one join the class
        free_graph, _ = self.graph_service.induced_subgraph(graph, triple.free)
        if free_graph.m == 0:
            s = triple.free[0]
            for rest, single in product((b, c), repeat=2):
                labels = {u: rest for u in triple.free}
                labels[s] = single
                out.append(triple.extended.with_labels(labels))
            return out

        non_trivial = [(a, bb) for a, bb in components if bb]
        if len(non_trivial) != 1:
            return out
        side_a, side_b = non_trivial[0]
        for single in (side_a, side_b):
            if len(single) != 1:
                continue
            for target in (b, c):
                other = b if target == c else c
                labels = {u: target for u in triple.free}
                labels[single[0]] = other
                out.append(triple.extended.with_labels(labels))
        return out

    @staticmethod
    def _smaller_sides_to(triple: ExtensionTriple, target: int) -> Colouring:
        _, b, _ = triple.colours
        towards_b = tuple(0 if len(a) <= len(bb) else 1 for a, bb in triple.components)
        if target == b:
            return triple.orient(towards_b)
        return triple.orient(tuple(1 - flip for flip in towards_b))

    def _force_into_class(
        self, triple: ExtensionTriple, hit: Set[int], target: int
    ) -> List[Colouring]:
        """Orientations putting every vertex of ``hit`` on colour ``target``.

        Raises:
            PreconditionViolation: If more than two components avoid ``hit``
        """
        _, b, _ = triple.colours
        fixed: List[Optional[int]] = []
        for side_a, side_b in triple.components:
            wants_a = any(s in hit for s in side_a)
            wants_b = any(s in hit for s in side_b)
            if wants_a and wants_b:
                return []
            if wants_a:
                fixed.append(0 if target == b else 1)
            elif wants_b:
                fixed.append(1 if target == b else 0)
            else:
                fixed.append(None)
        loose = [i for i, flip in enumerate(fixed) if flip is None]
        if len(loose) > 2:
            raise PreconditionViolation(
                f"{len(loose)} components of the private neighbourhood miss a common neighbour of y and z"
            )
        out = []
        for choice in product((0, 1), repeat=len(loose)):
            flips = list(fixed)
            for i, flip in zip(loose, choice):
                flips[i] = flip
            out.append(triple.orient(tuple(flips)))
        return out
