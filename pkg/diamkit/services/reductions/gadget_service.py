"""Gadgets from NAE-3-SAT to IOCT, acyclic 3-colouring and star 3-colouring.

Vertex numbering is fixed so that every output is reproducible:

* IOCT and acyclic: z = 0, v_{x_i} = 2i - 1, v_{~x_i} = 2i, then the clause
  triangles c_{i_j} = 1 + 2n + 3(i - 1) + (j - 1).
* star: z, z', z'' = 0, 1, 2; per variable a block of nine vertices
  v, p1..p4, q1..q4 starting at 3 + 9(i - 1); then the clause triangles.

Substitution vertices follow, one block per substituted edge, in the order
the edges were listed.
"""
from itertools import permutations
from typing import Dict, List, Optional, Sequence, Set, Tuple

from diamkit.exceptions import GraphFormatError, InvalidInputError
from diamkit.models import (
    Colouring,
    CoveringCollection,
    Edge,
    GadgetKind,
    GadgetOutput,
    Graph,
    NaeFormula,
    SubstitutionPattern,
    literal_value,
)
from diamkit.services.graph_service import GraphService
from diamkit.services.reductions.nae_service import NaeService
from diamkit.utils import get_category_logger

logger = get_category_logger(__name__, "reduction")

TRUE_COLOUR = 2
FALSE_COLOUR = 3


class GadgetService:
    """Service building the NAE gadgets and mapping certificates across them."""

    def __init__(self, graph_service: GraphService, nae_service: NaeService):
        self.graph_service = graph_service
        self.nae_service = nae_service

    # --------------------------------------------------------- substitution

    def substitute_edges(
        self, graph: Graph, edges: Sequence[Edge], pattern: SubstitutionPattern
    ) -> Graph:
        """Replace each listed edge uv by internal vertices adjacent to u and v.

        New vertices are numbered from ``graph.n`` on, edge by edge.

        Raises:
            InvalidInputError: On a listed non-edge, a repeated edge, or a
                non-matching edge set for K_{2,3}
        """
        listed: Set[Edge] = set()
        touched: Set[int] = set()
        for u, v in edges:
            key = (min(u, v), max(u, v))
            if not (0 <= u < graph.n and 0 <= v < graph.n) or not graph.has_edge(u, v):
                raise InvalidInputError(f"({u + 1}, {v + 1}) is not an edge")
            if key in listed:
                raise InvalidInputError(f"edge ({u + 1}, {v + 1}) listed twice")
            if pattern == SubstitutionPattern.K23 and (u in touched or v in touched):
                raise InvalidInputError("K2,3 substitution needs a matching")
            listed.add(key)
            touched.update((u, v))

        kept = [e for e in graph.edges() if e not in listed]
        width = pattern.internal_vertices
        nxt = graph.n
        for u, v in edges:
            for _ in range(width):
                kept.extend([(u, nxt), (v, nxt)])
                nxt += 1
        return Graph.from_edges(nxt, kept)

    # ----------------------------------------------------------------- IOCT

    def _base_ioct(self, formula: NaeFormula) -> Tuple[Graph, List[str]]:
        n = formula.num_variables
        roles = ["z"]
        edges: List[Edge] = []
        for i in range(1, n + 1):
            pos, neg = 2 * i - 1, 2 * i
            roles.extend([f"v:x{i}", f"v:~x{i}"])
            edges.extend([(pos, neg), (0, pos), (0, neg)])
        for i, clause in enumerate(formula.clauses):
            base = 1 + 2 * n + 3 * i
            for j, lit in enumerate(clause):
                roles.append(f"c:{i + 1}:{j + 1}")
                edges.append((self.literal_vertex(formula, lit), base + j))
            edges.extend([(base, base + 1), (base, base + 2), (base + 1, base + 2)])
        return Graph.from_edges(len(roles), edges), roles

    @staticmethod
    def literal_vertex(formula: NaeFormula, lit: int) -> int:
        """v_x or v_{~x} in the IOCT and acyclic gadgets."""
        return 2 * abs(lit) - 1 if lit > 0 else 2 * abs(lit)

    @staticmethod
    def clause_vertex(formula: NaeFormula, i: int, j: int, star: bool = False) -> int:
        """c_{i_j} for 0-based clause ``i`` and slot ``j``."""
        base = 3 + 9 * formula.num_variables if star else 1 + 2 * formula.num_variables
        return base + 3 * i + j

    def build_ioct_gadget(self, formula: NaeFormula) -> GadgetOutput:
        """Graph with an independent odd cycle transversal of size m + 1 iff
        the formula is NAE-satisfiable; diameter at most 4, K_{1,4}^3-free.

        Raises:
            InvalidInputError: If a literal fills more than two clause slots
        """
        self.nae_service.require_variant_a(formula)
        graph, roles = self._base_ioct(formula)
        logger.info(f"IOCT gadget: {graph.n} vertices, k={formula.num_clauses + 1}")
        return GadgetOutput(
            kind=GadgetKind.IOCT,
            graph=graph,
            roles=tuple(roles),
            k=formula.num_clauses + 1,
            diameter_bound=4,
            forbidden="K1,4^3",
            formula=formula,
        )

    # -------------------------------------------------------------- acyclic

    def acyclic_substitutions(
        self, formula: NaeFormula, collection: CoveringCollection
    ) -> List[Edge]:
        """Edges of the IOCT gadget that become K_{2,3} instances.

        A covered slot substitutes its literal edge; a clause with exactly two
        uncovered slots substitutes the triangle edge between them.

        Raises:
            InvalidInputError: If the collection does not cover the formula or
                a clause keeps three uncovered slots
        """
        if not collection.is_covering(formula):
            raise InvalidInputError("collection is not a covering collection of the formula")
        chosen: List[Edge] = []
        for i, clause in enumerate(formula.clauses):
            uncovered = []
            for j, lit in enumerate(clause):
                first_slot = clause.index(lit) == j
                c = self.clause_vertex(formula, i, j)
                if first_slot and (lit, i) in collection:
                    chosen.append((self.literal_vertex(formula, lit), c))
                else:
                    uncovered.append(c)
            if len(uncovered) == 3:
                raise InvalidInputError(f"clause {i + 1} has no covered slot")
            if len(uncovered) == 2:
                chosen.append((uncovered[0], uncovered[1]))
        return chosen

    def build_acyclic_gadget(
        self, formula: NaeFormula, collection: CoveringCollection
    ) -> GadgetOutput:
        """IOCT gadget with K_{2,3} on a matching; acyclically 3-colourable iff
        NAE-satisfiable, diameter at most 6, K_{1,6}^5-free."""
        self.nae_service.require_variant_a(formula)
        base, roles = self._base_ioct(formula)
        chosen = self.acyclic_substitutions(formula, collection)
        graph = self.substitute_edges(base, chosen, SubstitutionPattern.K23)
        for u, v in chosen:
            roles.extend(f"w:{roles[u]}|{roles[v]}:{t}" for t in range(1, 4))
        logger.info(f"Acyclic gadget: {graph.n} vertices, {len(chosen)} substituted edges")
        return GadgetOutput(
            kind=GadgetKind.ACYCLIC,
            graph=graph,
            roles=tuple(roles),
            diameter_bound=6,
            forbidden="K1,6^5",
            formula=formula,
            collection=collection,
            substituted=tuple(chosen),
        )

    # ----------------------------------------------------------------- star

    @staticmethod
    def star_variable_vertex(i: int) -> int:
        """v_{x_i} for a 1-based variable in the star gadget."""
        return 3 + 9 * (i - 1)

    def build_star_gadget(self, formula: NaeFormula) -> GadgetOutput:
        """Star 3-colourable iff NAE-satisfiable; diameter at most 14,
        K_{1,6}^{14}-free.

        Each clause slot attaches to the lowest unused q^1..q^3 of its
        variable; q^4 is built but never attached.

        Raises:
            InvalidInputError: Unless all literals are positive and each
                variable occurs in at most four clauses, or if a
                variable fills more than three clause slots
        """
        self.nae_service.require_variant_b(formula)
        n = formula.num_variables
        roles = ["z", "z'", "z''"]
        edges: List[Edge] = [(0, 1), (0, 2), (1, 2)]
        substituted: List[Edge] = []
        for i in range(1, n + 1):
            v = self.star_variable_vertex(i)
            roles.append(f"v:x{i}")
            roles.extend(f"p:x{i}:{j}" for j in range(1, 5))
            roles.extend(f"q:x{i}:{j}" for j in range(1, 5))
            edges.append((0, v))
            for j in range(1, 5):
                p, q = v + j, v + 4 + j
                edges.extend([(v, p), (p, q)])
                substituted.append((p, q))

        for i in range(formula.num_clauses):
            roles.extend(f"c:{i + 1}:{j + 1}" for j in range(3))
            c = [self.clause_vertex(formula, i, j, star=True) for j in range(3)]
            for a, b in ((0, 1), (0, 2), (1, 2)):
                edges.append((c[a], c[b]))
                substituted.append((c[a], c[b]))

        used: Dict[int, int] = {}
        for i, clause in enumerate(formula.clauses):
            for j, lit in enumerate(clause):
                slot = used.get(lit, 0) + 1
                if slot > 3:
                    raise InvalidInputError(f"variable {lit} fills more than three clause slots")
                used[lit] = slot
                q = self.star_variable_vertex(lit) + 4 + slot
                c = self.clause_vertex(formula, i, j, star=True)
                edges.append((q, c))
                substituted.append((q, c))

        base = Graph.from_edges(len(roles), edges)
        graph = self.substitute_edges(base, substituted, SubstitutionPattern.K22)
        for u, v in substituted:
            roles.extend(f"w:{roles[u]}|{roles[v]}:{t}" for t in range(1, 3))
        logger.info(f"Star gadget: {graph.n} vertices, {len(substituted)} substituted edges")
        return GadgetOutput(
            kind=GadgetKind.STAR,
            graph=graph,
            roles=tuple(roles),
            diameter_bound=14,
            forbidden="K1,6^14",
            formula=formula,
            substituted=tuple(substituted),
        )

    # --------------------------------------------------------- certificates

    def nae_colouring_for_gadget(
        self, gadget: GadgetOutput, assignment: Sequence[bool]
    ) -> Colouring:
        """3-colouring of a gadget from a NAE-satisfying assignment.

        z gets 1, true literals 2 and false literals 3; clause vertices take
        the first permutation avoiding their literal's colour, and every
        substitution vertex the third colour of its endpoints.

        Raises:
            InvalidInputError: If the assignment does not NAE-satisfy the formula
        """
        formula = gadget.formula
        if formula is None:
            raise InvalidInputError(f"{gadget.kind.value} carries no formula")
        if len(assignment) != formula.num_variables or not formula.is_satisfied_by(assignment):
            raise InvalidInputError("assignment does not NAE-satisfy the formula")

        def colour_of(lit: int) -> int:
            return TRUE_COLOUR if literal_value(lit, assignment) else FALSE_COLOUR

        star = gadget.kind == GadgetKind.STAR
        width = 2 if star else 3
        base = self.clause_vertex(formula, formula.num_clauses, 0, star=star)
        if gadget.graph.n != base + width * len(gadget.substituted):
            raise InvalidInputError(
                f"gadget has {gadget.graph.n} vertices, its formula accounts for "
                f"{base + width * len(gadget.substituted)}"
            )
        labels: Dict[int, int] = {}
        if star:
            labels.update({0: 1, 1: 2, 2: 3})
            for i in range(1, formula.num_variables + 1):
                v = self.star_variable_vertex(i)
                colour = colour_of(i)
                labels[v] = colour
                for j in range(1, 5):
                    labels[v + j] = 5 - colour
                    labels[v + 4 + j] = colour
        else:
            labels[0] = 1
            for i in range(1, formula.num_variables + 1):
                labels[self.literal_vertex(formula, i)] = colour_of(i)
                labels[self.literal_vertex(formula, -i)] = colour_of(-i)

        for i, clause in enumerate(formula.clauses):
            wanted = [colour_of(lit) for lit in clause]
            choice = next(
                perm for perm in permutations((1, 2, 3))
                if all(perm[j] != wanted[j] for j in range(3))
            )
            for j in range(3):
                labels[self.clause_vertex(formula, i, j, star=star)] = choice[j]

        nxt = gadget.graph.n - width * len(gadget.substituted)
        for u, v in gadget.substituted:
            third = 6 - labels[u] - labels[v]
            for _ in range(width):
                labels[nxt] = third
                nxt += 1
        return Colouring.of(labels[v] for v in range(gadget.graph.n))

    def assignment_from_colouring(
        self, gadget: GadgetOutput, colouring: Colouring
    ) -> Tuple[bool, ...]:
        """Read a truth assignment off a colouring of a gadget.

        The colour of z is swapped with 1; x_i is true iff v_{x_i} (q^1 of
        x_i in the star gadget) then has colour 2.
        """
        formula = gadget.formula
        if formula is None:
            raise InvalidInputError(f"{gadget.kind.value} carries no formula")
        swap = {colouring[0]: 1, 1: colouring[0]}
        out = []
        for i in range(1, formula.num_variables + 1):
            if gadget.kind == GadgetKind.STAR:
                vertex = self.star_variable_vertex(i) + 5
            else:
                vertex = self.literal_vertex(formula, i)
            out.append(swap.get(colouring[vertex], colouring[vertex]) == TRUE_COLOUR)
        return tuple(out)

    # ------------------------------------------------------------------ I/O

    def serialize_gadget(self, gadget: GadgetOutput) -> str:
        """Graph text with the gadget's metadata as comment lines."""
        comments = [f"gadget {gadget.kind.value}"]
        if gadget.k is not None:
            comments.append(f"k {gadget.k}")
        if gadget.diameter_bound is not None:
            comments.append(f"diameter {gadget.diameter_bound}")
            if gadget.diameter_exact:
                comments.append("diameter-exact")
        if gadget.forbidden:
            comments.append(f"forbidden {gadget.forbidden}")
        if gadget.alpha_offset is not None:
            comments.append(f"alpha-offset {gadget.alpha_offset}")
        if gadget.parameter is not None:
            comments.append(f"parameter {gadget.parameter}")
        comments.extend(f"role {v + 1} {role}" for v, role in enumerate(gadget.roles))
        if gadget.formula is not None:
            comments.append(f"nae-vars {gadget.formula.num_variables}")
            comments.extend(f"nae-clause {a} {b} {c}" for a, b, c in gadget.formula.clauses)
        if gadget.collection is not None:
            comments.extend(f"pair {lit} {i + 1}" for lit, i in gadget.collection)
        if gadget.source is not None:
            comments.append(f"source-p {gadget.source.n} {gadget.source.m}")
            comments.extend(f"source-e {u + 1} {v + 1}" for u, v in gadget.source.edges())
        comments.extend(f"substituted {u + 1} {v + 1}" for u, v in gadget.substituted)
        return self.graph_service.serialize_graph(gadget.graph, comments)

    def parse_gadget(self, text: str) -> GadgetOutput:
        """Inverse of :meth:`serialize_gadget`.

        Raises:
            GraphFormatError: On missing or malformed metadata
        """
        graph = self.graph_service.parse_graph(text)
        meta: Dict[str, List[List[str]]] = {}
        for raw in text.splitlines():
            line = raw.strip()
            if not line.startswith("#"):
                continue
            tokens = line[1:].split()
            if tokens:
                meta.setdefault(tokens[0], []).append(tokens[1:])

        def single(key: str) -> Optional[List[str]]:
            rows = meta.get(key)
            return rows[0] if rows else None

        def number(key: str) -> Optional[int]:
            row = single(key)
            if row is None:
                return None
            try:
                return int(row[0])
            except (IndexError, ValueError):
                raise GraphFormatError(f"malformed '# {key}' line")

        kind_row = single("gadget")
        if not kind_row:
            raise GraphFormatError("missing '# gadget <kind>' line")
        try:
            kind = GadgetKind(kind_row[0])
        except ValueError:
            raise GraphFormatError(f"unknown gadget kind '{kind_row[0]}'")

        roles = [""] * graph.n
        for row in meta.get("role", []):
            try:
                roles[int(row[0]) - 1] = row[1]
            except (IndexError, ValueError):
                raise GraphFormatError("malformed '# role' line")

        formula = None
        if "nae-vars" in meta:
            try:
                clauses = tuple(tuple(int(t) for t in row) for row in meta.get("nae-clause", []))
            except ValueError:
                raise GraphFormatError("malformed '# nae-clause' line")
            formula = NaeFormula(num_variables=number("nae-vars"), clauses=clauses)

        collection = None
        if "pair" in meta:
            try:
                collection = CoveringCollection.of(
                    (int(lit), int(i) - 1) for lit, i in meta["pair"]
                )
            except ValueError:
                raise GraphFormatError("malformed '# pair' line")

        source = None
        if "source-p" in meta:
            header = single("source-p")
            lines = [f"p {header[0]} {header[1]}"]
            lines.extend(f"e {u} {v}" for u, v in meta.get("source-e", []))
            source = self.graph_service.parse_graph("\n".join(lines))

        try:
            substituted = tuple((int(u) - 1, int(v) - 1) for u, v in meta.get("substituted", []))
        except ValueError:
            raise GraphFormatError("malformed '# substituted' line")

        return GadgetOutput(
            kind=kind,
            graph=graph,
            roles=tuple(roles),
            k=number("k"),
            diameter_bound=number("diameter"),
            diameter_exact="diameter-exact" in meta,
            forbidden=single("forbidden")[0] if single("forbidden") else None,
            formula=formula,
            collection=collection,
            source=source,
            alpha_offset=number("alpha-offset"),
            substituted=substituted,
            parameter=number("parameter"),
        )
