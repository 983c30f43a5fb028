"""Solve controller for the decision, verification and inspection commands."""
from typing import List, Optional

from diamkit.exceptions import InvalidInputError
from diamkit.models import (
    Colouring,
    ColouringMode,
    CommandConfig,
    CommandResult,
    Graph,
    ProblemKind,
    TransversalKind,
)
from diamkit.services import (
    ColouringService,
    GraphService,
    OracleService,
    PatternService,
    SolverService,
)
from diamkit.utils import get_category_logger, read_input

logger = get_category_logger(__name__, "cli")

_MODES = {
    ProblemKind.THREECOL: ColouringMode.PROPER,
    ProblemKind.ACYCLIC3COL: ColouringMode.ACYCLIC,
    ProblemKind.STAR3COL: ColouringMode.STAR,
}


def _first_input(config: CommandConfig) -> Optional[str]:
    return config.inputs[0] if config.inputs else None


def _status(answer: bool) -> int:
    return 0 if answer else 1


class SolveController:
    """Controller for solve, oracle, verify, count and classify."""

    def __init__(
        self,
        graph_service: GraphService,
        pattern_service: PatternService,
        colouring_service: ColouringService,
        solver_service: SolverService,
        oracle_service: OracleService,
    ):
        """Initialize solve controller.

        Args:
            graph_service: Graph parsing and primitives
            pattern_service: Classifiers for ``classify``
            colouring_service: Certificate formats and verifiers
            solver_service: Linear-time solver
            oracle_service: Exhaustive reference answers
        """
        self.graph_service = graph_service
        self.pattern_service = pattern_service
        self.colouring_service = colouring_service
        self.solver_service = solver_service
        self.oracle_service = oracle_service

    def _load_graph(self, path: Optional[str]) -> Graph:
        return self.graph_service.parse_graph(read_input(path))

    def _render(
        self,
        answer: bool,
        problem: ProblemKind,
        optimum: Optional[int],
        colouring: Optional[List[int]],
        transversal: Optional[List[int]],
        route: Optional[str] = None,
    ) -> str:
        lines = [f"# answer {'yes' if answer else 'no'}", f"# problem {problem.value}"]
        if route is not None:
            lines.append(f"# route {route}")
        if optimum is not None:
            lines.append(f"# optimum {optimum}")
        text = "\n".join(lines) + "\n"
        if not answer:
            return text
        if problem.is_colouring and colouring is not None:
            return text + self.colouring_service.serialize_colouring(Colouring.of(colouring))
        if transversal is not None:
            return text + self.colouring_service.serialize_vertex_set(transversal)
        return text

    def handle_solve(self, config: CommandConfig) -> CommandResult:
        """Run the chair-free solver on one graph."""
        graph = self._load_graph(_first_input(config))
        result = self.solver_service.solve(
            graph,
            config.d,
            config.problem,
            config.k,
            verify_chair_free=config.verify_chair_free,
            verify_diameter=config.verify_diameter,
        )
        logger.info(f"solve {config.problem.value}: {'yes' if result.answer else 'no'} via {result.route}")
        output = self._render(
            result.answer,
            config.problem,
            result.optimum,
            result.colouring,
            result.transversal,
            result.route,
        )
        return CommandResult(status=_status(result.answer), output=output)

    def handle_oracle(self, config: CommandConfig) -> CommandResult:
        """Answer by exhaustive search."""
        graph = self._load_graph(_first_input(config))
        result = self.oracle_service.brute_force(graph, config.problem, config.k)
        output = self._render(
            result.answer, config.problem, result.optimum, result.colouring, result.witness_set
        )
        return CommandResult(status=_status(result.answer), output=output)

    def handle_verify(self, config: CommandConfig) -> CommandResult:
        """Check a certificate against a graph.

        A certificate starting with ``c`` is a colouring checked in the mode
        of the problem (proper for transversal problems); one starting with
        ``s`` is a transversal checked as ifvs (ifvs, nearbip) or ioct.
        """
        if len(config.inputs) != 2:
            raise InvalidInputError("verify needs a graph and a certificate")
        graph = self._load_graph(config.inputs[0])
        certificate = read_input(config.inputs[1])
        problem = config.problem or ProblemKind.THREECOL
        cs = self.colouring_service

        if self._header_tag(certificate) == "c":
            colouring = cs.parse_colouring(certificate)
            if len(colouring) != graph.n:
                raise InvalidInputError(f"colouring has {len(colouring)} labels for {graph.n} vertices")
            ok = cs.verify_colouring(graph, colouring, _MODES.get(problem, ColouringMode.PROPER))
            what = f"{_MODES.get(problem, ColouringMode.PROPER).value} colouring"
        else:
            if problem.is_colouring:
                raise InvalidInputError(f"a vertex set cannot certify {problem.value}")
            vertices = cs.parse_vertex_set(certificate)
            kind = "ioct" if problem == ProblemKind.IOCT else "ifvs"
            bound = None if problem == ProblemKind.NEARBIP else config.k
            ok = cs.verify_transversal_set(graph, vertices, TransversalKind(kind=kind, k=bound))
            what = f"{kind} transversal"
        return CommandResult(status=_status(ok), output=f"{'valid' if ok else 'invalid'} {what}\n")

    @staticmethod
    def _header_tag(text: str) -> str:
        for raw in text.splitlines():
            line = raw.strip()
            if line and not line.startswith("#"):
                return line.split()[0]
        raise InvalidInputError("empty certificate")

    def handle_count(self, config: CommandConfig) -> CommandResult:
        """Count proper 3-colourings."""
        graph = self._load_graph(_first_input(config))
        return CommandResult(output=f"{self.oracle_service.count_3_colourings(graph)}\n")

    def handle_classify(self, config: CommandConfig) -> CommandResult:
        """Report structural properties; the status follows chair-freeness
        (or freeness of ``--pattern``)."""
        graph = self._load_graph(_first_input(config))
        gs = self.graph_service
        ps = self.pattern_service
        lines = [f"vertices {graph.n}", f"edges {graph.m}"]
        connected = gs.is_connected(graph)
        lines.append(f"connected {'yes' if connected else 'no'}")
        if connected and graph.n:
            lines.append(f"diameter {gs.diameter(graph)}")

        chair_free, witness = ps.is_chair_free(graph)
        lines.append(f"chair-free {'yes' if chair_free else 'no'}")
        if witness is not None:
            lines.append("chair " + " ".join(str(v + 1) for v in witness))
        lines.append(f"triangle-free {'yes' if not ps.contains_induced_cycle(graph, 3) else 'no'}")

        bipartition, _ = gs.bipartition(graph)
        lines.append(f"bipartite {'yes' if bipartition is not None else 'no'}")
        if bipartition is not None and connected and chair_free and graph.n:
            shape = ps.classify_bipartite_chair_free(graph, bipartition)
            lines.append(f"shape {shape.tag}")

        status = _status(chair_free)
        name = config.options.get("pattern")
        if name:
            free = ps.is_h_free(graph, ps.build_pattern(ps.parse_pattern_name(name)))
            lines.append(f"{name}-free {'yes' if free else 'no'}")
            status = _status(free)
        return CommandResult(status=status, output="\n".join(lines) + "\n")
