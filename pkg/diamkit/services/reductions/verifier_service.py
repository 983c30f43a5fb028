"""Claim-by-claim checks of constructed gadgets."""
from typing import Callable, List, Optional

from diamkit.exceptions import CapExceededError, DiamkitError, DisconnectedGraphError
from diamkit.models import (
    CapsConfig,
    ClaimResult,
    ColouringMode,
    GadgetKind,
    GadgetOutput,
    GadgetReport,
    ProblemKind,
    TransversalKind,
)
from diamkit.services.colouring_service import ColouringService
from diamkit.services.graph_service import GraphService
from diamkit.services.oracle_service import OracleService
from diamkit.services.pattern_service import PatternService
from diamkit.services.reductions.extremal_service import a_formula
from diamkit.services.reductions.gadget_service import GadgetService
from diamkit.utils import get_category_logger

logger = get_category_logger(__name__, "reduction")

_NAE_MODES = {
    GadgetKind.IOCT: ColouringMode.PROPER,
    GadgetKind.ACYCLIC: ColouringMode.ACYCLIC,
    GadgetKind.STAR: ColouringMode.STAR,
}

_IS_KINDS = (GadgetKind.IS_TRIANGLE_FREE, GadgetKind.IS_K14_FREE, GadgetKind.DOMINATING)


def _passed(name: str, detail: str = "") -> ClaimResult:
    return ClaimResult(name=name, status="pass", detail=detail)


def _failed(name: str, detail: str) -> ClaimResult:
    return ClaimResult(name=name, status="fail", detail=detail)


def _skipped(name: str, detail: str) -> ClaimResult:
    return ClaimResult(name=name, status="skipped", detail=detail)


class VerifierService:
    """Service checking the structural and equivalence claims of a gadget.

    Oracle-backed claims are attempted only below the configured caps and
    report ``skipped`` above them, never ``pass``.
    """

    def __init__(
        self,
        graph_service: GraphService,
        pattern_service: PatternService,
        colouring_service: ColouringService,
        oracle_service: OracleService,
        gadget_service: GadgetService,
        caps: Optional[CapsConfig] = None,
    ):
        self.graph_service = graph_service
        self.pattern_service = pattern_service
        self.colouring_service = colouring_service
        self.oracle_service = oracle_service
        self.gadget_service = gadget_service
        self.caps = caps or CapsConfig()

    def verify_gadget(self, gadget: GadgetOutput) -> GadgetReport:
        """Run every claim that applies to the gadget's kind."""
        checks: List[Callable[[GadgetOutput], Optional[ClaimResult]]] = [
            self._check_roles,
            self._check_diameter,
            self._check_forbidden,
            self._check_alpha,
            self._check_equivalence,
            self._check_certificate,
            self._check_colourings,
        ]
        claims = []
        for check in checks:
            claim = check(gadget)
            if claim is not None:
                logger.debug(f"{gadget.kind.value}: {claim.name} {claim.status} {claim.detail}")
                claims.append(claim)
        report = GadgetReport(kind=gadget.kind.value, vertex_count=gadget.graph.n, claims=claims)
        logger.info(
            f"Checked {gadget.kind.value} on {gadget.graph.n} vertices: "
            f"{'pass' if report.passed else 'fail'}"
        )
        return report

    # ---------------------------------------------------------- structure

    def _check_roles(self, gadget: GadgetOutput) -> ClaimResult:
        if len(gadget.roles) != gadget.graph.n:
            return _failed("roles", f"{len(gadget.roles)} roles for {gadget.graph.n} vertices")
        missing = [v + 1 for v, role in enumerate(gadget.roles) if not role]
        if missing:
            return _failed("roles", f"vertex {missing[0]} has no role")
        return _passed("roles")

    def _check_diameter(self, gadget: GadgetOutput) -> Optional[ClaimResult]:
        bound = gadget.diameter_bound
        if bound is None:
            return None
        try:
            diameter = self.graph_service.diameter(gadget.graph)
        except DisconnectedGraphError:
            return _failed("diameter", "graph is disconnected")
        relation = "==" if gadget.diameter_exact else "<="
        ok = diameter == bound if gadget.diameter_exact else diameter <= bound
        detail = f"diameter {diameter}, claimed {relation} {bound}"
        return _passed("diameter", detail) if ok else _failed("diameter", detail)

    def _check_forbidden(self, gadget: GadgetOutput) -> Optional[ClaimResult]:
        if not gadget.forbidden:
            return None
        ps = self.pattern_service
        pattern = ps.build_pattern(ps.parse_pattern_name(gadget.forbidden))
        graph = gadget.graph
        top = pattern.max_degree()
        anchors = [v for v in graph.vertices() if graph.degree(v) >= top]
        try:
            embedding = ps.find_induced(graph, pattern, anchors)
        except CapExceededError as e:
            return _skipped("forbidden", e.reason)
        if embedding is not None:
            host = " ".join(str(v + 1) for v in embedding)
            return _failed("forbidden", f"induced {gadget.forbidden} at {host}")
        return _passed("forbidden", f"no induced {gadget.forbidden}")

    # ------------------------------------------------------------ oracles

    def _check_alpha(self, gadget: GadgetOutput) -> Optional[ClaimResult]:
        if gadget.kind not in _IS_KINDS or gadget.source is None:
            return None
        oracle = self.oracle_service
        try:
            alpha_out = oracle.max_independent_set(gadget.graph).optimum
            alpha_in = oracle.max_independent_set(gadget.source).optimum
        except CapExceededError as e:
            return _skipped("alpha", e.reason)
        if gadget.alpha_offset is None:
            expected = max(alpha_in, 1)
        else:
            expected = alpha_in + gadget.alpha_offset
        detail = f"alpha {alpha_out}, source alpha {alpha_in}, expected {expected}"
        return _passed("alpha", detail) if alpha_out == expected else _failed("alpha", detail)

    def _check_equivalence(self, gadget: GadgetOutput) -> Optional[ClaimResult]:
        if gadget.kind not in _NAE_MODES or gadget.formula is None:
            return None
        # the pruned acyclic/star search is bounded by the enumeration cap instead
        limit = self.caps.verification_vertices
        if gadget.kind == GadgetKind.IOCT and gadget.graph.n > limit:
            return _skipped("equivalence", f"{gadget.graph.n} vertices above {limit}")
        oracle = self.oracle_service
        try:
            satisfiable = oracle.nae_brute(gadget.formula) is not None
            if gadget.kind == GadgetKind.IOCT:
                target = oracle.brute_force(gadget.graph, ProblemKind.IOCT, gadget.k).answer
            else:
                found = oracle.find_mode_colouring(gadget.graph, _NAE_MODES[gadget.kind], {0: 1})
                target = found is not None
        except CapExceededError as e:
            return _skipped("equivalence", e.reason)
        detail = f"NAE satisfiable {satisfiable}, target property {target}"
        if satisfiable == target:
            return _passed("equivalence", detail)
        return _failed("equivalence", detail)

    def _check_certificate(self, gadget: GadgetOutput) -> Optional[ClaimResult]:
        if gadget.kind not in _NAE_MODES or gadget.formula is None:
            return None
        try:
            assignment = self.oracle_service.nae_brute(gadget.formula)
        except CapExceededError as e:
            return _skipped("certificate", e.reason)
        if assignment is None:
            return _skipped("certificate", "formula is not NAE-satisfiable")

        cs = self.colouring_service
        try:
            colouring = self.gadget_service.nae_colouring_for_gadget(gadget, assignment)
            valid = cs.verify_colouring(gadget.graph, colouring, _NAE_MODES[gadget.kind])
            if valid and gadget.kind == GadgetKind.IOCT:
                valid = cs.verify_transversal_class(
                    gadget.graph, colouring, 1, TransversalKind(kind="ioct", k=gadget.k)
                )
            if not valid:
                return _failed("certificate", "emitted colouring violates the target property")
            back = self.gadget_service.assignment_from_colouring(gadget, colouring)
        except DiamkitError as e:
            return _failed("certificate", e.reason)
        if not gadget.formula.is_satisfied_by(back):
            return _failed("certificate", "extracted assignment is not NAE-satisfying")
        return _passed("certificate", "colouring emitted, verified and read back")

    def _check_colourings(self, gadget: GadgetOutput) -> Optional[ClaimResult]:
        if gadget.kind != GadgetKind.EXTREMAL or gadget.parameter is None:
            return None
        limit = self.caps.verification_vertices
        if gadget.graph.n > limit:
            return _skipped("colourings", f"{gadget.graph.n} vertices above {limit}")
        try:
            count = self.oracle_service.count_3_colourings(gadget.graph)
        except CapExceededError as e:
            return _skipped("colourings", e.reason)
        expected = a_formula(gadget.parameter)
        detail = f"{count} colourings, expected {expected}"
        return _passed("colourings", detail) if count == expected else _failed("colourings", detail)
