"""Reduction controller for the reduce and check-gadget commands."""
from typing import Optional

from diamkit.exceptions import InvalidInputError
from diamkit.models import CommandConfig, CommandResult, GadgetReport, NaeFormula
from diamkit.services import (
    GadgetService,
    GraphService,
    IndependentSetService,
    InstanceService,
    NaeService,
    VerifierService,
)
from diamkit.utils import get_category_logger, read_input, write_output

logger = get_category_logger(__name__, "cli")

_GRAPH_KINDS = ("is-trianglefree", "is-k14free", "dominating", "is-dichotomy")


class ReductionController:
    """Controller for gadget construction and verification."""

    def __init__(
        self,
        graph_service: GraphService,
        instance_service: InstanceService,
        nae_service: NaeService,
        gadget_service: GadgetService,
        independent_set_service: IndependentSetService,
        verifier_service: VerifierService,
    ):
        self.graph_service = graph_service
        self.instance_service = instance_service
        self.nae_service = nae_service
        self.gadget_service = gadget_service
        self.independent_set_service = independent_set_service
        self.verifier_service = verifier_service

    def _input(self, config: CommandConfig, index: int) -> Optional[str]:
        return config.inputs[index] if len(config.inputs) > index else None

    def _formula(self, config: CommandConfig) -> NaeFormula:
        return self.nae_service.parse_nae(read_input(self._input(config, 0)))

    def handle_reduce(self, config: CommandConfig) -> CommandResult:
        """Build the requested gadget and emit it with its metadata."""
        kind = config.options.get("kind")
        logger.info(f"reduce {kind}")
        gadgets = self.gadget_service

        if kind in _GRAPH_KINDS:
            graph = self.graph_service.parse_graph(read_input(self._input(config, 0)))
            iss = self.independent_set_service
            if kind == "is-trianglefree":
                gadget = iss.build_is_diam2_trianglefree(graph)
            elif kind == "is-k14free":
                gadget = iss.build_is_diam2_k14free(graph)
            elif kind == "dominating":
                gadget = iss.dominating_gadget(graph)
            else:
                name = config.options.get("pattern")
                if not name:
                    raise InvalidInputError("reduce is-dichotomy needs --pattern")
                gadget = iss.independent_set_reduction(self.instance_service.pattern(name), graph)
            return CommandResult(output=gadgets.serialize_gadget(gadget))

        if kind == "variant-a":
            formula, collection = self.nae_service.to_variant_a(self._formula(config))
            target = config.options.get("collection-out")
            if target:
                write_output(self.nae_service.serialize_collection(collection), target)
            return CommandResult(output=self.nae_service.serialize_nae(formula))

        if kind == "ioct-gadget":
            formula = self._formula(config)
            if config.options.get("to-variant-a"):
                formula, _ = self.nae_service.to_variant_a(formula)
            return CommandResult(output=gadgets.serialize_gadget(gadgets.build_ioct_gadget(formula)))

        if kind == "acyclic-gadget":
            formula = self._formula(config)
            collection_path = self._input(config, 1)
            if collection_path is None:
                formula, collection = self.nae_service.to_variant_a(formula)
            else:
                collection = self.nae_service.parse_collection(read_input(collection_path))
            gadget = gadgets.build_acyclic_gadget(formula, collection)
            return CommandResult(output=gadgets.serialize_gadget(gadget))

        if kind == "star-gadget":
            gadget = gadgets.build_star_gadget(self._formula(config))
            return CommandResult(output=gadgets.serialize_gadget(gadget))

        raise InvalidInputError(f"unknown reduction '{kind}'")

    def handle_check_gadget(self, config: CommandConfig) -> CommandResult:
        """Verify every recorded claim of a gadget file."""
        gadget = self.gadget_service.parse_gadget(read_input(self._input(config, 0)))
        report = self.verifier_service.verify_gadget(gadget)
        return CommandResult(status=0 if report.passed else 1, output=self.render_report(report))

    @staticmethod
    def render_report(report: GadgetReport) -> str:
        lines = [f"gadget {report.kind} vertices {report.vertex_count}"]
        for claim in report.claims:
            line = f"claim {claim.name} {claim.status}"
            if claim.detail:
                line += f" ({claim.detail})"
            lines.append(line)
        lines.append(f"result {'pass' if report.passed else 'fail'}")
        return "\n".join(lines) + "\n"
