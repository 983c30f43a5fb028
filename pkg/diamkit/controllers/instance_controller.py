"""Instance controller for the generate command."""
from typing import Dict, Optional

from diamkit.exceptions import InvalidInputError
from diamkit.models import CommandConfig, CommandResult
from diamkit.services import ExtremalService, GadgetService, GraphService, InstanceService
from diamkit.utils import get_category_logger

logger = get_category_logger(__name__, "cli")


def _int_option(options: Dict[str, str], key: str, default: Optional[int] = None) -> int:
    value = options.get(key)
    if value is None:
        if default is None:
            raise InvalidInputError(f"missing --{key}")
        return default
    try:
        return int(value)
    except ValueError:
        raise InvalidInputError(f"--{key} needs an integer, got '{value}'")


class InstanceController:
    """Controller for graph generation."""

    def __init__(
        self,
        graph_service: GraphService,
        instance_service: InstanceService,
        extremal_service: ExtremalService,
        gadget_service: GadgetService,
    ):
        """Initialize instance controller.

        Args:
            graph_service: Graph serialization
            instance_service: Random and atlas instances, named patterns
            extremal_service: The G_d family
            gadget_service: Gadget serialization for G_d
        """
        self.graph_service = graph_service
        self.instance_service = instance_service
        self.extremal_service = extremal_service
        self.gadget_service = gadget_service

    def handle_generate(self, config: CommandConfig) -> CommandResult:
        """Generate one graph (or the atlas list) of the requested kind."""
        options = config.options
        kind = options.get("kind")
        gs = self.graph_service
        logger.info(f"generate {kind}")

        if kind == "gd":
            if config.d is None:
                raise InvalidInputError("generate gd needs --d")
            gadget = self.extremal_service.gd_gadget(config.d)
            return CommandResult(output=self.gadget_service.serialize_gadget(gadget))

        if kind == "pattern":
            name = options.get("name")
            if not name:
                raise InvalidInputError("generate pattern needs --name")
            graph = self.instance_service.pattern(name)
            return CommandResult(output=gs.serialize_graph(graph, [f"pattern {name}"]))

        if kind == "complex":
            a = _int_option(options, "a")
            b = _int_option(options, "b")
            removed = _int_option(options, "removed", 0)
            graph = gs.complex(a, b, removed)
            return CommandResult(
                output=gs.serialize_graph(graph, [f"complex {a} {b} minus {removed}"])
            )

        if kind in ("random", "tripartite"):
            n = _int_option(options, "n")
            default = "0.75" if kind == "random" else "0.8"
            try:
                density = float(options.get("density", default))
            except ValueError:
                raise InvalidInputError(f"--density needs a number, got '{options['density']}'")
            max_diameter = config.d
            seed = config.seed if config.seed is not None else 0
            if kind == "random":
                graph = self.instance_service.random_chair_free(n, seed, density, max_diameter)
            else:
                graph = self.instance_service.random_tripartite_chair_free(
                    n, seed, density, max_diameter
                )
            return CommandResult(output=gs.serialize_graph(graph, [f"{kind} seed {seed}"]))

        if kind == "atlas":
            graphs = self.instance_service.atlas(_int_option(options, "n"))
            blocks = [
                gs.serialize_graph(graph, [f"atlas {index}"])
                for index, graph in enumerate(graphs, start=1)
            ]
            return CommandResult(output="\n".join(blocks))

        raise InvalidInputError(f"unknown generator '{kind}'")
