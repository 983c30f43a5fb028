"""Main application package."""
import sys
from typing import Mapping, Optional, Sequence

from dotenv import load_dotenv

from diamkit.controllers import InstanceController, ReductionController, SolveController
from diamkit.models import CommandResult
from diamkit.router import CommandParser, create_router, to_command_config
from diamkit.services import (
    BipartiteService,
    ColouringService,
    ConfigService,
    ExtensionService,
    ExtremalService,
    FamilyService,
    GadgetService,
    GraphService,
    IndependentSetService,
    InstanceService,
    NaeService,
    OracleService,
    PatternService,
    SolverService,
    TriangleService,
    VerifierService,
)
from diamkit.utils import get_category_logger, setup_colored_logging

# Load environment variables
load_dotenv()

logger = get_category_logger(__name__, "cli")


class Application:
    """Wired services behind the command parser."""

    def __init__(self, parser: CommandParser, config_service: ConfigService):
        self.parser = parser
        self.config_service = config_service

    def run(self, argv: Sequence[str]) -> CommandResult:
        """Parse ``argv`` and dispatch to the bound controller method."""
        args = self.parser.parse_args(list(argv))
        config = to_command_config(args, self.config_service.get_caps())
        logger.debug(f"Dispatching {config.subcommand} with inputs {config.inputs}")
        result = args.handler(config)
        return result.model_copy(update={"destination": config.output})


def create_app(
    config_path: Optional[str] = None,
    cap_overrides: Optional[Mapping[str, int]] = None,
    log_level: Optional[int] = None,
) -> Application:
    """Create and configure the application.

    Args:
        config_path: Optional path to config file
        cap_overrides: Caps given on the command line
        log_level: Overrides the configured logging level

    Returns:
        Configured application
    """
    config_service = ConfigService(config_path, cap_overrides=cap_overrides)
    setup_colored_logging(
        level=log_level if log_level is not None else config_service.get_log_level(),
        stream=sys.stderr,
        fmt=config_service.get_log_format(),
    )
    caps = config_service.get_caps()

    # Initialize services
    logger.info("Initializing services...")

    graph_service = GraphService()
    pattern_service = PatternService(graph_service, pattern_cap=caps.pattern_vertices)
    colouring_service = ColouringService(graph_service, enumeration_cap=caps.enumeration)
    oracle_service = OracleService(graph_service, colouring_service, caps)
    instance_service = InstanceService(graph_service, pattern_service)

    triangle_service = TriangleService(graph_service)
    family_service = FamilyService(triangle_service, colouring_service)
    extension_service = ExtensionService(graph_service)
    bipartite_service = BipartiteService(pattern_service, colouring_service)
    solver_service = SolverService(
        graph_service=graph_service,
        pattern_service=pattern_service,
        colouring_service=colouring_service,
        family_service=family_service,
        extension_service=extension_service,
        bipartite_service=bipartite_service,
        enumeration_cap=caps.enumeration,
    )

    nae_service = NaeService()
    gadget_service = GadgetService(graph_service, nae_service)
    independent_set_service = IndependentSetService(graph_service, pattern_service)
    extremal_service = ExtremalService(max_depth=caps.gd_max_depth)
    verifier_service = VerifierService(
        graph_service=graph_service,
        pattern_service=pattern_service,
        colouring_service=colouring_service,
        oracle_service=oracle_service,
        gadget_service=gadget_service,
        caps=caps,
    )

    # Initialize controllers
    logger.info("Initializing controllers...")

    solve_controller = SolveController(
        graph_service=graph_service,
        pattern_service=pattern_service,
        colouring_service=colouring_service,
        solver_service=solver_service,
        oracle_service=oracle_service,
    )
    instance_controller = InstanceController(
        graph_service=graph_service,
        instance_service=instance_service,
        extremal_service=extremal_service,
        gadget_service=gadget_service,
    )
    reduction_controller = ReductionController(
        graph_service=graph_service,
        instance_service=instance_service,
        nae_service=nae_service,
        gadget_service=gadget_service,
        independent_set_service=independent_set_service,
        verifier_service=verifier_service,
    )

    parser = create_router(solve_controller, instance_controller, reduction_controller)

    logger.info("Application initialized successfully")
    return Application(parser, config_service)


__all__ = ["Application", "create_app"]
