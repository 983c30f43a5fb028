"""Command router with all subcommands."""
import argparse
from typing import Dict, List

from diamkit.exceptions import InvalidInputError
from diamkit.models import CapsConfig, CommandConfig, ProblemKind

PROBLEMS = [kind.value for kind in ProblemKind]
GENERATORS = ["gd", "pattern", "complex", "random", "tripartite", "atlas"]
REDUCTIONS = [
    "ioct-gadget",
    "acyclic-gadget",
    "star-gadget",
    "variant-a",
    "is-trianglefree",
    "is-k14free",
    "dominating",
    "is-dichotomy",
]
OPTION_KEYS = (
    "kind",
    "name",
    "a",
    "b",
    "removed",
    "n",
    "density",
    "pattern",
    "collection_out",
    "to_variant_a",
)


class CommandParser(argparse.ArgumentParser):
    """Argument parser that raises instead of exiting on bad usage."""

    def error(self, message: str):
        raise InvalidInputError(message)


def add_global_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", default=None, help="Path to a YAML config file")
    parser.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING or ERROR")
    parser.add_argument(
        "--cap", action="append", default=[], metavar="KEY=VALUE",
        help="Override one cap (repeatable)",
    )


def create_router(solve_controller, instance_controller, reduction_controller) -> CommandParser:
    """Create the command parser with every subcommand bound to its handler.

    Args:
        solve_controller: Solve, oracle, verify, count and classify
        instance_controller: Graph generation
        reduction_controller: Gadget construction and verification

    Returns:
        Configured parser; parsed namespaces carry ``handler``
    """
    parser = CommandParser(
        prog="diamkit",
        description="Colouring and transversal problems on chair-free graphs of bounded diameter",
    )
    add_global_arguments(parser)
    parser.add_argument("-o", "--output", default=None, help="Write the result here instead of stdout")
    commands = parser.add_subparsers(dest="subcommand", required=True)

    solve = commands.add_parser("solve", help="Linear-time solver")
    solve.add_argument("--problem", required=True, choices=PROBLEMS)
    solve.add_argument("--d", type=int, required=True, help="Diameter bound")
    solve.add_argument("--k", type=int, default=None, help="Transversal size bound")
    solve.add_argument("--verify-chair-free", action="store_true")
    solve.add_argument("--verify-diameter", action="store_true")
    solve.add_argument("input", nargs="?", default=None)
    solve.set_defaults(handler=solve_controller.handle_solve)

    oracle = commands.add_parser("oracle", help="Exhaustive reference answer")
    oracle.add_argument("--problem", required=True, choices=PROBLEMS)
    oracle.add_argument("--k", type=int, default=None)
    oracle.add_argument("input", nargs="?", default=None)
    oracle.set_defaults(handler=solve_controller.handle_oracle)

    verify = commands.add_parser("verify", help="Check a colouring or vertex-set certificate")
    verify.add_argument("--problem", default=ProblemKind.THREECOL.value, choices=PROBLEMS)
    verify.add_argument("--k", type=int, default=None)
    verify.add_argument("graph")
    verify.add_argument("certificate")
    verify.set_defaults(handler=solve_controller.handle_verify)

    count = commands.add_parser("count", help="Count proper 3-colourings")
    count.add_argument("input", nargs="?", default=None)
    count.set_defaults(handler=solve_controller.handle_count)

    classify = commands.add_parser("classify", help="Structural report")
    classify.add_argument("--pattern", default=None, help="Also test freeness of this pattern")
    classify.add_argument("input", nargs="?", default=None)
    classify.set_defaults(handler=solve_controller.handle_classify)

    generate = commands.add_parser("generate", help="Generate an instance")
    generate.add_argument("kind", choices=GENERATORS)
    generate.add_argument("--d", type=int, default=None, help="Depth for gd, diameter bound for random graphs")
    generate.add_argument("--name", default=None, help="Pattern name, e.g. chair, P5, K1,4^3")
    generate.add_argument("--a", default=None)
    generate.add_argument("--b", default=None)
    generate.add_argument("--removed", default=None)
    generate.add_argument("--n", default=None)
    generate.add_argument("--density", default=None)
    generate.add_argument("--seed", type=int, default=None)
    generate.set_defaults(handler=instance_controller.handle_generate)

    reduce = commands.add_parser("reduce", help="Build a hardness gadget")
    reduce.add_argument("kind", choices=REDUCTIONS)
    reduce.add_argument("inputs", nargs="*")
    reduce.add_argument("--pattern", default=None, help="Forbidden graph H for is-dichotomy")
    reduce.add_argument("--collection-out", default=None, help="Where variant-a writes its collection")
    reduce.add_argument("--to-variant-a", action="store_true", help="Transform before ioct-gadget")
    reduce.set_defaults(handler=reduction_controller.handle_reduce)

    check = commands.add_parser("check-gadget", help="Verify the claims recorded in a gadget file")
    check.add_argument("input", nargs="?", default=None)
    check.set_defaults(handler=reduction_controller.handle_check_gadget)

    return parser


def to_command_config(args: argparse.Namespace, caps: CapsConfig) -> CommandConfig:
    """Validate a parsed namespace into a :class:`CommandConfig`."""
    inputs: List[str] = []
    if getattr(args, "graph", None) is not None:
        inputs.extend([args.graph, args.certificate])
    if getattr(args, "input", None) is not None:
        inputs.append(args.input)
    inputs.extend(getattr(args, "inputs", None) or [])

    options: Dict[str, str] = {}
    for key in OPTION_KEYS:
        value = getattr(args, key, None)
        if value is None or value is False:
            continue
        options[key.replace("_", "-")] = "1" if value is True else str(value)

    problem = getattr(args, "problem", None)
    return CommandConfig(
        subcommand=args.subcommand,
        problem=ProblemKind(problem) if problem else None,
        k=getattr(args, "k", None),
        d=getattr(args, "d", None),
        verify_chair_free=getattr(args, "verify_chair_free", False),
        verify_diameter=getattr(args, "verify_diameter", False),
        inputs=inputs,
        output=args.output,
        caps=caps,
        seed=getattr(args, "seed", None),
        options=options,
    )
