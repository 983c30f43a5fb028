"""Main entry point for the command line."""
import logging
import sys
from typing import Dict, List, Optional, Sequence

from pydantic import ValidationError

from diamkit import create_app
from diamkit.exceptions import CapExceededError, DiamkitError, InvalidInputError
from diamkit.router import CommandParser, add_global_arguments
from diamkit.services.config_service import parse_cap_assignments
from diamkit.utils import write_output


EXIT_ERROR = 2
EXIT_OVERFLOW = 3


def _global_options(argv: Sequence[str]):
    """Read --config, --log-level and --cap before the services exist."""
    pre = CommandParser(add_help=False)
    add_global_arguments(pre)
    known, _ = pre.parse_known_args(list(argv))
    caps: Dict[str, int] = {}
    for assignment in known.cap:
        caps.update(parse_cap_assignments(assignment))
    level = None
    if known.log_level:
        level = logging.getLevelName(known.log_level.upper())
        if not isinstance(level, int):
            raise InvalidInputError(f"unknown log level '{known.log_level}'")
    return known.config, caps, level


def main(argv: Optional[List[str]] = None) -> int:
    """Run one command; returns the exit status.

    0 means yes (or success), 1 no, 2 an error and 3 an exceeded cap.
    """
    argv = sys.argv[1:] if argv is None else argv
    try:
        config_path, caps, level = _global_options(argv)
        app = create_app(config_path, cap_overrides=caps, log_level=level)
        result = app.run(argv)
        if result.output:
            write_output(result.output, result.destination)
        return result.status
    except CapExceededError as e:
        sys.stderr.write(e.one_line() + "\n")
        return EXIT_OVERFLOW
    except DiamkitError as e:
        sys.stderr.write(e.one_line() + "\n")
        return EXIT_ERROR
    except ValidationError as e:
        reason = e.errors()[0]["msg"]
        sys.stderr.write(InvalidInputError(reason).one_line() + "\n")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
