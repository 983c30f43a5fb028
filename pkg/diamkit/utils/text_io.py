"""Reading inputs and writing outputs for the command line."""
import sys
from pathlib import Path
from typing import Optional

from diamkit.exceptions import InvalidInputError


def read_input(path: Optional[str]) -> str:
    """Read a file, or standard input when ``path`` is None or ``-``.

    Raises:
        InvalidInputError: If the file cannot be read
    """
    if path is None or path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise InvalidInputError(f"cannot read {path}: {e.strerror}")


def write_output(text: str, path: Optional[str] = None) -> None:
    """Write to a file, or standard output when ``path`` is None or ``-``."""
    if path is None or path == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as e:
        raise InvalidInputError(f"cannot write {path}: {e.strerror}")
