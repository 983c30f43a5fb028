"""
Colored logging configuration for terminal output.
Records are colored by the algorithm category that emitted them.
"""

import logging
import sys
from typing import Optional, TextIO


# ANSI color codes
class Colors:
    """ANSI color codes for terminal output."""
    RESET = '\033[0m'
    BOLD = '\033[1m'

    RED = '\033[31m'
    GREEN = '\033[32m'
    YELLOW = '\033[33m'
    BLUE = '\033[34m'
    MAGENTA = '\033[35m'
    CYAN = '\033[36m'
    WHITE = '\033[37m'

    BRIGHT_BLACK = '\033[90m'
    BRIGHT_RED = '\033[91m'
    BRIGHT_BLUE = '\033[94m'
    BRIGHT_MAGENTA = '\033[95m'


# Category-specific colors
CATEGORY_COLORS = {
    'graph': Colors.BRIGHT_BLUE,
    'pattern': Colors.CYAN,
    'colouring': Colors.GREEN,
    'solver': Colors.YELLOW,
    'oracle': Colors.MAGENTA,
    'reduction': Colors.BLUE,
    'config': Colors.BRIGHT_MAGENTA,
    'cli': Colors.WHITE,
    'default': Colors.WHITE,
}


class ColoredFormatter(logging.Formatter):
    """Formatter that colors records by category, else by level."""

    LEVEL_COLORS = {
        'DEBUG': Colors.BRIGHT_BLACK,
        'INFO': Colors.WHITE,
        'WARNING': Colors.YELLOW,
        'ERROR': Colors.RED,
        'CRITICAL': Colors.BRIGHT_RED + Colors.BOLD,
    }

    def __init__(
        self,
        fmt: Optional[str] = None,
        datefmt: Optional[str] = None,
        use_color: bool = True,
    ):
        """
        Initialize colored formatter.

        Args:
            fmt: Log format string
            datefmt: Date format string
            use_color: Emit ANSI codes (off when the stream is not a terminal)
        """
        if fmt is None:
            fmt = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
        if datefmt is None:
            datefmt = '%Y-%m-%d %H:%M:%S'
        super().__init__(fmt, datefmt)
        self.use_color = use_color

    def format(self, record: logging.LogRecord) -> str:
        """
        Format log record with colors.

        Args:
            record: Log record

        Returns:
            Formatted and colored log message
        """
        formatted = super().format(record)
        if not self.use_color:
            return formatted

        category = getattr(record, 'category', None)
        if category:
            color = CATEGORY_COLORS.get(category, CATEGORY_COLORS['default'])
        else:
            color = self.LEVEL_COLORS.get(record.levelname, Colors.WHITE)
        return f"{color}{formatted}{Colors.RESET}"


class CategoryLogger:
    """Logger wrapper that tags every record with its category."""

    def __init__(self, logger: logging.Logger, category: str):
        """
        Initialize category logger.

        Args:
            logger: Base logger
            category: Algorithm category (graph, pattern, solver, ...)
        """
        self.logger = logger
        self.category = category

    def _log(self, level: int, msg: str, *args, **kwargs):
        """Log with category extra."""
        extra = kwargs.get('extra', {})
        extra['category'] = self.category
        kwargs['extra'] = extra
        self.logger.log(level, msg, *args, **kwargs)

    def debug(self, msg: str, *args, **kwargs):
        self._log(logging.DEBUG, msg, *args, **kwargs)

    def info(self, msg: str, *args, **kwargs):
        self._log(logging.INFO, msg, *args, **kwargs)

    def warning(self, msg: str, *args, **kwargs):
        self._log(logging.WARNING, msg, *args, **kwargs)

    def error(self, msg: str, *args, **kwargs):
        self._log(logging.ERROR, msg, *args, **kwargs)


def setup_colored_logging(
    level: int = logging.WARNING,
    stream: Optional[TextIO] = None,
    fmt: Optional[str] = None,
) -> None:
    """
    Setup colored logging for the application.

    Args:
        level: Logging level
        stream: Target stream (default: stderr, so stdout carries only data)
        fmt: Optional log format string
    """
    stream = stream if stream is not None else sys.stderr
    handler = logging.StreamHandler(stream)
    handler.setLevel(level)
    is_tty = hasattr(stream, 'isatty') and stream.isatty()
    handler.setFormatter(ColoredFormatter(fmt=fmt, use_color=is_tty))

    root_logger = logging.getLogger()
    root_logger.setLevel(level)

    # Remove existing handlers to avoid duplicates
    root_logger.handlers.clear()
    root_logger.addHandler(handler)


def get_category_logger(name: str, category: str) -> CategoryLogger:
    """
    Get a category logger with colored output.

    Args:
        name: Logger name (usually __name__)
        category: graph, pattern, colouring, solver, oracle, reduction, config or cli

    Returns:
        CategoryLogger instance
    """
    return CategoryLogger(logging.getLogger(name), category)
