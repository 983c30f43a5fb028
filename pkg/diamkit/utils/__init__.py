"""Utility helpers."""
from .colored_logger import get_category_logger, setup_colored_logging
from .text_io import read_input, write_output

__all__ = ["get_category_logger", "read_input", "setup_colored_logging", "write_output"]
