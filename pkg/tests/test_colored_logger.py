import io
import logging

from diamkit.utils import get_category_logger, setup_colored_logging
from diamkit.utils.colored_logger import CATEGORY_COLORS, ColoredFormatter


class TestCategories:

    def test_services_tag_records(self, graph_service, colouring_service, caplog):
        with caplog.at_level(logging.DEBUG):
            graph = graph_service.parse_graph("p 3 3\ne 1 2\ne 2 3\ne 1 3\n")
            colouring_service.enumerate_3_colourings(graph)
        categories = {getattr(record, "category", None) for record in caplog.records}
        assert {"graph", "colouring"} <= categories

    def test_every_category_has_a_colour(self, caplog):
        categories = ("graph", "pattern", "colouring", "solver", "oracle", "reduction", "config", "cli")
        for category in categories:
            assert category in CATEGORY_COLORS
            with caplog.at_level(logging.INFO):
                get_category_logger("diamkit.test", category).info("hello")
            assert caplog.records[-1].category == category


class TestFormatter:

    def test_colours_by_category(self):
        record = logging.LogRecord("x", logging.INFO, __file__, 1, "msg", None, None)
        record.category = "solver"
        text = ColoredFormatter(fmt="%(message)s").format(record)
        assert text == f"{CATEGORY_COLORS['solver']}msg\033[0m"

    def test_plain_stream(self):
        stream = io.StringIO()
        setup_colored_logging(logging.INFO, stream, fmt="%(levelname)s %(message)s")
        get_category_logger("diamkit.test", "cli").info("ready")
        assert stream.getvalue() == "INFO ready\n"
        setup_colored_logging(logging.WARNING)
