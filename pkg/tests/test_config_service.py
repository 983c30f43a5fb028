import logging

import pytest

from diamkit.exceptions import InvalidInputError
from diamkit.services import ConfigService
from diamkit.services.config_service import CAPS_ENV, parse_cap_assignments


@pytest.fixture
def config_file(tmp_path):
    path = tmp_path / "config.yml"
    path.write_text(
        "caps:\n"
        "  oracle_vertices: 10\n"
        "  nae_variables: 7\n"
        "logging:\n"
        "  level: debug\n",
        encoding="utf-8",
    )
    return str(path)


class TestCaps:

    def test_precedence(self, config_file):
        service = ConfigService(
            config_file,
            cap_overrides={"oracle_vertices": 14},
            environ={CAPS_ENV: "oracle_vertices=12,count=5"},
        )
        caps = service.get_caps()
        assert caps.oracle_vertices == 14
        assert caps.count == 5
        assert caps.nae_variables == 7
        assert caps.pattern_vertices == 24

    def test_environment_over_file(self, config_file):
        caps = ConfigService(config_file, environ={CAPS_ENV: "oracle_vertices=12"}).get_caps()
        assert caps.oracle_vertices == 12

    def test_file_over_default(self, config_file):
        assert ConfigService(config_file, environ={}).get_caps().oracle_vertices == 10

    def test_unknown_cap(self, config_file):
        service = ConfigService(config_file, cap_overrides={"colours": 4}, environ={})
        with pytest.raises(InvalidInputError):
            service.get_caps()

    def test_non_positive_cap(self, config_file):
        service = ConfigService(config_file, cap_overrides={"count": 0}, environ={})
        with pytest.raises(InvalidInputError):
            service.get_caps()

    def test_missing_file(self, tmp_path):
        with pytest.raises(InvalidInputError):
            ConfigService(str(tmp_path / "absent.yml"), environ={})


class TestLogging:

    def test_level_from_file(self, config_file):
        assert ConfigService(config_file, environ={}).get_log_level() == logging.DEBUG

    def test_default_level(self, tmp_path):
        path = tmp_path / "empty.yml"
        path.write_text("", encoding="utf-8")
        service = ConfigService(str(path), environ={})
        assert service.get_log_level() == logging.WARNING
        assert service.get_log_format() is None


class TestCapAssignments:

    def test_parse(self):
        assert parse_cap_assignments("count=5, oracle_vertices=9,") == {
            "count": 5,
            "oracle_vertices": 9,
        }

    @pytest.mark.parametrize("text", ["count", "count=x"])
    def test_malformed(self, text):
        with pytest.raises(InvalidInputError):
            parse_cap_assignments(text)
