"""Configuration service for caps and logging settings."""
import logging
import os
from pathlib import Path
from typing import Dict, Mapping, Optional

import yaml
from pydantic import ValidationError

from diamkit.exceptions import InvalidInputError
from diamkit.models import CapsConfig
from diamkit.utils import get_category_logger

logger = get_category_logger(__name__, "config")

CAPS_ENV = "DIAMKIT_CAPS"


def parse_cap_assignments(text: str) -> Dict[str, int]:
    """Parse ``key=value,key=value`` into a cap mapping.

    Raises:
        InvalidInputError: On a malformed assignment or a non-integer value
    """
    caps: Dict[str, int] = {}
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        key, sep, value = chunk.partition("=")
        if not sep:
            raise InvalidInputError(f"cap assignment '{chunk}' is not key=value")
        try:
            caps[key.strip()] = int(value.strip())
        except ValueError:
            raise InvalidInputError(f"cap '{key.strip()}' needs an integer, got '{value}'")
    return caps


class ConfigService:
    """Service for managing diamkit configuration.

    Caps resolve with precedence flag > environment > config file > default.
    """

    def __init__(
        self,
        config_path: Optional[str] = None,
        cap_overrides: Optional[Mapping[str, int]] = None,
        environ: Optional[Mapping[str, str]] = None,
    ):
        """Initialize configuration service.

        Args:
            config_path: Path to config file. If None, will search default locations.
            cap_overrides: Caps given on the command line
            environ: Environment mapping (defaults to ``os.environ``)
        """
        self._config: Optional[Dict] = None
        self._config_path = config_path
        self._cap_overrides = dict(cap_overrides or {})
        self._environ = environ if environ is not None else os.environ
        self._caps: Optional[CapsConfig] = None
        self.load_config()

    def load_config(self) -> Dict:
        """Load configuration from YAML file.

        Returns:
            Configuration dictionary (empty when no file exists and no path was given)

        Raises:
            InvalidInputError: If an explicit config path does not exist
        """
        if self._config_path:
            config_path = Path(self._config_path)
            if not config_path.exists():
                raise InvalidInputError(f"config file {config_path} not found")
        else:
            # Try default locations
            config_path = Path("config.yml")
            if not config_path.exists():
                config_path = Path("config/config.yml")

        if config_path.exists():
            with open(config_path, 'r', encoding='utf-8') as f:
                self._config = yaml.safe_load(f) or {}
            logger.info(f"Configuration loaded from {config_path}")
        else:
            self._config = {}
            logger.debug("No config file found, using built-in defaults")

        self._caps = None
        return self._config

    @property
    def config(self) -> Dict:
        """Get current configuration."""
        if self._config is None:
            raise RuntimeError("Configuration not loaded")
        return self._config

    def get_caps(self) -> CapsConfig:
        """Resolve the caps.

        Returns:
            Validated caps

        Raises:
            InvalidInputError: On unknown cap names or invalid values
        """
        if self._caps is not None:
            return self._caps

        merged: Dict[str, int] = dict(self.config.get("caps") or {})
        env_value = self._environ.get(CAPS_ENV)
        if env_value:
            merged.update(parse_cap_assignments(env_value))
        merged.update(self._cap_overrides)

        unknown = sorted(set(merged) - set(CapsConfig.model_fields))
        if unknown:
            raise InvalidInputError(f"unknown cap(s): {', '.join(unknown)}")
        try:
            self._caps = CapsConfig(**merged)
        except ValidationError as e:
            raise InvalidInputError(f"invalid caps: {e.errors()[0]['msg']}")

        logger.debug(f"Caps resolved: {self._caps.model_dump()}")
        return self._caps

    def get_log_level(self) -> int:
        """Logging level from the ``logging`` section (default WARNING)."""
        name = str((self.config.get("logging") or {}).get("level", "WARNING")).upper()
        return getattr(logging, name, logging.WARNING)

    def get_log_format(self) -> Optional[str]:
        return (self.config.get("logging") or {}).get("format")
