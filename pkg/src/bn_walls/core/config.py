"""
Configuration manager for loading and saving user preferences.

Reads ``config.json`` from the configuration directory. A missing file means
defaults; nothing is written until :meth:`ConfigManager.save` is called.
"""

from pathlib import Path
from typing import Any

import orjson
from pydantic import ValidationError

from bn_walls.constants import DEFAULT_CONFIG_FILE
from bn_walls.models.config import AppConfig
from bn_walls.utils.app_logger import get_logger
from bn_walls.utils.file_utils import write_text_atomic

logger = get_logger(__name__)


class ConfigManager:
    """Manages the application configuration file."""

    def __init__(self, config_path: Path) -> None:
        """
        Initialize ConfigManager.

        Args:
            config_path: Path to config.json or a directory containing it
        """
        if config_path.suffix != ".json":
            self.config_path = config_path / DEFAULT_CONFIG_FILE
        else:
            self.config_path = config_path
        self._config: AppConfig | None = None

    def load(self) -> AppConfig:
        """
        Load configuration from file, falling back to defaults if missing.

        Returns:
            AppConfig: Validated configuration object

        Raises:
            ValueError: If the file holds invalid JSON or invalid values
        """
        if not self.config_path.exists():
            logger.debug(f"No config at {self.config_path}, using defaults")
            self._config = AppConfig()
            return self._config

        try:
            data = orjson.loads(self.config_path.read_bytes())
        except orjson.JSONDecodeError as e:
            raise ValueError(f"Invalid JSON in config file {self.config_path}: {e}") from e
        if not isinstance(data, dict):
            raise ValueError(f"Config file {self.config_path} must hold a JSON object")

        unknown = sorted(set(data) - set(AppConfig.model_fields))
        if unknown:
            logger.warning(f"Ignoring unknown config keys: {', '.join(unknown)}")
        try:
            self._config = AppConfig(**{k: v for k, v in data.items() if k in AppConfig.model_fields})
        except ValidationError as e:
            raise ValueError(f"Invalid configuration: {e}") from e
        return self._config

    @property
    def config(self) -> AppConfig:
        if self._config is None:
            self._config = self.load()
        return self._config

    def save(self, config: AppConfig | None = None) -> None:
        """
        Save configuration to file.

        Args:
            config: Configuration object to save (uses last loaded if None)
        """
        if config is not None:
            self._config = config
        payload = self.config.model_dump(mode="json")
        text = orjson.dumps(payload, option=orjson.OPT_INDENT_2 | orjson.OPT_APPEND_NEWLINE)
        write_text_atomic(self.config_path, text.decode("utf-8"))
        logger.info(f"Saved configuration to {self.config_path}")

    def get(self, key: str) -> Any:
        """Get a configuration value by key.

        Raises:
            KeyError: If the key is not a configuration field
        """
        if key not in AppConfig.model_fields:
            raise KeyError(f"Unknown configuration key: {key}")
        return self.config.model_dump(mode="json")[key]

    def set(self, key: str, value: Any) -> None:
        """Set a configuration value; validation happens on assignment.

        Raises:
            KeyError: If the key is not a configuration field
            ValueError: If the value fails validation
        """
        if key not in AppConfig.model_fields:
            raise KeyError(f"Unknown configuration key: {key}")
        if key == "log_file" and value in ("", "none", "null"):
            value = None
        try:
            setattr(self.config, key, value)
        except ValidationError as e:
            raise ValueError(f"Invalid value for {key}: {e}") from e

    def to_dict(self) -> dict[str, Any]:
        """Get all configuration as a dictionary."""
        return self.config.model_dump(mode="json")

    def reset_to_defaults(self) -> None:
        """Reset configuration to default values."""
        self._config = AppConfig()

    def reset_key(self, key: str) -> None:
        """Reset a specific key to its default value."""
        if key not in AppConfig.model_fields:
            raise KeyError(f"Unknown configuration key: {key}")
        setattr(self.config, key, AppConfig.model_fields[key].get_default())
