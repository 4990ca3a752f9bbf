"""
Unit tests for ConfigManager.

Tests default loading, persistence, validation on assignment and key resets.
"""

from pathlib import Path

import orjson
import pytest

from bn_walls.core.config import ConfigManager
from bn_walls.models.config import AppConfig


class TestConfigLoad:
    """Test ConfigManager.load() behavior."""

    def test_missing_file_gives_defaults_without_writing(self, tmp_path: Path) -> None:
        """Should return defaults and leave the directory untouched."""
        manager = ConfigManager(tmp_path / "cfg")

        config = manager.load()

        assert config == AppConfig()
        assert config.default_format == "json"
        assert config.svg_canvas == 600
        assert not manager.config_path.exists()

    def test_directory_or_file_path(self, tmp_path: Path) -> None:
        assert ConfigManager(tmp_path).config_path == tmp_path / "config.json"
        assert ConfigManager(tmp_path / "other.json").config_path == tmp_path / "other.json"

    def test_reads_existing_config(self, tmp_path: Path) -> None:
        path = tmp_path / "config.json"
        path.write_bytes(orjson.dumps({"default_format": "table", "max_workers": 2}))

        config = ConfigManager(path).load()

        assert config.default_format == "table"
        assert config.max_workers == 2
        assert config.svg_precision == 3

    def test_unknown_keys_ignored(self, tmp_path: Path, caplog: pytest.LogCaptureFixture) -> None:
        path = tmp_path / "config.json"
        path.write_bytes(orjson.dumps({"api_base_url": "x", "svg_canvas": 800}))

        config = ConfigManager(path).load()

        assert config.svg_canvas == 800
        assert "api_base_url" in caplog.text

    def test_rejects_invalid_json(self, tmp_path: Path) -> None:
        path = tmp_path / "config.json"
        path.write_text("{ invalid json }", encoding="utf-8")

        with pytest.raises(ValueError, match="Invalid JSON"):
            ConfigManager(path).load()

    def test_rejects_non_object(self, tmp_path: Path) -> None:
        path = tmp_path / "config.json"
        path.write_text("[1, 2]", encoding="utf-8")

        with pytest.raises(ValueError, match="JSON object"):
            ConfigManager(path).load()

    def test_rejects_out_of_range_values(self, tmp_path: Path) -> None:
        path = tmp_path / "config.json"
        path.write_bytes(orjson.dumps({"max_workers": 0}))

        with pytest.raises(ValueError, match="Invalid configuration"):
            ConfigManager(path).load()


class TestConfigPersistence:
    """Test get/set/save round trips."""

    def test_set_and_save(self, tmp_config_dir: Path) -> None:
        manager = ConfigManager(tmp_config_dir)
        manager.set("svg_precision", 5)
        manager.save()

        reloaded = ConfigManager(tmp_config_dir)
        assert reloaded.get("svg_precision") == 5
        assert orjson.loads(manager.config_path.read_bytes())["svg_precision"] == 5

    def test_set_validates_on_assignment(self, tmp_config_dir: Path) -> None:
        manager = ConfigManager(tmp_config_dir)
        with pytest.raises(ValueError, match="search_inflation"):
            manager.set("search_inflation", 20)
        assert manager.get("search_inflation") == 1

    def test_set_coerces_strings(self, tmp_config_dir: Path) -> None:
        manager = ConfigManager(tmp_config_dir)
        manager.set("max_workers", "8")
        assert manager.config.max_workers == 8

    def test_log_file_can_be_cleared(self, tmp_config_dir: Path) -> None:
        manager = ConfigManager(tmp_config_dir)
        manager.set("log_file", str(tmp_config_dir / "bn.log"))
        assert manager.get("log_file") == str(tmp_config_dir / "bn.log")
        manager.set("log_file", "none")
        assert manager.get("log_file") is None

    def test_unknown_key(self, tmp_config_dir: Path) -> None:
        manager = ConfigManager(tmp_config_dir)
        with pytest.raises(KeyError):
            manager.get("nope")
        with pytest.raises(KeyError):
            manager.set("nope", 1)
        with pytest.raises(KeyError):
            manager.reset_key("nope")

    def test_reset_key_and_defaults(self, tmp_config_dir: Path) -> None:
        manager = ConfigManager(tmp_config_dir)
        manager.set("default_format", "table")
        manager.set("svg_canvas", 1000)

        manager.reset_key("svg_canvas")
        assert manager.get("svg_canvas") == 600
        assert manager.get("default_format") == "table"

        manager.reset_to_defaults()
        assert manager.to_dict() == AppConfig().model_dump(mode="json")
