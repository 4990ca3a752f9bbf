"""Integration tests for configuration management CLI lifecycle.

Tests the complete flow: config set, config get, config list, config reset.
"""

import json
from pathlib import Path

import pytest
from click.testing import CliRunner

from bn_walls.cli.config_cmd import config_group

pytestmark = pytest.mark.integration


class TestConfigSetGet:
    """Test config set and get command integration."""

    def test_set_and_get_default_format(self, tmp_path: Path) -> None:
        """Test setting and retrieving the default output format."""
        runner = CliRunner()
        config_dir = tmp_path / "config"

        result = runner.invoke(
            config_group,
            ["set", "default_format", "table"],
            obj={"config_dir": config_dir},
        )

        assert result.exit_code == 0
        assert "Set default_format = table" in result.output

        result = runner.invoke(
            config_group,
            ["get", "default_format"],
            obj={"config_dir": config_dir},
        )

        assert result.exit_code == 0
        assert result.output.strip() == "default_format = table"

    def test_set_multiple_keys(self, tmp_path: Path) -> None:
        """Test setting several keys, including integer conversion."""
        runner = CliRunner()
        config_dir = tmp_path / "config"

        runner.invoke(config_group, ["set", "svg_canvas", "800"], obj={"config_dir": config_dir})
        runner.invoke(config_group, ["set", "max_workers", "2"], obj={"config_dir": config_dir})

        data = json.loads((config_dir / "config.json").read_text(encoding="utf-8"))
        assert data["svg_canvas"] == 800
        assert data["max_workers"] == 2
        assert data["default_format"] == "json"

    def test_get_nonexistent_key(self, tmp_path: Path) -> None:
        """Test getting a key that does not exist."""
        runner = CliRunner()
        result = runner.invoke(
            config_group,
            ["get", "api_base_url"],
            obj={"config_dir": tmp_path / "config"},
        )

        assert result.exit_code != 0
        assert "Unknown configuration key" in result.output


class TestConfigList:
    """Test config list command integration."""

    def test_list_defaults(self, tmp_path: Path) -> None:
        """Test listing when no config file exists yet."""
        runner = CliRunner()
        config_dir = tmp_path / "config"
        result = runner.invoke(config_group, ["list"], obj={"config_dir": config_dir})

        assert result.exit_code == 0
        for key in ("default_format", "svg_canvas", "svg_precision", "max_workers", "search_inflation"):
            assert key in result.output
        assert not (config_dir / "config.json").exists()

    def test_ls_alias(self, tmp_path: Path) -> None:
        runner = CliRunner()
        config_dir = tmp_path / "config"
        runner.invoke(config_group, ["set", "search_inflation", "3"], obj={"config_dir": config_dir})
        result = runner.invoke(config_group, ["ls"], obj={"config_dir": config_dir})

        assert result.exit_code == 0
        assert "search_inflation" in result.output
        assert "3" in result.output


class TestConfigReset:
    """Test config reset command integration."""

    def test_reset_specific_key(self, tmp_path: Path) -> None:
        """Test resetting one key leaves the others alone."""
        runner = CliRunner()
        config_dir = tmp_path / "config"
        runner.invoke(config_group, ["set", "svg_precision", "5"], obj={"config_dir": config_dir})
        runner.invoke(config_group, ["set", "max_workers", "8"], obj={"config_dir": config_dir})

        result = runner.invoke(config_group, ["reset", "svg_precision"], obj={"config_dir": config_dir})
        assert result.exit_code == 0

        data = json.loads((config_dir / "config.json").read_text(encoding="utf-8"))
        assert data["svg_precision"] == 3
        assert data["max_workers"] == 8

    def test_reset_all_config(self, tmp_path: Path) -> None:
        """Test resetting everything to defaults."""
        runner = CliRunner()
        config_dir = tmp_path / "config"
        runner.invoke(config_group, ["set", "default_format", "table"], obj={"config_dir": config_dir})

        result = runner.invoke(config_group, ["reset", "--all"], obj={"config_dir": config_dir})
        assert result.exit_code == 0
        assert "Reset all settings" in result.output

        result = runner.invoke(config_group, ["get", "default_format"], obj={"config_dir": config_dir})
        assert "json" in result.output

    def test_reset_needs_key_or_all(self, tmp_path: Path) -> None:
        runner = CliRunner()
        result = runner.invoke(config_group, ["reset"], obj={"config_dir": tmp_path / "config"})
        assert result.exit_code != 0


class TestConfigPath:
    """Test config path command integration."""

    def test_show_config_path(self, tmp_path: Path) -> None:
        """Test the printed path points at config.json in the directory."""
        runner = CliRunner()
        config_dir = tmp_path / "config"
        result = runner.invoke(config_group, ["path"], obj={"config_dir": config_dir})

        assert result.exit_code == 0
        assert result.output.strip() == str(config_dir / "config.json")


class TestConfigValidation:
    """Test value validation on set."""

    @pytest.mark.parametrize(
        ("key", "value"),
        [
            ("default_format", "xml"),
            ("svg_canvas", "10"),
            ("svg_precision", "9"),
            ("max_workers", "0"),
            ("search_inflation", "many"),
        ],
    )
    def test_invalid_values_rejected(self, tmp_path: Path, key: str, value: str) -> None:
        """Test invalid values fail and nothing is written."""
        runner = CliRunner()
        config_dir = tmp_path / "config"
        result = runner.invoke(config_group, ["set", key, value], obj={"config_dir": config_dir})

        assert result.exit_code != 0
        assert "Error setting config" in result.output
        assert not (config_dir / "config.json").exists()

    def test_log_file_cleared_with_none(self, tmp_path: Path) -> None:
        runner = CliRunner()
        config_dir = tmp_path / "config"
        log_file = tmp_path / "bn.log"
        runner.invoke(config_group, ["set", "log_file", str(log_file)], obj={"config_dir": config_dir})
        result = runner.invoke(config_group, ["get", "log_file"], obj={"config_dir": config_dir})
        assert str(log_file) in result.output

        runner.invoke(config_group, ["set", "log_file", "none"], obj={"config_dir": config_dir})
        result = runner.invoke(config_group, ["get", "log_file"], obj={"config_dir": config_dir})
        assert result.output.strip() == "log_file = None"
