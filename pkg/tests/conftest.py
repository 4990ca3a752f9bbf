"""Pytest configuration and shared fixtures."""

import os
import random
from collections.abc import Generator
from pathlib import Path

import pytest

from bn_walls.models.surface import Surface

os.environ.setdefault("PYTHONHASHSEED", "0")
random.seed(0)


@pytest.fixture(scope="session", autouse=True)
def _deterministic_random() -> Generator[None, None, None]:
    """Force deterministic random state across the entire test session."""
    random.seed(0)
    yield
    random.seed(0)


@pytest.fixture(autouse=True)
def _isolated_config_dir(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> Path:
    """Point the CLI at an empty configuration directory."""
    config_dir = tmp_path / ".bn-walls-test"
    monkeypatch.setenv("BN_WALLS_CONFIG_DIR", str(config_dir))
    return config_dir


@pytest.fixture
def tmp_config_dir(tmp_path: Path) -> Path:
    """Create a temporary configuration directory for testing.

    Args:
        tmp_path: Pytest temporary directory fixture

    Returns:
        Path to temporary config directory
    """
    config_dir = tmp_path / "config"
    config_dir.mkdir(mode=0o700)
    return config_dir


@pytest.fixture
def f0() -> Surface:
    return Surface.hirzebruch(0)


@pytest.fixture
def f1() -> Surface:
    return Surface.hirzebruch(1)


@pytest.fixture
def p2() -> Surface:
    return Surface.projective_plane()


@pytest.fixture(params=[0, 1, 2, 3, 4])
def hirzebruch(request: pytest.FixtureRequest) -> Surface:
    """F_e for e = 0..4."""
    return Surface.hirzebruch(request.param)
