"""Shared test fixtures for hardy-weak-values."""

from __future__ import annotations

import logging
from collections.abc import Iterator

import numpy as np
import pytest

from hardy_analysis.hardy import HardyScenario, build_scenario
from hardy_analysis.observability import clear_command_context, disable_tracing


@pytest.fixture
def rng() -> np.random.Generator:
    """Seeded generator; every randomized test is reproducible."""
    return np.random.default_rng(20240611)


@pytest.fixture
def hardy() -> HardyScenario:
    """V-inner Hardy scenario with dark-port post-selection."""
    return build_scenario()


@pytest.fixture(autouse=True)
def _reset_observability() -> Iterator[None]:
    """Leave no tracer, bound log context or captured-stream handler behind."""
    root = logging.getLogger()
    handlers, level = list(root.handlers), root.level
    yield
    disable_tracing()
    clear_command_context()
    root.handlers[:] = handlers
    root.setLevel(level)
