"""Shared pytest fixtures for unit tests."""

from __future__ import annotations

from types import SimpleNamespace

import pytest

from hardy_analysis.weakval import PrePostEnsemble
from hardy_core.models import WeakValueTable
from tests.mocks.mock_factories import make_scenario, make_weak_table
from tests.mocks.mock_settings import make_settings


@pytest.fixture
def mock_settings() -> SimpleNamespace:
    """Return a settings stand-in with sensible defaults."""
    return make_settings()


@pytest.fixture
def hardy_ensemble() -> PrePostEnsemble:
    """Return the dark-port Hardy ensemble."""
    return make_scenario().ensemble


@pytest.fixture
def hardy_table() -> WeakValueTable:
    """Return the expected V-inner weak-value table."""
    return make_weak_table()
