"""Integration test fixtures: the bundled report schema and a validator for it."""

from __future__ import annotations

import json
from importlib import resources
from typing import Any

import pytest

from hardy_cli.main import SCHEMA_RESOURCE


@pytest.fixture(scope="session")
def report_schema() -> dict[str, Any]:
    """The JSON schema shipped inside hardy_cli."""
    text = resources.files("hardy_cli").joinpath(*SCHEMA_RESOURCE).read_text(encoding="utf-8")
    schema: dict[str, Any] = json.loads(text)
    return schema


@pytest.fixture(scope="session")
def report_validator(report_schema: dict[str, Any]) -> Any:  # noqa: ANN401
    """Draft 2020-12 validator; skipped when jsonschema is not installed."""
    jsonschema = pytest.importorskip("jsonschema")
    jsonschema.Draft202012Validator.check_schema(report_schema)
    return jsonschema.Draft202012Validator(report_schema)
