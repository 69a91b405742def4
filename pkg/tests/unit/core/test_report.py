"""Tests for the report envelope and canonical JSON."""

from __future__ import annotations

import json
import math

import pytest

from hardy_core.models import ComplexValue, Report, canonical_json, format_float
from tests.mocks.mock_factories import make_weak_table


@pytest.mark.unit
class TestFormatFloat:
    """Fixed float formatting."""

    @pytest.mark.parametrize(
        ("value", "expected"),
        [
            (0.1, "0.10000000000000001"),
            (1.0, "1"),
            (-0.0, "0"),
            (1e-20, "9.9999999999999995e-21"),
            (float("nan"), "null"),
            (float("inf"), "null"),
        ],
    )
    def test_format(self, value: float, expected: str) -> None:
        """17 significant digits, -0.0 as 0, non-finite as null."""
        assert format_float(value) == expected

    def test_round_trips(self) -> None:
        """17 significant digits recover the exact double."""
        for value in (math.pi, 1.0 / 3.0, -2.5e-300):
            assert float(format_float(value)) == value


@pytest.mark.unit
class TestCanonicalJson:
    """Deterministic serialization."""

    def test_sorted_keys_and_indent(self) -> None:
        """Keys are sorted and nested with two spaces."""
        text = canonical_json({"b": 1, "a": {"d": True, "c": None}})
        assert text == '{\n  "a": {\n    "c": null,\n    "d": true\n  },\n  "b": 1\n}'

    def test_number_lists_inline(self) -> None:
        """Flat numeric lists stay on one line; nested lists break."""
        assert canonical_json([1.0, 2, -0.0]) == "[1, 2, 0]"
        assert canonical_json([[1.0], [2.0]]) == "[\n  [1],\n  [2]\n]"

    def test_empty_containers(self) -> None:
        """Empty dicts and lists have compact forms."""
        assert canonical_json({"a": [], "b": {}}) == '{\n  "a": [],\n  "b": {}\n}'

    def test_models_are_dumped(self) -> None:
        """Pydantic models serialize through their python dump."""
        assert canonical_json(ComplexValue(re=1.5, im=0.0)) == '{\n  "im": 0,\n  "re": 1.5\n}'

    def test_valid_json(self) -> None:
        """Output parses back with the standard decoder."""
        payload = make_weak_table().model_dump()
        parsed = json.loads(canonical_json(payload))
        assert parsed["joint"] == [[0, 1], [1, -1]]
        assert parsed["labels"] == ["V", "H"]

    def test_nan_becomes_null(self) -> None:
        """Non-finite floats are emitted as null."""
        assert json.loads(canonical_json({"x": float("nan")})) == {"x": None}

    def test_unsupported_type(self) -> None:
        """Anything else is a TypeError."""
        with pytest.raises(TypeError, match="set"):
            canonical_json({1, 2})


@pytest.mark.unit
class TestReport:
    """The envelope printed by every subcommand."""

    def test_of_model_payload(self) -> None:
        """A model payload is dumped into the envelope."""
        report = Report.of("table", {"convention": "v-inner"}, make_weak_table())
        assert report.payload["total"] == 1.0
        assert report.schema_version == "1"

    def test_of_mapping_payload(self) -> None:
        """Models inside a mapping payload are dumped too."""
        report = Report.of("prep", {}, {"flawed": ComplexValue(re=1.0, im=0.0), "n": 3})
        assert report.payload == {"flawed": {"re": 1.0, "im": 0.0}, "n": 3}

    def test_json_omits_missing_timestamp(self) -> None:
        """generated_at only appears when given."""
        plain = json.loads(Report.of("table", {}, {}).to_json())
        assert "generated_at" not in plain
        stamped = json.loads(Report.of("table", {}, {}, "2024-01-01T00:00:00+00:00").to_json())
        assert stamped["generated_at"] == "2024-01-01T00:00:00+00:00"

    def test_json_is_deterministic(self) -> None:
        """Same inputs, byte-identical output ending in a newline."""
        first = Report.of("table", {"post": "dark"}, make_weak_table()).to_json()
        second = Report.of("table", {"post": "dark"}, make_weak_table()).to_json()
        assert first == second
        assert first.endswith("}\n")
        assert list(json.loads(first)) == ["command", "parameters", "payload", "schema_version"]
