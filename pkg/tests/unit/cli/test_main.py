"""Tests for CLI entrypoint."""

from __future__ import annotations

import json
from typing import Any

import pytest
from typer.testing import CliRunner

from hardy_cli.main import EXIT_DOMAIN_ERROR, app

runner = CliRunner()


def _report(*args: str) -> dict[str, Any]:
    result = runner.invoke(app, list(args))
    assert result.exit_code == 0, result.output
    report: dict[str, Any] = json.loads(result.stdout)
    return report


@pytest.mark.unit
class TestTableCommand:
    """The 'table' command."""

    def test_json_report(self) -> None:
        """Default output is the JSON envelope with the Hardy table."""
        report = _report("table")
        assert report["command"] == "table"
        assert report["parameters"] == {"convention": "v-inner", "post": "dark"}
        assert report["payload"]["joint"] == [[0, 1], [1, -1]]
        assert report["schema_version"] == "1"
        assert "generated_at" not in report

    def test_tsv(self) -> None:
        """--format tsv prints the bare table."""
        result = runner.invoke(app, ["table", "--format", "tsv"])
        assert result.exit_code == 0
        assert result.stdout == "photon1/photon2\tV\tH\nV\t0\t1\nH\t1\t-1\n"

    def test_text(self) -> None:
        """--format text prints rich tables."""
        result = runner.invoke(app, ["table", "--format", "text", "--convention", "h-inner"])
        assert result.exit_code == 0
        assert "Joint weak values" in result.stdout

    def test_timestamp(self) -> None:
        """--timestamp adds generated_at."""
        report = _report("--timestamp", "table")
        assert report["generated_at"].endswith("+00:00")

    def test_inner_post_selection_exits_3(self) -> None:
        """An unreachable post-selection is a domain error."""
        result = runner.invoke(app, ["table", "--post", "inner"])
        assert result.exit_code == EXIT_DOMAIN_ERROR
        assert "post-selection is unreachable" in result.output

    def test_unknown_convention_exits_2(self) -> None:
        """Bad enum values are usage errors."""
        result = runner.invoke(app, ["table", "--convention", "diagonal"])
        assert result.exit_code == 2


@pytest.mark.unit
class TestPointerCommands:
    """The 'pointer' and 'joint' commands."""

    def test_pointer_default(self) -> None:
        """P_V1 is read exactly; no order can be fitted."""
        report = _report("pointer")
        payload = report["payload"]
        assert payload["label"] == "P_V1"
        assert payload["analytic"] == {"im": 0, "re": 1}
        assert payload["error"] <= 1e-12
        assert payload["fitted_order"] is None
        assert report["parameters"]["g_list"] == [0.2, 0.1, 0.05]

    def test_pointer_a1(self) -> None:
        """A1 with gamma on the inner arm reads gamma."""
        payload = _report("pointer", "--observable", "a1", "--gamma", "2")["payload"]
        assert payload["label"] == "A1"
        assert payload["analytic"]["re"] == pytest.approx(2.0, abs=1e-12)

    @pytest.mark.parametrize("g_list", ["0.1,0.2,0.3", "abc", "0.2,0.1"])
    def test_bad_g_list_exits_2(self, g_list: str) -> None:
        """Invalid schedules are usage errors."""
        result = runner.invoke(app, ["pointer", "--g-list", g_list])
        assert result.exit_code == 2

    def test_bad_sigma_exits_2(self) -> None:
        """sigma must be positive."""
        result = runner.invoke(app, ["pointer", "--sigma=0"])
        assert result.exit_code == 2

    def test_joint_hh(self) -> None:
        """The outer-outer joint weak value is extracted near -1."""
        payload = _report("joint", "--pair", "hh")["payload"]
        assert payload["label"] == "P_HH"
        assert payload["extracted"] == pytest.approx(-1.0, abs=0.02)

    def test_joint_inner_post_exits_3(self) -> None:
        """Domain errors propagate from the estimator as exit 3."""
        result = runner.invoke(app, ["joint", "--post", "inner"])
        assert result.exit_code == EXIT_DOMAIN_ERROR


@pytest.mark.unit
class TestOtherCommands:
    """prep, strong, a12, narrative, schema and version."""

    @pytest.mark.parametrize(
        ("mode", "keys"),
        [
            ("flawed", {"flawed"}),
            ("correct", {"correct", "schmidt"}),
        ],
    )
    def test_prep_modes(self, mode: str, keys: set[str]) -> None:
        """Single-procedure modes report only what they ran."""
        payload = _report("prep", "--mode", mode)["payload"]
        assert set(payload) == keys
        assert "density_matrix" in payload[mode]
        assert "state" not in payload[mode]

    def test_prep_compare(self) -> None:
        """The default comparison flags the flawed state as unsuitable."""
        payload = _report("prep")["payload"]
        assert payload["flawed_suitable"] is False
        assert payload["flawed"]["fidelity_with_target"] == pytest.approx(1.0 / 3.0)

    def test_strong(self) -> None:
        """Strong pointers reproduce collapse statistics."""
        report = _report("strong")
        assert report["parameters"]["g_over_sigma"] == 20
        assert report["payload"]["max_deviation"] <= 1e-12

    def test_a12(self) -> None:
        """The vector weak value differs from the joint value by |gamma|."""
        payload = _report("a12", "--gamma", "1.5")["payload"]
        assert payload["discrepancy"] == pytest.approx(1.5, abs=1e-12)
        assert payload["quoted_matches_computed"] is False

    def test_narrative_text(self) -> None:
        """Narrative defaults to text."""
        result = runner.invoke(app, ["narrative"])
        assert result.exit_code == 0
        assert result.stdout.startswith("Hardy's paradox")

    def test_narrative_json(self) -> None:
        """--format json wraps the narrative in the envelope."""
        payload = _report("narrative", "--format", "json")["payload"]
        assert "text" in payload
        assert payload["values"]["inner"] == "V"

    def test_schema(self) -> None:
        """The bundled schema is valid JSON."""
        result = runner.invoke(app, ["schema"])
        assert result.exit_code == 0
        schema = json.loads(result.stdout)
        assert schema["properties"]["schema_version"]["const"] == "1"

    def test_version(self) -> None:
        """version prints the package version."""
        result = runner.invoke(app, ["version"])
        assert result.exit_code == 0
        assert "hardy-weak-values v0.1.0" in result.stdout

    def test_verbose(self) -> None:
        """-v enables debug logging without failing."""
        result = runner.invoke(app, ["-v", "--log-format", "json", "table"])
        assert result.exit_code == 0

    def test_no_args_shows_help(self) -> None:
        """Bare invocation prints usage."""
        result = runner.invoke(app, [])
        assert "Usage" in result.output
