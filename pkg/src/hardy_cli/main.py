"""CLI entrypoint using typer.

stdout carries the report (canonical JSON by default); diagnostics and
errors go to stderr. Exit codes: 0 success, 2 usage error, 3 domain error.
"""

from __future__ import annotations

from collections.abc import Callable, Mapping
from datetime import UTC, datetime
from importlib import resources
from typing import Any, TypeVar

import structlog
import typer
from pydantic import BaseModel
from rich.console import Console, RenderableType
from rich.markup import escape

from hardy_analysis.hardy import (
    Convention,
    HardyScenario,
    PostSelection,
    a12_analysis,
    build_scenario,
    hardy_pre_state,
    ifm_narrative,
    strong_contrast,
    weak_value_table,
)
from hardy_analysis.observability import (
    bind_command_context,
    clear_command_context,
    configure_logging,
    configure_tracing,
    trace_analysis,
)
from hardy_analysis.pointer import estimate_joint, estimate_single
from hardy_analysis.stateprep import (
    compare_preps,
    schmidt_decompose,
    simulate_correct_prep,
    simulate_flawed_prep,
)
from hardy_analysis.weakval import single_photon_observable
from hardy_cli import __version__, render
from hardy_cli.options import (
    DEFAULT_G_LIST_TEXT,
    CliOptions,
    LogFormat,
    ObservableChoice,
    PairChoice,
    PrepMode,
    ReportFormat,
    TableFormat,
    finite,
    parse_g_list,
    positive,
)
from hardy_core.config.settings import Settings
from hardy_core.constants import DEFAULT_SIGMA, STRONG_CONTRAST_RATIO
from hardy_core.exceptions import HardyError, OrthogonalPostSelectionError
from hardy_core.models import JointEstimate, Report, SingleEstimate
from hardy_core.qcore import SpectralOperator, embed, photon, projector

EXIT_DOMAIN_ERROR = 3
SCHEMA_RESOURCE = ("schemas", "report-v1.schema.json")

T = TypeVar("T")

app = typer.Typer(
    name="hardy-weak",
    help="Deterministic weak-value simulator for Hardy's paradox",
    no_args_is_help=True,
    add_completion=False,
)
console = Console(width=100, highlight=False, color_system=None)
err_console = Console(stderr=True, highlight=False)
logger = structlog.get_logger()

CONVENTION_OPTION = typer.Option(
    Convention.V_INNER, "--convention", help="Polarization encoding the inner arm"
)
POST_OPTION = typer.Option(PostSelection.DARK, "--post", help="Final detection event")
FORMAT_OPTION = typer.Option(ReportFormat.JSON, "--format", help="json report or text tables")
SIGMA_OPTION = typer.Option(DEFAULT_SIGMA, "--sigma", callback=positive, help="Pointer spread")
G_LIST_OPTION = typer.Option(
    DEFAULT_G_LIST_TEXT, "--g-list", help="Couplings, comma-separated, strictly decreasing"
)
GAMMA_OPTION = typer.Option(1.0, "--gamma", callback=finite, help="Eigenvalue on the inner arm")
EPSILON_OPTION = typer.Option(
    0.0, "--epsilon", callback=finite, help="Eigenvalue on the outer arm"
)


@app.callback()
def main(
    ctx: typer.Context,
    verbose: bool = typer.Option(False, "-v", "--verbose", help="Enable debug logging"),
    log_format: LogFormat | None = typer.Option(
        None, "--log-format", help="stderr log format (overrides HARDY_LOG_FORMAT)"
    ),
    timestamp: bool = typer.Option(
        False, "--timestamp", help="Add generated_at to JSON reports"
    ),
) -> None:
    """Weak values, pointer readouts and state preparation for Hardy's paradox."""
    settings = Settings()
    if verbose:
        settings.log_level = "DEBUG"
    if log_format is LogFormat.JSON:
        settings.log_format = "json"
    elif log_format is LogFormat.CONSOLE:
        settings.log_format = "console"

    configure_logging(settings)
    configure_tracing(settings)
    ctx.obj = CliOptions(timestamp=timestamp)


def _analyze(command: str, compute: Callable[[], T], **attributes: str | float) -> T:
    """Run an analysis under the command's log context and span; domain errors exit 3."""
    bind_command_context(command)
    try:
        with trace_analysis(command, **attributes):
            return compute()
    except OrthogonalPostSelectionError as exc:
        logger.warning("orthogonal_postselection", error=str(exc))
        err_console.print(f"[red]Error:[/red] post-selection is unreachable: {escape(str(exc))}")
        raise typer.Exit(code=EXIT_DOMAIN_ERROR) from exc
    except HardyError as exc:
        logger.warning("analysis_failed", error=str(exc))
        err_console.print(f"[red]Error:[/red] {escape(str(exc))}")
        raise typer.Exit(code=EXIT_DOMAIN_ERROR) from exc
    finally:
        clear_command_context()


def _emit(
    ctx: typer.Context,
    command: str,
    parameters: Mapping[str, Any],
    payload: BaseModel | Mapping[str, Any],
    output_format: str,
    view: Callable[[], RenderableType],
) -> None:
    if output_format == "text":
        console.print(view())
        return
    options = ctx.obj if isinstance(ctx.obj, CliOptions) else CliOptions()
    generated_at = datetime.now(UTC).isoformat(timespec="seconds") if options.timestamp else None
    report = Report.of(command, parameters, payload, generated_at=generated_at)
    typer.echo(report.to_json(), nl=False)


def _scenario_parameters(convention: Convention, post: PostSelection) -> dict[str, Any]:
    return {"convention": convention.value, "post": post.value}


def _single_observable(
    s: HardyScenario, choice: ObservableChoice, gamma: float, epsilon: float
) -> tuple[SpectralOperator, str]:
    polarization = choice.polarization
    if polarization is not None:
        return s.single_projector(polarization, choice.site), f"P_{polarization}{choice.site}"
    a_single = single_photon_observable(gamma, epsilon, gamma_label=s.inner_label)
    return embed(a_single, choice.site), f"A{choice.site}"


def _photon_projector(polarization: str) -> SpectralOperator:
    return SpectralOperator.projective(projector(photon(polarization)))


@app.command()
def table(
    ctx: typer.Context,
    convention: Convention = CONVENTION_OPTION,
    post: PostSelection = POST_OPTION,
    output_format: TableFormat = typer.Option(
        TableFormat.JSON, "--format", help="json report, tsv table or text tables"
    ),
) -> None:
    """Joint and single-photon arm weak values."""
    result = _analyze("table", lambda: weak_value_table(build_scenario(convention, post)))
    if output_format is TableFormat.TSV:
        typer.echo(render.weak_table_tsv(result), nl=False)
        return
    _emit(
        ctx,
        "table",
        _scenario_parameters(convention, post),
        result,
        output_format.value,
        lambda: render.weak_table_view(result),
    )


@app.command()
def prep(
    ctx: typer.Context,
    mode: PrepMode = typer.Option(PrepMode.COMPARE, "--mode", help="Which preparation to run"),
    output_format: ReportFormat = FORMAT_OPTION,
) -> None:
    """Flawed (which-path) versus Schmidt-form preparation of the Hardy state."""
    parameters = {"mode": mode.value}
    if mode is PrepMode.FLAWED:
        flawed = _analyze("prep", simulate_flawed_prep)
        _emit(
            ctx,
            "prep",
            parameters,
            {"flawed": flawed},
            output_format.value,
            lambda: render.prep_view(flawed, None, None),
        )
    elif mode is PrepMode.CORRECT:
        correct, schmidt = _analyze(
            "prep",
            lambda: (
                simulate_correct_prep(),
                schmidt_decompose(hardy_pre_state()).to_summary(),
            ),
        )
        _emit(
            ctx,
            "prep",
            parameters,
            {"correct": correct, "schmidt": schmidt},
            output_format.value,
            lambda: render.prep_view(None, correct, schmidt),
        )
    else:
        comparison = _analyze("prep", compare_preps)
        _emit(
            ctx,
            "prep",
            parameters,
            comparison,
            output_format.value,
            lambda: render.prep_view(comparison.flawed, comparison.correct, comparison.schmidt),
        )


@app.command()
def pointer(
    ctx: typer.Context,
    observable: ObservableChoice = typer.Option(
        ObservableChoice.PV1, "--observable", help="Observable read by the pointer"
    ),
    gamma: float = GAMMA_OPTION,
    epsilon: float = EPSILON_OPTION,
    sigma: float = SIGMA_OPTION,
    g_list: str = G_LIST_OPTION,
    convention: Convention = CONVENTION_OPTION,
    post: PostSelection = POST_OPTION,
    output_format: ReportFormat = FORMAT_OPTION,
) -> None:
    """Read one weak value off an exactly simulated Gaussian pointer."""
    couplings = parse_g_list(g_list)

    def compute() -> SingleEstimate:
        s = build_scenario(convention, post)
        obs, label = _single_observable(s, observable, gamma, epsilon)
        return estimate_single(s.ensemble, obs, sigma, couplings, label)

    estimate = _analyze("pointer", compute, observable=observable.value)
    parameters = {
        **_scenario_parameters(convention, post),
        "observable": observable.value,
        "gamma": gamma,
        "epsilon": epsilon,
        "sigma": sigma,
        "g_list": list(couplings),
    }
    _emit(
        ctx,
        "pointer",
        parameters,
        estimate,
        output_format.value,
        lambda: render.single_estimate_view(estimate),
    )


@app.command()
def joint(
    ctx: typer.Context,
    pair: PairChoice = typer.Option(PairChoice.VV, "--pair", help="Joint arm projector"),
    sigma: float = SIGMA_OPTION,
    g_list: str = G_LIST_OPTION,
    convention: Convention = CONVENTION_OPTION,
    post: PostSelection = POST_OPTION,
    output_format: ReportFormat = FORMAT_OPTION,
) -> None:
    """Solve a joint weak value from the correlation of two pointers."""
    couplings = parse_g_list(g_list)
    p1, p2 = pair.value.upper()

    def compute() -> JointEstimate:
        s = build_scenario(convention, post)
        obs_a, obs_b = _photon_projector(p1), _photon_projector(p2)
        return estimate_joint(s.ensemble, obs_a, obs_b, sigma, couplings, f"P_{p1}{p2}")

    estimate = _analyze("joint", compute, pair=pair.value)
    parameters = {
        **_scenario_parameters(convention, post),
        "pair": pair.value,
        "sigma": sigma,
        "g_list": list(couplings),
    }
    _emit(
        ctx,
        "joint",
        parameters,
        estimate,
        output_format.value,
        lambda: render.joint_estimate_view(estimate),
    )


@app.command()
def strong(
    ctx: typer.Context,
    sigma: float = SIGMA_OPTION,
    convention: Convention = CONVENTION_OPTION,
    post: PostSelection = POST_OPTION,
    output_format: ReportFormat = FORMAT_OPTION,
) -> None:
    """Strong detectors next to the weak table for the same post-selection."""
    contrast = _analyze("strong", lambda: strong_contrast(build_scenario(convention, post), sigma))
    parameters = {
        **_scenario_parameters(convention, post),
        "sigma": sigma,
        "g_over_sigma": STRONG_CONTRAST_RATIO,
    }
    _emit(
        ctx,
        "strong",
        parameters,
        contrast,
        output_format.value,
        lambda: render.strong_view(contrast),
    )


@app.command()
def a12(
    ctx: typer.Context,
    gamma: float = GAMMA_OPTION,
    epsilon: float = EPSILON_OPTION,
    convention: Convention = CONVENTION_OPTION,
    post: PostSelection = POST_OPTION,
    output_format: ReportFormat = FORMAT_OPTION,
) -> None:
    """Vector operator A12 = (A2, A1) against the joint inner-inner weak value."""
    analysis = _analyze(
        "a12", lambda: a12_analysis(build_scenario(convention, post), gamma, epsilon)
    )
    parameters = {**_scenario_parameters(convention, post), "gamma": gamma, "epsilon": epsilon}
    _emit(
        ctx, "a12", parameters, analysis, output_format.value, lambda: render.a12_view(analysis)
    )


@app.command()
def narrative(
    ctx: typer.Context,
    convention: Convention = CONVENTION_OPTION,
    post: PostSelection = POST_OPTION,
    output_format: ReportFormat = typer.Option(
        ReportFormat.TEXT, "--format", help="text narrative or json report"
    ),
) -> None:
    """The paradox in words, with the computed numbers filled in."""
    story = _analyze("narrative", lambda: ifm_narrative(build_scenario(convention, post)))
    if output_format is ReportFormat.TEXT:
        typer.echo(story.text, nl=False)
        return
    _emit(
        ctx,
        "narrative",
        _scenario_parameters(convention, post),
        story,
        output_format.value,
        lambda: story.text,
    )


@app.command()
def schema() -> None:
    """Print the JSON schema every report validates against."""
    resource = resources.files("hardy_cli").joinpath(*SCHEMA_RESOURCE)
    typer.echo(resource.read_text(encoding="utf-8"), nl=False)


@app.command()
def version() -> None:
    """Show version."""
    console.print(f"hardy-weak-values v{__version__}")


if __name__ == "__main__":
    app()
