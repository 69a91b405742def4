"""Choice enums and flag parsers shared by the subcommands."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import StrEnum

import typer

from hardy_analysis.pointer import check_schedule
from hardy_core.constants import DEFAULT_G_LIST
from hardy_core.exceptions import CouplingScheduleError

DEFAULT_G_LIST_TEXT = ",".join(f"{g:g}" for g in DEFAULT_G_LIST)


@dataclass
class CliOptions:
    """Global options carried on ``ctx.obj``."""

    timestamp: bool = False


class LogFormat(StrEnum):
    CONSOLE = "console"
    JSON = "json"


class ReportFormat(StrEnum):
    JSON = "json"
    TEXT = "text"


class TableFormat(StrEnum):
    JSON = "json"
    TSV = "tsv"
    TEXT = "text"


class ObservableChoice(StrEnum):
    """Single-pointer observables: arm projectors per photon, or A1/A2."""

    PV1 = "pv1"
    PH1 = "ph1"
    PV2 = "pv2"
    PH2 = "ph2"
    A1 = "a1"
    A2 = "a2"

    @property
    def site(self) -> int:
        return int(self.value[-1])

    @property
    def polarization(self) -> str | None:
        """'V' or 'H' for projectors, None for A1/A2."""
        return self.value[1].upper() if self.value.startswith("p") else None


class PairChoice(StrEnum):
    """Photon-1 and photon-2 polarizations of a joint projector."""

    VV = "vv"
    HH = "hh"
    VH = "vh"
    HV = "hv"


class PrepMode(StrEnum):
    FLAWED = "flawed"
    CORRECT = "correct"
    COMPARE = "compare"


def parse_g_list(value: str) -> tuple[float, ...]:
    """Comma-separated couplings, positive and strictly decreasing."""
    parts = [part.strip() for part in value.split(",")]
    if not value.strip() or not all(parts):
        msg = f"expected comma-separated couplings such as {DEFAULT_G_LIST_TEXT}, got {value!r}"
        raise typer.BadParameter(msg, param_hint="'--g-list'")
    try:
        couplings = [float(part) for part in parts]
    except ValueError as exc:
        msg = f"non-numeric coupling in {value!r}"
        raise typer.BadParameter(msg, param_hint="'--g-list'") from exc
    try:
        return check_schedule(couplings)
    except CouplingScheduleError as exc:
        raise typer.BadParameter(str(exc), param_hint="'--g-list'") from exc


def finite(value: float) -> float:
    if not math.isfinite(value):
        msg = f"must be finite, got {value}"
        raise typer.BadParameter(msg)
    return value


def positive(value: float) -> float:
    if not (math.isfinite(value) and value > 0.0):
        msg = f"must be finite and positive, got {value}"
        raise typer.BadParameter(msg)
    return value
