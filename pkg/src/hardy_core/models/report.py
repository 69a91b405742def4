"""Report envelope shared by every CLI subcommand, with canonical JSON output."""

from __future__ import annotations

import json
import math
from collections.abc import Mapping
from typing import Any, Literal

from pydantic import BaseModel, Field

from hardy_core.constants import FLOAT_FORMAT, SCHEMA_VERSION

_INDENT = "  "


def format_float(value: float) -> str:
    """17 significant digits, lowercase exponent; -0.0 prints as 0, NaN/Inf as null."""
    if not math.isfinite(value):
        return "null"
    return format(value + 0.0, FLOAT_FORMAT)


def _encode(value: Any, depth: int) -> str:  # noqa: ANN401
    pad = _INDENT * (depth + 1)
    close = _INDENT * depth
    if value is None or isinstance(value, bool):
        return json.dumps(value)
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return format_float(value)
    if isinstance(value, str):
        return json.dumps(value, ensure_ascii=False)
    if isinstance(value, BaseModel):
        return _encode(value.model_dump(mode="python"), depth)
    if isinstance(value, Mapping):
        if not value:
            return "{}"
        items = [
            f"{pad}{json.dumps(str(k), ensure_ascii=False)}: {_encode(value[k], depth + 1)}"
            for k in sorted(value, key=str)
        ]
        return "{\n" + ",\n".join(items) + "\n" + close + "}"
    if isinstance(value, list | tuple):
        if not value:
            return "[]"
        if all(isinstance(v, int | float) and not isinstance(v, bool) for v in value):
            return "[" + ", ".join(_encode(v, depth) for v in value) + "]"
        items = [f"{pad}{_encode(v, depth + 1)}" for v in value]
        return "[\n" + ",\n".join(items) + "\n" + close + "]"
    msg = f"Cannot serialize {type(value).__name__}"
    raise TypeError(msg)


def canonical_json(value: Any) -> str:  # noqa: ANN401
    """Deterministic JSON: sorted keys, two-space indent, fixed float formatting."""
    return _encode(value, 0)


class Report(BaseModel):
    """Envelope printed on stdout by every analysis subcommand."""

    command: str = Field(description="Subcommand that produced the report")
    parameters: dict[str, Any] = Field(description="Flag values the command ran with")
    payload: dict[str, Any] = Field(description="Command-specific result")
    schema_version: Literal["1"] = Field(default=SCHEMA_VERSION, description="Envelope version")
    generated_at: str | None = Field(
        default=None, description="ISO timestamp, present only with --timestamp"
    )

    @classmethod
    def of(
        cls,
        command: str,
        parameters: Mapping[str, Any],
        payload: BaseModel | Mapping[str, Any],
        generated_at: str | None = None,
    ) -> Report:
        if isinstance(payload, BaseModel):
            body = payload.model_dump(mode="python")
        else:
            body = {
                key: value.model_dump(mode="python") if isinstance(value, BaseModel) else value
                for key, value in payload.items()
            }
        return cls(
            command=command,
            parameters=dict(parameters),
            payload=dict(body),
            generated_at=generated_at,
        )

    def to_json(self) -> str:
        """Canonical JSON plus newline; ``generated_at`` appears only when set."""
        exclude = {"generated_at"} if self.generated_at is None else set()
        return canonical_json(self.model_dump(mode="python", exclude=exclude)) + "\n"
