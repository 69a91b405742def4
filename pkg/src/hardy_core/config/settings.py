"""Diagnostics settings read from ``HARDY_*`` environment variables.

Nothing here reaches stdout: logging and tracing both write to stderr, and
every number in a report comes from a CLI flag.
"""

from __future__ import annotations

from typing import Literal

from pydantic import Field, field_validator, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Logging and tracing configuration for the ``hardy-weak`` CLI."""

    model_config = SettingsConfigDict(env_prefix="HARDY_")

    log_format: Literal["json", "console"] = Field(
        default="console",
        description="stderr log renderer: 'console' for people, 'json' for log shippers",
    )
    log_level: str = Field(
        default="WARNING",
        description="stdlib level name; WARNING keeps successful runs silent",
    )
    otel_exporter: Literal["none", "console", "otlp"] = Field(
        default="none",
        description="Span exporter: 'none' (off), 'console' (stderr) or 'otlp'",
    )
    otel_endpoint: str = Field(
        default="http://localhost:4317",
        description="OTLP collector endpoint, used when otel_exporter='otlp'",
    )
    otel_service_name: str = Field(
        default="hardy-weak-values",
        description="service.name resource attribute on exported spans",
    )

    @field_validator("log_level")
    @classmethod
    def normalize_level(cls, value: str) -> str:
        return value.strip().upper()

    @model_validator(mode="after")
    def validate_tracing_config(self) -> Settings:
        """An OTLP exporter needs somewhere to send spans."""
        if self.otel_exporter == "otlp" and not self.otel_endpoint:
            msg = "otel_endpoint required when otel_exporter=otlp"
            raise ValueError(msg)
        return self
