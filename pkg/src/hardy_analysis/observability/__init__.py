"""Observability: structured logging and optional tracing."""

from hardy_analysis.observability.logging import (
    bind_command_context,
    clear_command_context,
    configure_logging,
)
from hardy_analysis.observability.tracing import (
    configure_tracing,
    configure_tracing_with_exporter,
    disable_tracing,
    get_tracer,
    trace_analysis,
)

__all__ = [
    "bind_command_context",
    "clear_command_context",
    "configure_logging",
    "configure_tracing",
    "configure_tracing_with_exporter",
    "disable_tracing",
    "get_tracer",
    "trace_analysis",
]
