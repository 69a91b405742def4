"""Optional OpenTelemetry spans, one per CLI analysis.

Off unless ``HARDY_OTEL_EXPORTER`` says otherwise. OpenTelemetry is imported
lazily, so a default run never loads it, and the console exporter writes to
stderr to keep stdout reports byte-stable.
"""

from __future__ import annotations

import sys
import time
from collections.abc import Iterator
from contextlib import contextmanager
from typing import TYPE_CHECKING, Any

import structlog

if TYPE_CHECKING:
    from hardy_core.config.settings import Settings

logger = structlog.get_logger()

INSTRUMENTATION_NAME = "hardy-weak-values"

_tracer: Any = None


def _install(service_name: str, processor: Any, *, set_global: bool) -> None:  # noqa: ANN401
    global _tracer

    from opentelemetry.sdk.resources import Resource
    from opentelemetry.sdk.trace import TracerProvider

    provider = TracerProvider(resource=Resource.create({"service.name": service_name}))
    provider.add_span_processor(processor)
    if set_global:
        from opentelemetry import trace

        trace.set_tracer_provider(provider)
    _tracer = provider.get_tracer(INSTRUMENTATION_NAME)


def _span_processor(settings: Settings) -> Any:  # noqa: ANN401
    if settings.otel_exporter == "console":
        from opentelemetry.sdk.trace.export import ConsoleSpanExporter, SimpleSpanProcessor

        return SimpleSpanProcessor(ConsoleSpanExporter(out=sys.stderr))

    from opentelemetry.exporter.otlp.proto.grpc.trace_exporter import OTLPSpanExporter
    from opentelemetry.sdk.trace.export import BatchSpanProcessor

    return BatchSpanProcessor(OTLPSpanExporter(endpoint=settings.otel_endpoint))


def configure_tracing(settings: Settings) -> None:
    """Enable the exporter named in settings, or leave tracing off for 'none'."""
    global _tracer

    if settings.otel_exporter == "none":
        _tracer = None
        return
    _install(settings.otel_service_name, _span_processor(settings), set_global=True)
    logger.info("tracing_configured", exporter=settings.otel_exporter)


def configure_tracing_with_exporter(service_name: str, exporter: Any) -> None:  # noqa: ANN401
    """Send spans synchronously to ``exporter``; the global provider is left alone.

    Tests pass an InMemorySpanExporter here.
    """
    from opentelemetry.sdk.trace.export import SimpleSpanProcessor

    _install(service_name, SimpleSpanProcessor(exporter), set_global=False)


def disable_tracing() -> None:
    global _tracer
    _tracer = None


def get_tracer() -> Any:  # noqa: ANN401
    """The active tracer, or None while tracing is off."""
    return _tracer


@contextmanager
def trace_analysis(name: str, **attributes: str | float | int | bool) -> Iterator[Any]:
    """Span ``analysis.<name>`` with the flags as attributes; yields None when off.

    The span records ``analysis.status`` (ok or error), the error message and
    the wall time of the analysis.
    """
    if _tracer is None:
        yield None
        return

    with _tracer.start_as_current_span(f"analysis.{name}") as span:
        span.set_attribute("analysis.name", name)
        for key, value in attributes.items():
            span.set_attribute(f"analysis.{key}", value)
        started = time.perf_counter()
        status = "error"
        try:
            yield span
            status = "ok"
        except Exception as exc:
            span.set_attribute("analysis.error", str(exc))
            span.set_attribute("analysis.error_type", type(exc).__name__)
            raise
        finally:
            span.set_attribute("analysis.status", status)
            span.set_attribute("analysis.duration_seconds", time.perf_counter() - started)
