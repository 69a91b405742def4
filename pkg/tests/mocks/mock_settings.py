"""Settings stand-ins for observability tests."""

from __future__ import annotations

from types import SimpleNamespace


def make_settings(**overrides: object) -> SimpleNamespace:
    """Minimal attribute bag with every field configure_logging/tracing reads."""
    defaults: dict[str, object] = {
        "log_format": "console",
        "log_level": "INFO",
        "otel_exporter": "none",
        "otel_endpoint": "http://localhost:4317",
        "otel_service_name": "hardy-weak-values-test",
    }
    defaults.update(overrides)
    return SimpleNamespace(**defaults)
