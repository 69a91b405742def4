"""structlog setup for diagnostics on stderr.

stdout belongs to reports, so every handler installed here writes to stderr.
Event values may be numpy scalars, arrays or complex numbers; they are turned
into plain JSON-friendly values before rendering.
"""

from __future__ import annotations

import logging
import sys
from typing import TYPE_CHECKING, Any

import numpy as np
import structlog
from structlog.contextvars import bind_contextvars, clear_contextvars, merge_contextvars

if TYPE_CHECKING:
    from collections.abc import MutableMapping

    from hardy_core.config.settings import Settings

# Third-party loggers that stay at WARNING even under --verbose
QUIET_LOGGERS = ("opentelemetry", "grpc")


def _plain(value: Any) -> Any:  # noqa: ANN401
    if isinstance(value, np.ndarray):
        return _plain(value.tolist())
    if isinstance(value, np.generic):
        return _plain(value.item())
    if isinstance(value, complex):
        return [value.real + 0.0, value.imag + 0.0]
    if isinstance(value, list | tuple):
        return [_plain(v) for v in value]
    return value


def plain_numbers(
    _logger: Any,  # noqa: ANN401
    _method: str,
    event_dict: MutableMapping[str, Any],
) -> MutableMapping[str, Any]:
    """Processor: numpy values become Python numbers, complex becomes [re, im]."""
    for key, value in event_dict.items():
        event_dict[key] = _plain(value)
    return event_dict


def _renderer(log_format: str) -> structlog.types.Processor:
    if log_format == "json":
        return structlog.processors.JSONRenderer(sort_keys=True)
    return structlog.dev.ConsoleRenderer(colors=False)


def configure_logging(settings: Settings) -> None:
    """Route structlog and stdlib logging through one stderr handler.

    Reconfiguring replaces the previous handler, so repeated CLI invocations
    in one process never duplicate output.
    """
    chain: list[structlog.types.Processor] = [
        merge_contextvars,
        structlog.stdlib.add_log_level,
        structlog.processors.TimeStamper(fmt="iso"),
        structlog.processors.StackInfoRenderer(),
        structlog.processors.UnicodeDecoder(),
        plain_numbers,
    ]
    structlog.configure(
        processors=[*chain, structlog.stdlib.ProcessorFormatter.wrap_for_formatter],
        logger_factory=structlog.stdlib.LoggerFactory(),
        wrapper_class=structlog.stdlib.BoundLogger,
        cache_logger_on_first_use=False,
    )

    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(
        structlog.stdlib.ProcessorFormatter(
            processors=[
                structlog.stdlib.ProcessorFormatter.remove_processors_meta,
                _renderer(settings.log_format),
            ],
            foreign_pre_chain=chain,
        )
    )
    level = _resolve_level(settings.log_level)
    root = logging.getLogger()
    root.handlers.clear()
    root.addHandler(handler)
    root.setLevel(level)
    for name in QUIET_LOGGERS:
        logging.getLogger(name).setLevel(max(level, logging.WARNING))


def bind_command_context(command: str) -> None:
    """Tag every later log line with the running subcommand."""
    bind_contextvars(command=command)


def clear_command_context() -> None:
    clear_contextvars()


def _resolve_level(level_name: str) -> int:
    """Standard level name to its number; anything unknown means WARNING."""
    level = logging.getLevelNamesMapping().get(level_name.upper())
    return level if level is not None else logging.WARNING
