"""
OpenTelemetry spans and counters for the slow computations.

Symmetry censuses, canonical labeling, characteristic polynomials and every
verification claim run inside spans so slow steps can be located. Telemetry is
off by default; without the opentelemetry packages every helper is a no-op.

Usage:
    from special_forms.telemetry import init_telemetry, trace_operation

    init_telemetry(config)

    with trace_operation("census.orthogonal", {"dim": 8}):
        census = enumerate_orthogonal_census(phi)
"""

import logging
import time
from contextlib import contextmanager
from functools import wraps
from typing import Any, Callable, Dict, Iterator, Optional

from .config_loader import FormsConfig, load_config

logger = logging.getLogger(__name__)

_state: Dict[str, Any] = {"tracer": None, "meter": None, "counters": {}}


def _providers(config: FormsConfig, service_name: str):
    from opentelemetry.sdk.metrics import MeterProvider
    from opentelemetry.sdk.resources import Resource
    from opentelemetry.sdk.trace import TracerProvider

    resource = Resource.create({
        "service.name": service_name,
        "forms.profile": config.profile or "base",
    })
    tracer_provider = TracerProvider(resource=resource)
    if config.telemetry.console_export:
        from opentelemetry.sdk.trace.export import ConsoleSpanExporter, SimpleSpanProcessor
        tracer_provider.add_span_processor(SimpleSpanProcessor(ConsoleSpanExporter()))
    return tracer_provider, MeterProvider(resource=resource)


def init_telemetry(config: Optional[FormsConfig] = None, service_name: str = "special-forms") -> bool:
    """
    Switch tracing on when the configuration asks for it.

    Installs global tracer and meter providers (spans go to the console when
    telemetry.console_export is set). Only the first successful call has an
    effect.

    Returns:
        True if spans are being recorded after the call
    """
    if is_enabled():
        return True

    try:
        config = config or load_config(validate=False)
    except (FileNotFoundError, ValueError) as e:
        logger.warning(f"Telemetry left off, configuration unavailable: {e}")
        return False

    if not config.telemetry.enabled:
        logger.debug("Telemetry disabled in configuration")
        return False

    try:
        from opentelemetry import metrics, trace

        tracer_provider, meter_provider = _providers(config, service_name)
    except ImportError as e:
        logger.warning(f"Telemetry requested but opentelemetry-sdk is missing ({e})")
        return False

    trace.set_tracer_provider(tracer_provider)
    metrics.set_meter_provider(meter_provider)
    _state["tracer"] = trace.get_tracer("special_forms")
    _state["meter"] = metrics.get_meter("special_forms")
    logger.info(f"Telemetry on for {service_name} (profile {config.profile or 'base'})")
    return True


@contextmanager
def trace_operation(name: str, attributes: Optional[Dict[str, Any]] = None) -> Iterator[Any]:
    """
    Run a block inside a span named `name`.

    Attribute values are stored as strings. The span records its wall time in
    `elapsed_s` and is marked as an error when the block raises.

    Yields:
        The span, or None when telemetry is off
    """
    tracer = _state["tracer"]
    if tracer is None:
        yield None
        return

    from opentelemetry.trace import Status, StatusCode

    with tracer.start_as_current_span(name) as span:
        for key, value in (attributes or {}).items():
            span.set_attribute(key, str(value))
        start = time.perf_counter()
        try:
            yield span
        except Exception as e:
            span.record_exception(e)
            span.set_status(Status(StatusCode.ERROR, f"{type(e).__name__}: {e}"))
            raise
        finally:
            span.set_attribute("elapsed_s", round(time.perf_counter() - start, 6))


def _describe_arguments(args: tuple, kwargs: Dict[str, Any]) -> Dict[str, Any]:
    # forms are summarised as degree/dimension and weight, integers kept as is
    out: Dict[str, Any] = {}
    named = [(f"arg{i}", v) for i, v in enumerate(args)] + list(kwargs.items())
    for key, value in named:
        if hasattr(value, "degree") and hasattr(value, "dim") and hasattr(value, "weight"):
            out[f"{key}.form"] = f"{value.degree}/{value.dim}"
            out[f"{key}.weight"] = value.weight
        elif isinstance(value, int) and not isinstance(value, bool):
            out[key] = value
    return out


def trace_function(name: Optional[str] = None) -> Callable:
    """Decorator form of trace_operation; form arguments become span attributes."""
    def decorator(func: Callable) -> Callable:
        span_name = name or f"{func.__module__}.{func.__qualname__}"

        @wraps(func)
        def wrapper(*args, **kwargs):
            if _state["tracer"] is None:
                return func(*args, **kwargs)
            with trace_operation(span_name, _describe_arguments(args, kwargs)):
                return func(*args, **kwargs)

        return wrapper
    return decorator


def record_metric(name: str, value: float, attributes: Optional[Dict[str, str]] = None) -> None:
    """Add `value` to the counter `name`, creating it on first use."""
    meter = _state["meter"]
    if meter is None:
        return

    counters = _state["counters"]
    if name not in counters:
        counters[name] = meter.create_counter(name=name, description=f"special_forms {name}")
    counters[name].add(value, attributes or {})


def is_enabled() -> bool:
    return _state["tracer"] is not None
