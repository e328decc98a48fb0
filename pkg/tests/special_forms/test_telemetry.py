"""
Unit tests for the telemetry helpers with tracing switched off.
"""

import sys
import unittest
from pathlib import Path

# Add project root to path for imports
project_root = Path(__file__).parent.parent.parent
sys.path.insert(0, str(project_root / 'src'))

from special_forms import telemetry
from special_forms.config_loader import FormsConfig
from special_forms.construct import kahler


class TestDisabledTelemetry(unittest.TestCase):
    """Helpers must be transparent when telemetry is not initialized."""

    def setUp(self):
        if telemetry.is_enabled():
            self.skipTest("telemetry was initialized by another test")

    def test_disabled_config(self):
        self.assertFalse(telemetry.init_telemetry(FormsConfig()))
        self.assertFalse(telemetry.is_enabled())

    def test_trace_operation_yields_none(self):
        with telemetry.trace_operation("test.operation", {"dim": 8}) as span:
            self.assertIsNone(span)

    def test_trace_operation_propagates_errors(self):
        with self.assertRaises(KeyError):
            with telemetry.trace_operation("test.failure"):
                raise KeyError("missing")

    def test_trace_function_keeps_result(self):
        @telemetry.trace_function("test.square")
        def square(x):
            """Square a number."""
            return x * x

        self.assertEqual(square(7), 49)
        self.assertEqual(square.__name__, "square")

    def test_record_metric_is_noop(self):
        telemetry.record_metric("test.counter", 1, {"status": "PASS"})


class TestSpanAttributes(unittest.TestCase):
    """Arguments of traced functions become span attributes."""

    def test_forms_and_integers(self):
        attrs = telemetry._describe_arguments((kahler(3), 2), {"k": 1, "exact": True, "name": "x"})
        self.assertEqual(attrs, {"arg0.form": "2/6", "arg0.weight": 3, "arg1": 2, "k": 1})


if __name__ == '__main__':
    unittest.main()
