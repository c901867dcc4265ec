import pytest

from utils.performance_monitor import PerformanceMonitor, performance_monitor, track_performance


def test_track_call_accumulates():
    monitor = PerformanceMonitor()
    monitor.track_call("build", "insert", 0.5)
    monitor.track_call("build", "insert", 1.5, success=False)
    metric = monitor.metrics["build"]["insert"]
    assert metric["calls"] == 2
    assert metric["failures"] == 1
    assert metric["average_time"] == pytest.approx(1.0)
    assert "build:" in monitor.get_performance_summary()

    monitor.reset()
    assert monitor.metrics == {}


def test_decorator_records_failures():
    performance_monitor.reset()

    @track_performance("test", "boom")
    def boom():
        raise RuntimeError("x")

    with pytest.raises(RuntimeError):
        boom()
    assert performance_monitor.metrics["test"]["boom"]["failures"] == 1
    performance_monitor.reset()
