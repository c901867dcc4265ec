"""
Performance monitoring utility for timing builds, oracle runs and experiments
"""
import time
from typing import Any, Callable, Dict
from functools import wraps
from loguru import logger


class PerformanceMonitor:
    """Monitor and track wall-clock timings per operation category"""

    def __init__(self):
        self.metrics: Dict[str, Dict[str, Dict[str, Any]]] = {}
        self.start_time = time.time()

    def track_call(self, category: str, name: str, duration: float, success: bool = True):
        """Track one timed call"""
        bucket = self.metrics.setdefault(category, {})
        if name not in bucket:
            bucket[name] = {
                "calls": 0,
                "total_time": 0.0,
                "successes": 0,
                "failures": 0,
                "average_time": 0.0
            }

        metric = bucket[name]
        metric["calls"] += 1
        metric["total_time"] += duration

        if success:
            metric["successes"] += 1
        else:
            metric["failures"] += 1

        metric["average_time"] = metric["total_time"] / metric["calls"]

    def reset(self):
        self.metrics = {}
        self.start_time = time.time()

    def get_performance_summary(self) -> str:
        """Get a formatted performance summary"""
        uptime = time.time() - self.start_time
        lines = [f"Performance summary ({uptime:.1f}s elapsed)"]

        for category in sorted(self.metrics):
            lines.append(f"  {category}:")
            for name, metric in sorted(self.metrics[category].items()):
                success_rate = (metric["successes"] / metric["calls"]) * 100 if metric["calls"] > 0 else 0
                lines.append(
                    f"    {name}: {metric['calls']} call(s), {metric['total_time']:.3f}s total, "
                    f"{metric['average_time'] * 1000:.3f}ms avg ({success_rate:.1f}% success)"
                )

        return "\n".join(lines)

    def log_summary(self):
        logger.info(self.get_performance_summary())


# Global performance monitor instance
performance_monitor = PerformanceMonitor()


def track_performance(operation_type: str, name: str):
    """Decorator to track performance of functions"""
    def decorator(func: Callable):
        @wraps(func)
        def wrapper(*args, **kwargs):
            start_time = time.perf_counter()
            success = True

            try:
                return func(*args, **kwargs)
            except Exception:
                success = False
                raise
            finally:
                duration = time.perf_counter() - start_time
                performance_monitor.track_call(operation_type, name, duration, success)

        return wrapper
    return decorator
