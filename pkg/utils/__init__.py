"""
Utilities package: logging, timing, point files and rendering
"""

from .logger_setup import setup_logger
from .performance_monitor import PerformanceMonitor, performance_monitor, track_performance

__all__ = [
    "setup_logger",
    "PerformanceMonitor",
    "performance_monitor",
    "track_performance",
]
