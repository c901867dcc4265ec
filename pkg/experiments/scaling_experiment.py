"""
Total construction work against n log n
"""
import math
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np
from loguru import logger

from config import config
from geometry import GeometryConfig
from quadtree import BuildConfig, build
from utils.performance_monitor import track_performance
from .base_experiment import BaseExperiment, format_float, positive_or_default
from .trials import derive_seeds, random_lattice_points, run_trials


@dataclass
class ScalingRow:
    n: int
    trials: int
    mean_total_work: float

    @property
    def normalized(self) -> float:
        return self.mean_total_work / n_log_n(self.n)


def n_log_n(n: int) -> float:
    return max(n * math.log(n), 1.0) if n > 0 else 1.0


def _scaling_trial(job: Tuple[int, GeometryConfig, int]) -> int:
    n, geometry, seed = job
    point_seed, build_seed = derive_seeds(seed, 2)
    points = random_lattice_points(n, geometry, point_seed)
    _, stats = build(points, BuildConfig(seed=build_seed, geometry=geometry))
    return stats.total_work


class ScalingExperiment(BaseExperiment):
    """Mean of sum(1 + k_i) over uniform random inputs, per n"""

    def __init__(self, ns: Sequence[int], seed: int, geometry: GeometryConfig,
                 trials: Optional[int] = None):
        super().__init__("Scaling", "scaling.csv", seed, geometry)
        if list(ns) != sorted(ns):
            raise ValueError(f"sizes must be ascending, got {list(ns)}")
        self.ns = list(ns)
        self.trials = positive_or_default("trials", trials, config.SCALING_TRIALS)

    @property
    def fieldnames(self) -> List[str]:
        return ["n", "trials", "mean_total_work", "normalized"]

    def get_description(self) -> str:
        return f"Total work / (n ln n) for n in {self.ns}, {self.trials} trial(s) each"

    @track_performance("experiment", "scaling")
    def run(self) -> List[ScalingRow]:
        logger.info(f"{self.name}: {self.get_description()}")
        rows = []
        for n, n_seed in zip(self.ns, derive_seeds(self.seed, len(self.ns))):
            jobs = [(n, self.geometry, s) for s in derive_seeds(n_seed, self.trials)]
            works = run_trials(_scaling_trial, jobs, description=f"scaling n={n}")
            row = ScalingRow(n, self.trials, float(np.mean(works)))
            logger.info(f"{self.name}: n={n} mean work {row.mean_total_work:.1f}, "
                        f"normalized {row.normalized:.4f}")
            rows.append(row)
        return rows

    def row_to_dict(self, row: ScalingRow) -> Dict[str, Any]:
        return {
            "n": row.n,
            "trials": row.trials,
            "mean_total_work": format_float(row.mean_total_work),
            "normalized": format_float(row.normalized),
        }


def consecutive_ratios(rows: Sequence[ScalingRow]) -> List[float]:
    """normalized[j+1] / normalized[j] for consecutive sizes"""
    return [b.normalized / a.normalized for a, b in zip(rows, rows[1:])]


def scaling_ratio_spread(rows: Sequence[ScalingRow]) -> float:
    """Largest factor between consecutive normalized values, in either direction"""
    return max((max(r, 1.0 / r) for r in consecutive_ratios(rows)), default=1.0)


def work_scaling(ns: Sequence[int], trials: int, seed: int,
                 geometry: Optional[GeometryConfig] = None) -> List[ScalingRow]:
    return ScalingExperiment(ns, seed, geometry or GeometryConfig(), trials=trials).run()
