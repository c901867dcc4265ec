"""
Per-iteration work profile: mean k_i against the 4n/i reference curve
"""
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

DECILES = 10


@dataclass
class ProfileRow:
    i: int
    mean_k: float
    n: int

    @property
    def reference(self) -> float:
        return 4.0 * self.n / self.i


@dataclass
class DecileSummary:
    """Averages over one tenth of the iterations"""
    first_i: int
    last_i: int
    mean_k: float
    mean_reference: float

    @property
    def envelope(self) -> float:
        """Mean of 1 + 4n/i over the decile"""
        return 1.0 + self.mean_reference


def _profile_trial(job: Tuple[int, GeometryConfig, int]) -> List[int]:
    n, geometry, seed = job
    point_seed, build_seed = derive_seeds(seed, 2)
    points = random_lattice_points(n, geometry, point_seed)
    _, stats = build(points, BuildConfig(seed=build_seed, geometry=geometry))
    return stats.k_values()


class ProfileExperiment(BaseExperiment):
    """Mean displaced-point count per iteration over random inputs"""

    def __init__(self, seed: int, geometry: GeometryConfig, n: Optional[int] = None,
                 trials: Optional[int] = None):
        super().__init__("Profile", "profile.csv", seed, geometry)
        self.n = positive_or_default("n", n, config.PROFILE_N)
        self.trials = positive_or_default("trials", trials, config.PROFILE_TRIALS)

    @property
    def fieldnames(self) -> List[str]:
        return ["i", "mean_k", "reference_4n_over_i"]

    def get_description(self) -> str:
        return f"Mean k_i per iteration for n={self.n} over {self.trials} trial(s)"

    @track_performance("experiment", "profile")
    def run(self) -> List[ProfileRow]:
        logger.info(f"{self.name}: {self.get_description()}")
        jobs = [(self.n, self.geometry, s) for s in derive_seeds(self.seed, self.trials)]
        ks = np.asarray(run_trials(_profile_trial, jobs, description="profile"), dtype=np.float64)
        means = ks.reshape(self.trials, self.n).mean(axis=0)
        return [ProfileRow(i, float(m), self.n) for i, m in enumerate(means.tolist(), 1)]

    def row_to_dict(self, row: ProfileRow) -> Dict[str, Any]:
        return {
            "i": row.i,
            "mean_k": format_float(row.mean_k),
            "reference_4n_over_i": format_float(row.reference),
        }


def decile_means(profile: Sequence[ProfileRow], buckets: int = DECILES) -> List[DecileSummary]:
    """Split iterations into ``buckets`` contiguous groups and average each"""
    summaries = []
    for chunk in np.array_split(np.arange(len(profile)), min(buckets, len(profile))):
        rows = [profile[j] for j in chunk.tolist()]
        summaries.append(DecileSummary(
            first_i=rows[0].i,
            last_i=rows[-1].i,
            mean_k=float(np.mean([r.mean_k for r in rows])),
            mean_reference=float(np.mean([r.reference for r in rows])),
        ))
    return summaries


def fit_profile_constant(profile: Sequence[ProfileRow]) -> float:
    """Smallest c with decile mean k <= c * (1 + 4n/i) on this profile"""
    return max(d.mean_k / d.envelope for d in decile_means(profile))


def profile_violations(profile: Sequence[ProfileRow], c: float,
                       slack: float = 1.5) -> List[DecileSummary]:
    """Deciles whose mean k exceeds slack * c * (1 + 4n/i)"""
    return [d for d in decile_means(profile) if d.mean_k > slack * c * d.envelope]


def is_decreasing_trend(profile: Sequence[ProfileRow], tolerance: float = 0.1) -> bool:
    """Decile means never rise by more than ``tolerance`` of the previous decile"""
    means = [d.mean_k for d in decile_means(profile)]
    return all(b <= a * (1.0 + tolerance) for a, b in zip(means, means[1:]))


def per_iteration_profile(n: int, trials: int, seed: int,
                          geometry: Optional[GeometryConfig] = None) -> List[ProfileRow]:
    return ProfileExperiment(seed, geometry or GeometryConfig(), n=n, trials=trials).run()
