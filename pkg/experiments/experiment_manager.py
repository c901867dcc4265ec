"""
Experiment Manager for running the benchmark suite and judging its outcomes
"""
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Union

from loguru import logger

from config import config
from geometry import GeometryConfig
from .base_experiment import BaseExperiment, positive_or_default
from .lemma2_experiment import Lemma2Experiment, flag_summary
from .profile_experiment import (
    ProfileExperiment,
    fit_profile_constant,
    is_decreasing_trend,
    profile_violations,
)
from .scaling_experiment import ScalingExperiment, scaling_ratio_spread
from .trials import derive_seeds

MAX_FLAG_RATE = 0.01
MAX_SCALING_SPREAD = 1.5
PROFILE_SLACK = 1.5


@dataclass
class Verdict:
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"{self.name}: {'PASS' if self.passed else 'FAIL'} ({self.detail})"


@dataclass
class BenchResult:
    paths: Dict[str, Path] = field(default_factory=dict)
    verdicts: List[Verdict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(v.passed for v in self.verdicts)


class ExperimentManager:
    """Builds the three experiments from one seed and writes their CSVs"""

    def __init__(self, ns: Sequence[int], seed: int, geometry: Optional[GeometryConfig] = None,
                 trials: Optional[int] = None, lemma2_trials: Optional[int] = None,
                 lemma2_points: Optional[int] = None, profile_n: Optional[int] = None,
                 profile_trials: Optional[int] = None):
        self.geometry = geometry or GeometryConfig()
        self.ns = sorted(ns)
        lemma2_seed, scaling_seed, fit_seed, profile_seed = derive_seeds(seed, 4)
        self.profile_trials = positive_or_default("profile_trials", profile_trials, config.PROFILE_TRIALS)

        self.lemma2 = Lemma2Experiment(lemma2_seed, self.geometry, trials=lemma2_trials,
                                       n_points=lemma2_points)
        self.scaling = ScalingExperiment(self.ns, scaling_seed, self.geometry, trials=trials)
        self.profile = ProfileExperiment(profile_seed, self.geometry, n=profile_n,
                                         trials=self.profile_trials)
        # c is fit on the smallest size and then held fixed
        self.profile_fit = ProfileExperiment(fit_seed, self.geometry, n=self.ns[0],
                                             trials=self.profile_trials)
        self.experiments: List[BaseExperiment] = [self.scaling, self.profile, self.lemma2]
        logger.info(f"Initialized ExperimentManager with {len(self.experiments)} experiments")

    def get_available_experiments(self) -> Dict[str, str]:
        return {e.name: e.get_description() for e in self.experiments}

    def run(self, out_dir: Union[str, Path]) -> BenchResult:
        """Run every experiment, write its CSV under ``out_dir``, and judge it"""
        result = BenchResult()
        for name, description in self.get_available_experiments().items():
            logger.info(f"Running {name}: {description}")

        scaling_rows = self.scaling.run()
        result.paths["scaling"] = self.scaling.write_csv(scaling_rows, out_dir)
        spread = scaling_ratio_spread(scaling_rows)
        result.verdicts.append(Verdict(
            "Theorem scaling", spread < MAX_SCALING_SPREAD,
            f"max consecutive ratio {spread:.3f}, limit {MAX_SCALING_SPREAD}"))

        c = fit_profile_constant(self.profile_fit.run())
        profile_rows = self.profile.run()
        result.paths["profile"] = self.profile.write_csv(profile_rows, out_dir)
        violations = profile_violations(profile_rows, c, PROFILE_SLACK)
        result.verdicts.append(Verdict(
            "Lemma 3 profile", not violations,
            f"c={c:.4f} fit at n={self.ns[0]}, {len(violations)} decile violation(s)"))
        result.verdicts.append(Verdict(
            "Lemma 3 trend", is_decreasing_trend(profile_rows),
            "decile means non-increasing"))

        lemma2_rows = self.lemma2.run()
        result.paths["lemma2"] = self.lemma2.write_csv(lemma2_rows, out_dir)
        eligible, flagged = flag_summary(lemma2_rows, self.lemma2.presence_floor)
        rate = flagged / eligible if eligible else 0.0
        result.verdicts.append(Verdict(
            "Lemma 2 creation", rate <= MAX_FLAG_RATE,
            f"{flagged}/{eligible} high-presence rows flagged"))

        for verdict in result.verdicts:
            if verdict.passed:
                logger.info(verdict.line())
            else:
                logger.warning(verdict.line())
        return result
