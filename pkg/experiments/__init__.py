"""
Statistical experiments and consistency suites
"""

from .base_experiment import BaseExperiment, format_float, positive_or_default
from .trials import derive_seeds, random_lattice_points, run_trials
from .lemma2_experiment import Lemma2Experiment, Lemma2Row, flag_summary, lemma2_monte_carlo
from .scaling_experiment import (
    ScalingExperiment,
    ScalingRow,
    consecutive_ratios,
    n_log_n,
    scaling_ratio_spread,
    work_scaling,
)
from .profile_experiment import (
    DecileSummary,
    ProfileExperiment,
    ProfileRow,
    decile_means,
    fit_profile_constant,
    is_decreasing_trend,
    per_iteration_profile,
    profile_violations,
)
from .experiment_manager import BenchResult, ExperimentManager, Verdict
from .consistency_checks import CheckReport, ConsistencyChecker, SuiteResult, run_checks

__all__ = [
    "BaseExperiment",
    "format_float",
    "positive_or_default",
    "derive_seeds",
    "random_lattice_points",
    "run_trials",
    "Lemma2Experiment",
    "Lemma2Row",
    "flag_summary",
    "lemma2_monte_carlo",
    "ScalingExperiment",
    "ScalingRow",
    "consecutive_ratios",
    "n_log_n",
    "scaling_ratio_spread",
    "work_scaling",
    "DecileSummary",
    "ProfileExperiment",
    "ProfileRow",
    "decile_means",
    "fit_profile_constant",
    "is_decreasing_trend",
    "per_iteration_profile",
    "profile_violations",
    "BenchResult",
    "ExperimentManager",
    "Verdict",
    "CheckReport",
    "ConsistencyChecker",
    "SuiteResult",
    "run_checks",
]
