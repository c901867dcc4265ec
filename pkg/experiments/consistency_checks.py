"""
Pass/fail suites run against one point set
"""
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Sequence

from loguru import logger

from config import config
from geometry import GeometryConfig, QuantizedPoint
from quadtree import (
    MAX_NEW_NODES,
    BuildConfig,
    DefiningSetSearch,
    TileFamily,
    build,
    build_topdown,
    canonical_serialize,
    validate,
)
from utils.performance_monitor import track_performance
from .trials import derive_seeds

TRACED_MAX_POINTS = 64
TRACED_SAMPLES = 64


@dataclass
class SuiteResult:
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.name}: {self.detail}"


@dataclass
class CheckReport:
    suites: List[SuiteResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.suites)

    def lines(self) -> List[str]:
        return [s.line() for s in self.suites]


class ConsistencyChecker:
    """Runs every applicable suite; small sets also get the exhaustive searches"""

    def __init__(self, points: Sequence[QuantizedPoint], geometry: GeometryConfig,
                 seed: int = 0, trials: int = 3):
        self.points = list(points)
        self.geometry = geometry
        self.seed = seed
        if trials < 1:
            raise ValueError(f"trials must be >= 1, got {trials}")
        self.seeds = derive_seeds(seed, trials)

    def _build(self, seed: int, observer=None):
        return build(self.points, BuildConfig(seed=seed, geometry=self.geometry), observer=observer)

    def check_validate(self) -> SuiteResult:
        T, _ = self._build(self.seeds[0])
        violations = validate(T, seed=self.seed)
        for v in violations[:10]:
            logger.error(f"validate: {v}")
        return SuiteResult("Validate", not violations,
                           f"{T.node_count} nodes, {len(violations)} violation(s)")

    def check_oracle_and_budget(self) -> List[SuiteResult]:
        expected = canonical_serialize(build_topdown(self.points, self.geometry))
        mismatched = []
        worst = 0
        for s in self.seeds:
            T, stats = self._build(s)
            if canonical_serialize(T) != expected:
                mismatched.append(s)
            worst = max(worst, stats.max_nodes_created)
        for s in mismatched:
            logger.error(f"oracle: serialization differs from top-down build for seed {s}")
        return [
            SuiteResult("Oracle equivalence", not mismatched,
                        f"{len(self.seeds) - len(mismatched)}/{len(self.seeds)} seed(s) byte-identical"),
            SuiteResult("Node budget", worst <= MAX_NEW_NODES,
                        f"max new nodes per insertion = {worst} ≤ {MAX_NEW_NODES}"),
        ]

    def check_traced(self) -> SuiteResult:
        """Validate after every insertion of one build"""
        failures: List[str] = []

        def observe(T, i, report):
            for v in validate(T, samples=TRACED_SAMPLES, seed=i):
                failures.append(f"after insertion {i}: {v}")

        self._build(self.seeds[0], observer=observe)
        for f in failures[:10]:
            logger.error(f"traced: {f}")
        return SuiteResult("Traced invariants", not failures,
                           f"{len(self.points)} insertion(s), {len(failures)} violation(s)")

    def check_defining_sets(self) -> SuiteResult:
        bound = config.DEFINING_SET_BOUND
        search = DefiningSetSearch(self.points, self.geometry, TileFamily.ELEMENTARY)
        worst, failures = search.max_defining_size(bound)
        for f in failures:
            logger.error(f"Lemma 1: tile {f.label()} has no defining set of size ≤ {bound}")
        detail = f"max defining-set size = {worst} ≤ {bound}"
        if failures:
            detail = f"{len(failures)} tile(s) without a defining set of size ≤ {bound}"
        return SuiteResult("Lemma 1", not failures, detail)

    def residual_maximum(self) -> SuiteResult:
        """Informational only: residual tiles may need more than four points"""
        search = DefiningSetSearch(self.points, self.geometry, TileFamily.RESIDUAL)
        worst, _ = search.max_defining_size(k_max=None)
        return SuiteResult("Residual tiles", True, f"max defining-set size = {worst}")

    def check_intersections(self) -> SuiteResult:
        bound = config.DEFINING_SET_BOUND
        search = DefiningSetSearch(self.points, self.geometry, TileFamily.ELEMENTARY)
        worst = 0
        for f in sorted(search.tiles):
            worst = max(worst, len(search.intersection(f)))
        return SuiteResult("Defining-set intersection", worst <= bound,
                           f"max |Z| = {worst} ≤ {bound}" if worst <= bound else f"max |Z| = {worst} > {bound}")

    @track_performance("check", "consistency")
    def run(self) -> CheckReport:
        report = CheckReport()
        n = len(self.points)
        suites: List[Callable[[], object]] = [self.check_validate, self.check_oracle_and_budget]
        if n <= TRACED_MAX_POINTS:
            suites.append(self.check_traced)
        if n <= config.LEMMA1_MAX_POINTS:
            suites.extend([self.check_defining_sets, self.residual_maximum])
        if n <= config.INTERSECTION_MAX_POINTS:
            suites.append(self.check_intersections)

        for suite in suites:
            outcome = suite()
            report.suites.extend(outcome if isinstance(outcome, list) else [outcome])

        logger.info(f"Checks: {sum(s.passed for s in report.suites)}/{len(report.suites)} suite(s) passed")
        return report


def run_checks(points: Sequence[QuantizedPoint], geometry: GeometryConfig,
               seed: int = 0, trials: Optional[int] = None) -> CheckReport:
    return ConsistencyChecker(points, geometry, seed, 3 if trials is None else trials).run()
