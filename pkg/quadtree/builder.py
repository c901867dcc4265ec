"""
Randomized incremental construction with conflict lists

Every point starts in the root's conflict list. Iteration i takes the next
point of a seeded random permutation, finds its node through the stored
back-pointer, inserts it, and moves the displaced conflict points to the
few tiles the insertion created. Iteration i costs O(1 + k_i) where k_i is
the number of displaced points.
"""
from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np
from loguru import logger
from pydantic import BaseModel, ConfigDict, Field

from geometry import GeometryConfig, ingest_points
from utils.performance_monitor import track_performance
from .restructure import RestructureReport, insert, redistribute
from .tree import CompressedQuadtree

Observer = Callable[[CompressedQuadtree, int, RestructureReport], None]


class BuildConfig(BaseModel):
    """Seed, geometry and instrumentation switches of one build"""
    model_config = ConfigDict(frozen=True)

    seed: int = Field(default=0, ge=0, lt=2 ** 64)
    geometry: GeometryConfig = Field(default_factory=GeometryConfig)
    collect_stats: bool = True


@dataclass
class IterationRecord:
    i: int
    k: int
    nodes_created: int
    case: str


@dataclass
class BuildStats:
    """Per-iteration work record; k_i is the conflict-list size of v_i minus p_i"""
    records: List[IterationRecord] = field(default_factory=list)
    total_conflicts: int = 0
    total_nodes: int = 0
    max_depth: int = 0

    def record(self, i: int, k: int, report: RestructureReport) -> None:
        self.records.append(IterationRecord(i, k, report.nodes_created, report.case.value))
        self.total_conflicts += k

    @property
    def iterations(self) -> int:
        return len(self.records)

    @property
    def total_work(self) -> int:
        """Sum over iterations of (1 + k_i)"""
        return self.iterations + self.total_conflicts

    @property
    def max_nodes_created(self) -> int:
        return max((r.nodes_created for r in self.records), default=0)

    def k_values(self) -> List[int]:
        return [r.k for r in self.records]

    def case_counts(self) -> Dict[str, int]:
        return dict(sorted(Counter(r.case for r in self.records).items()))

    def summary(self) -> Dict[str, Any]:
        return {
            "n": self.iterations,
            "nodes": self.total_nodes,
            "max_depth": self.max_depth,
            "total_work": self.total_work,
            "max_nodes_per_insert": self.max_nodes_created,
        }


def shuffle(points: Sequence, seed: int) -> list:
    """Fisher-Yates shuffle driven by numpy's PCG64 generator

    The swap targets are drawn in one vectorized call, j-th draw uniform in
    [0, j], so the permutation depends only on (len(points), seed).
    """
    items = list(points)
    n = len(items)
    if n < 2:
        return items
    rng = np.random.Generator(np.random.PCG64(seed))
    draws = rng.integers(0, np.arange(n, 1, -1, dtype=np.int64))
    for j, r in zip(range(n - 1, 0, -1), draws.tolist()):
        items[j], items[r] = items[r], items[j]
    return items


@track_performance("build", "ric_build")
def build(points: Sequence, cfg: Optional[BuildConfig] = None,
          observer: Optional[Observer] = None) -> Tuple[CompressedQuadtree, BuildStats]:
    """Build the canonical compressed quadtree of ``points`` incrementally"""
    cfg = cfg or BuildConfig()
    qpoints = ingest_points(points, cfg.geometry)

    T = CompressedQuadtree(cfg.geometry)
    T.register(qpoints)
    stats = BuildStats()

    for i, p in enumerate(shuffle(qpoints, cfg.seed), 1):
        v = T.point_locations[p.id]
        k = len(v.conflict_list) - 1
        report = insert(T, v, p)
        redistribute(T, report, report.conflicts)
        if cfg.collect_stats:
            stats.record(i, k, report)
        if observer is not None:
            observer(T, i, report)

    if cfg.collect_stats:
        stats.total_nodes = T.node_count
        stats.max_depth = T.max_depth()

    logger.debug(
        f"Built tree: {len(qpoints)} points, {T.node_count} nodes, seed {cfg.seed}"
        + (f", cases {stats.case_counts()}" if cfg.collect_stats else "")
    )
    return T, stats
