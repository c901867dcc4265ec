"""
Monte Carlo estimate of how often a tile is created by the last insertion

For a fixed point set, many random insertion orders are replayed. After
each insertion i the tile set of the current tree is compared with the
one before it; a tile present now and absent before was created at step
i. Per (tile, i) the creation frequency among the trials where the tile
is present should stay below 4/i.

The tree before the first insertion is the bare root square, so at i = 1
the root square row reads created = 0.
"""
import math
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

from loguru import logger

from config import config
from geometry import GeometryConfig, QuantizedPoint, root_cell
from quadtree import BuildConfig, TileFamily, TileKey, build, tree_tiles
from utils.performance_monitor import track_performance
from .base_experiment import BaseExperiment, format_float, positive_or_default
from .trials import derive_seeds, random_lattice_points, run_trials

Lemma2Job = Tuple[List[QuantizedPoint], GeometryConfig, int, TileFamily]


@dataclass
class Lemma2Row:
    tile: TileKey
    i: int
    present_count: int
    created_count: int
    flagged: bool = False

    @property
    def bound(self) -> float:
        return 4.0 / self.i

    @property
    def freq(self) -> float:
        return self.created_count / self.present_count if self.present_count else 0.0

    def threshold(self) -> float:
        """4/i plus three binomial standard errors, with 4/i capped at 1"""
        b = min(self.bound, 1.0)
        return b + 3.0 * math.sqrt(b * (1.0 - b) / self.present_count)


def _lemma2_trial(job: Lemma2Job) -> Dict[Tuple[TileKey, int], bool]:
    """Created-flag of every (tile, i) present during one random insertion order"""
    points, geometry, seed, family = job
    seen: Dict[Tuple[TileKey, int], bool] = {}
    previous = [frozenset({TileKey(root_cell(geometry))})]

    def observe(T, i, report):
        current = tree_tiles(T, family)
        prior = previous[0]
        for key in current:
            seen[(key, i)] = key not in prior
        previous[0] = current

    build(points, BuildConfig(seed=seed, geometry=geometry, collect_stats=False), observer=observe)
    return seen


class Lemma2Experiment(BaseExperiment):
    """Creation frequency of tiles per insertion step over random permutations"""

    def __init__(self, seed: int, geometry: GeometryConfig, trials: Optional[int] = None,
                 n_points: Optional[int] = None, points: Optional[Sequence[QuantizedPoint]] = None,
                 family: TileFamily = TileFamily.ELEMENTARY, presence_floor: Optional[int] = None):
        super().__init__("Lemma2", "lemma2.csv", seed, geometry)
        self.trials = positive_or_default("trials", trials, config.LEMMA2_TRIALS)
        self.family = family
        self.presence_floor = config.LEMMA2_PRESENCE_FLOOR if presence_floor is None else presence_floor
        point_seed, self.permutation_seed = derive_seeds(seed, 2)
        if points is None:
            points = random_lattice_points(positive_or_default("n_points", n_points, config.LEMMA2_POINTS),
                                           geometry, point_seed)
        self.points = list(points)

    @property
    def fieldnames(self) -> List[str]:
        return ["tile_id", "i", "present", "created", "freq", "bound", "flagged"]

    def get_description(self) -> str:
        return (f"Creation frequency vs 4/i for {len(self.points)} points over "
                f"{self.trials} permutations ({self.family.value} tiles)")

    @track_performance("experiment", "lemma2")
    def run(self) -> List[Lemma2Row]:
        logger.info(f"{self.name}: {self.get_description()}")
        seeds = derive_seeds(self.permutation_seed, self.trials)
        jobs = [(self.points, self.geometry, s, self.family) for s in seeds]

        counts: Dict[Tuple[TileKey, int], List[int]] = {}
        for trial in run_trials(_lemma2_trial, jobs, description="lemma2"):
            for key, created in trial.items():
                entry = counts.setdefault(key, [0, 0])
                entry[0] += 1
                entry[1] += int(created)

        rows = []
        for (tile, i), (present, created) in counts.items():
            row = Lemma2Row(tile, i, present, created)
            row.flagged = present >= self.presence_floor and row.freq > row.threshold()
            rows.append(row)
        rows.sort(key=lambda r: (r.i, r.tile))

        eligible, flagged = flag_summary(rows, self.presence_floor)
        logger.info(f"{self.name}: {flagged} of {eligible} high-presence row(s) flagged")
        return rows

    def row_to_dict(self, row: Lemma2Row) -> Dict[str, Any]:
        return {
            "tile_id": row.tile.label(),
            "i": row.i,
            "present": row.present_count,
            "created": row.created_count,
            "freq": format_float(row.freq),
            "bound": format_float(row.bound),
            "flagged": int(row.flagged),
        }


def flag_summary(rows: Sequence[Lemma2Row], presence_floor: int) -> Tuple[int, int]:
    """(rows with enough presence to judge, how many of them are flagged)"""
    eligible = [r for r in rows if r.present_count >= presence_floor]
    return len(eligible), sum(1 for r in eligible if r.flagged)


def lemma2_monte_carlo(P: Sequence[QuantizedPoint], M: int, seed: int,
                       geometry: Optional[GeometryConfig] = None,
                       family: TileFamily = TileFamily.ELEMENTARY) -> List[Lemma2Row]:
    geometry = geometry or GeometryConfig()
    return Lemma2Experiment(seed, geometry, trials=M, points=P, family=family).run()
