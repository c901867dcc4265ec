"""
Seed derivation, random inputs and optional parallel execution of trials
"""
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, List, Optional, Sequence, TypeVar

import numpy as np
from tqdm.auto import tqdm

from config import config
from geometry import GeometryConfig, QuantizedPoint

T = TypeVar("T")
R = TypeVar("R")


def derive_seeds(seed: int, count: int) -> List[int]:
    """Independent 64-bit child seeds, stable for a given (seed, count)"""
    children = np.random.SeedSequence(seed).spawn(count)
    return [int(child.generate_state(1, dtype=np.uint64)[0]) for child in children]


def random_lattice_points(n: int, cfg: GeometryConfig, seed: int) -> List[QuantizedPoint]:
    """``n`` distinct uniform lattice points; ids follow draw order"""
    rng = np.random.default_rng(seed)
    seen = set()
    points: List[QuantizedPoint] = []
    while len(points) < n:
        draws = rng.integers(0, cfg.side, size=(n - len(points), cfg.d), dtype=np.int64)
        for row in draws.tolist():
            coords = tuple(row)
            if coords in seen:
                continue
            seen.add(coords)
            points.append(QuantizedPoint(coords, len(points)))
    return points


def run_trials(func: Callable[[T], R], jobs: Sequence[T], workers: Optional[int] = None,
               description: Optional[str] = None) -> List[R]:
    """Run ``func`` over ``jobs``; results come back in job order

    With more than one worker the jobs go to a process pool; ``func`` must
    then be a module-level function.
    """
    workers = config.MAX_WORKERS if workers is None else workers
    show = config.SHOW_PROGRESS and description is not None

    if workers <= 1 or len(jobs) <= 1:
        iterator: Iterable[T] = tqdm(jobs, desc=description, leave=False) if show else jobs
        return [func(job) for job in iterator]

    with ProcessPoolExecutor(max_workers=workers) as pool:
        results = pool.map(func, jobs)
        if show:
            results = tqdm(results, total=len(jobs), desc=description, leave=False)
        return list(results)
