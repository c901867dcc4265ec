"""
PointFile reading/writing and random point generators
"""
from fractions import Fraction
from pathlib import Path
from typing import List, Sequence, Tuple, Union

import numpy as np
from loguru import logger

from geometry import PointFileParseError

RealPoint = Tuple[Fraction, ...]
LARGEST_BELOW_ONE = float(np.nextafter(1.0, 0.0))
CLUSTER_SIGMA = 1e-3


def parse_points(text: str, source: str = "<text>") -> List[RealPoint]:
    """Parse PointFile text; coordinates are read as exact fractions"""
    points: List[RealPoint] = []
    arity = None
    for line_number, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            coords = tuple(Fraction(token) for token in line.split())
        except (ValueError, ZeroDivisionError):
            raise PointFileParseError(f"not a list of decimal reals: {line!r}", line_number, source)
        if arity is None:
            arity = len(coords)
        elif len(coords) != arity:
            raise PointFileParseError(
                f"expected {arity} coordinate(s), found {len(coords)}", line_number, source)
        points.append(coords)
    return points


def read_points(path: Union[str, Path]) -> List[RealPoint]:
    path = Path(path)
    points = parse_points(path.read_text(encoding="utf-8"), str(path))
    logger.debug(f"Read {len(points)} point(s) from {path}")
    return points


def format_points(points: np.ndarray, header: str) -> str:
    lines = [f"# {header}"]
    lines.extend(" ".join(repr(float(x)) for x in row) for row in points.tolist())
    return "\n".join(lines) + "\n"


def write_points(path: Union[str, Path], points: np.ndarray, header: str) -> Path:
    path = Path(path)
    path.write_text(format_points(points, header), encoding="utf-8")
    logger.info(f"Wrote {len(points)} point(s) to {path}")
    return path


def uniform_points(n: int, d: int, seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    return rng.random((n, d))


def clustered_points(n: int, d: int, seed: int, clusters: int = 2,
                     sigma: float = CLUSTER_SIGMA) -> np.ndarray:
    """Gaussian blobs around ``clusters`` uniform centers, clipped into [0, 1)"""
    rng = np.random.default_rng(seed)
    centers = rng.random((clusters, d))
    labels = rng.integers(0, clusters, size=n)
    offsets = rng.normal(0.0, sigma, size=(n, d))
    return np.clip(centers[labels] + offsets, 0.0, LARGEST_BELOW_ONE)


def generate_points(n: int, d: int, distribution: str, seed: int, clusters: int = 2) -> np.ndarray:
    if distribution == "uniform":
        return uniform_points(n, d, seed)
    if distribution == "clustered":
        return clustered_points(n, d, seed, clusters)
    raise ValueError(f"unknown distribution {distribution!r} (expected uniform or clustered)")


def points_header(n: int, d: int, distribution: str, seed: int) -> str:
    return f"points n={n} d={d} dist={distribution} seed={seed}"
