"""
Quantized lattice points and the geometry settings they live under
"""
import math
from dataclasses import dataclass
from decimal import Decimal
from enum import Enum
from fractions import Fraction
from numbers import Rational
from typing import Dict, Iterable, List, Sequence, Tuple

from loguru import logger
from pydantic import BaseModel, ConfigDict, Field

from .errors import DuplicatePointError, OutOfDomainError


class DuplicatePolicy(str, Enum):
    """What to do when two inputs land on the same lattice point"""
    REJECT = "reject"
    DEDUPLICATE = "deduplicate"


class GeometryConfig(BaseModel):
    """Dimension and lattice resolution shared by every cell and point"""
    model_config = ConfigDict(frozen=True)

    d: int = Field(default=2, ge=1)
    L: int = Field(default=31, ge=1, le=62)
    duplicate_policy: DuplicatePolicy = DuplicatePolicy.REJECT

    @property
    def quadrant_count(self) -> int:
        return 1 << self.d

    @property
    def side(self) -> int:
        """Number of lattice points per axis"""
        return 1 << self.L


@dataclass(frozen=True)
class QuantizedPoint:
    """A point of the unit cube snapped to the 2^L integer lattice"""
    coords: Tuple[int, ...]
    id: int

    @property
    def dimension(self) -> int:
        return len(self.coords)


def _exact(value):
    if isinstance(value, Decimal):
        return Fraction(value)
    if isinstance(value, Rational):
        return value
    return float(value)


def quantize(p: Sequence, cfg: GeometryConfig, point_id: int = 0) -> QuantizedPoint:
    """Map a point of [0,1)^d to its lattice cell: coords_k = floor(x_k * 2^L)"""
    if len(p) != cfg.d:
        raise OutOfDomainError(f"point {point_id} has {len(p)} coordinates, expected {cfg.d}")

    scale = cfg.side
    coords = []
    for axis, raw in enumerate(p):
        x = _exact(raw)
        # NaN fails both comparisons
        if not (0 <= x < 1):
            raise OutOfDomainError(
                f"point {point_id} coordinate {axis} = {raw} lies outside [0, 1)"
            )
        coords.append(math.floor(x * scale))
    return QuantizedPoint(tuple(coords), point_id)


def quantize_all(points: Iterable[Sequence], cfg: GeometryConfig) -> List[QuantizedPoint]:
    """Quantize an input set, applying the configured duplicate policy

    Ids are the ordinal positions in the input, so a deduplicated set keeps
    the id of the first occurrence.
    """
    seen: Dict[Tuple[int, ...], int] = {}
    result: List[QuantizedPoint] = []
    dropped = 0
    for index, p in enumerate(points):
        q = quantize(p, cfg, index)
        if q.coords in seen:
            if cfg.duplicate_policy is DuplicatePolicy.REJECT:
                raise DuplicatePointError(seen[q.coords], index, q.coords, cfg.duplicate_policy.value)
            dropped += 1
            continue
        seen[q.coords] = index
        result.append(q)

    if dropped:
        logger.info(f"Dropped {dropped} duplicate point(s) under duplicate_policy=deduplicate")
    return result


def check_distinct(points: Iterable[QuantizedPoint], policy: str = "reject") -> None:
    """Raise DuplicatePointError if two already-quantized points coincide"""
    seen: Dict[Tuple[int, ...], int] = {}
    for q in points:
        if q.coords in seen:
            raise DuplicatePointError(seen[q.coords], q.id, q.coords, policy)
        seen[q.coords] = q.id


def ingest_points(points: Iterable, cfg: GeometryConfig) -> List[QuantizedPoint]:
    """Quantize raw coordinates, or accept already-quantized points as they are"""
    points = list(points)
    if points and all(isinstance(p, QuantizedPoint) for p in points):
        check_distinct(points, cfg.duplicate_policy.value)
        return points
    return quantize_all(points, cfg)
