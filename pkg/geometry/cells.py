"""
Canonical cells of the dyadic grid and the primitives built on them

A cell at ``level`` with integer ``corner`` covers, in lattice units, the
half-open box prod_k [corner_k * 2^(L-level), (corner_k + 1) * 2^(L-level)).
Quadrant indices use one convention project-wide: bit k is set iff the
point lies in the upper half of the cell along axis k.
"""
from dataclasses import dataclass
from typing import Iterator, List, Sequence, Tuple, Union

from .errors import ContractViolation, DegenerateInputError, IndivisibleCellError
from .lattice import GeometryConfig, QuantizedPoint


@dataclass(frozen=True, order=True)
class CanonicalCell:
    """A canonical square (cube for d > 2) identified by level and corner"""
    level: int
    corner: Tuple[int, ...]
    resolution: int

    def __post_init__(self):
        if not 0 <= self.level <= self.resolution:
            raise ContractViolation(f"cell level {self.level} outside [0, {self.resolution}]")
        limit = 1 << self.level
        for c in self.corner:
            if not 0 <= c < limit:
                raise ContractViolation(f"cell corner {self.corner} outside level {self.level} grid")

    @property
    def dimension(self) -> int:
        return len(self.corner)

    @property
    def shift(self) -> int:
        """log2 of the side length in lattice units"""
        return self.resolution - self.level

    @property
    def side(self) -> int:
        return 1 << (self.resolution - self.level)

    @property
    def is_divisible(self) -> bool:
        return self.level < self.resolution

    def lower(self) -> Tuple[int, ...]:
        s = self.shift
        return tuple(c << s for c in self.corner)

    def upper(self) -> Tuple[int, ...]:
        """Exclusive upper bound per axis"""
        s = self.shift
        return tuple((c + 1) << s for c in self.corner)

    def __str__(self) -> str:
        return f"cell({self.level}, {self.corner})"


Region = Union[QuantizedPoint, CanonicalCell]


def root_cell(cfg: GeometryConfig) -> CanonicalCell:
    """The unit cube"""
    return CanonicalCell(0, (0,) * cfg.d, cfg.L)


def point_cell(p: QuantizedPoint, resolution: int) -> CanonicalCell:
    """The finest-level cell holding a lattice point"""
    return CanonicalCell(resolution, tuple(p.coords), resolution)


def cell_contains(c: CanonicalCell, p: QuantizedPoint) -> bool:
    """Half-open containment of a lattice point"""
    s = c.resolution - c.level
    for x, k in zip(p.coords, c.corner):
        if x >> s != k:
            return False
    return True


def cell_contains_cell(outer: CanonicalCell, inner: CanonicalCell) -> bool:
    """True iff ``inner`` is ``outer`` or one of its descendants"""
    delta = inner.level - outer.level
    if delta < 0:
        return False
    for a, b in zip(inner.corner, outer.corner):
        if a >> delta != b:
            return False
    return True


def quadrant_of_coords(c: CanonicalCell, coords: Sequence[int]) -> int:
    """Quadrant bits without precondition checks; callers guarantee containment"""
    s = c.resolution - c.level - 1
    q = 0
    for k, x in enumerate(coords):
        q |= ((x >> s) & 1) << k
    return q


def quadrant_index(c: CanonicalCell, p: QuantizedPoint) -> int:
    """Index in [0, 2^d) of the quadrant of ``c`` holding ``p``"""
    if not c.is_divisible:
        raise IndivisibleCellError(f"{c} is at the finest level and has no quadrants")
    if not cell_contains(c, p):
        raise ContractViolation(f"point {p.coords} is not inside {c}")
    return quadrant_of_coords(c, p.coords)


def quadrant_of_cell(c: CanonicalCell, inner: CanonicalCell) -> int:
    """Quadrant of ``c`` holding the strict descendant ``inner``"""
    if inner.level <= c.level or not cell_contains_cell(c, inner):
        raise ContractViolation(f"{inner} is not a strict descendant of {c}")
    return quadrant_of_coords(c, inner.lower())


def child_cell(c: CanonicalCell, q: int) -> CanonicalCell:
    """The quadrant cell ``q`` of ``c``, one level down"""
    if not c.is_divisible:
        raise IndivisibleCellError(f"{c} is at the finest level and has no quadrants")
    if not 0 <= q < (1 << c.dimension):
        raise ContractViolation(f"quadrant {q} outside [0, {1 << c.dimension})")
    corner = tuple((k << 1) | ((q >> axis) & 1) for axis, k in enumerate(c.corner))
    return CanonicalCell(c.level + 1, corner, c.resolution)


def child_cells(c: CanonicalCell) -> Iterator[CanonicalCell]:
    for q in range(1 << c.dimension):
        yield child_cell(c, q)


def _as_prefixes(region: Region, resolution: int) -> Tuple[int, Tuple[int, ...]]:
    if isinstance(region, CanonicalCell):
        return region.level, region.corner
    return resolution, tuple(region.coords)


def smallest_common_cell(a: Region, b: Region, resolution: int = None) -> CanonicalCell:
    """Deepest canonical cell containing both arguments

    Computed per coordinate from the common binary prefix of the cell
    corners; the result matches the descend-from-root reference loop.
    """
    if resolution is None:
        for region in (a, b):
            if isinstance(region, CanonicalCell):
                resolution = region.resolution
                break
        else:
            raise ContractViolation("resolution is required when both arguments are points")

    la, ka = _as_prefixes(a, resolution)
    lb, kb = _as_prefixes(b, resolution)
    m = min(la, lb)
    da, db = la - m, lb - m
    divergence = 0
    for x, y in zip(ka, kb):
        divergence = max(divergence, ((x >> da) ^ (y >> db)).bit_length())

    if divergence == 0 and la == lb:
        raise DegenerateInputError(f"arguments denote the same region at level {la}: {ka}")

    level = m - divergence
    corner = tuple(x >> (la - level) for x in ka)
    return CanonicalCell(level, corner, resolution)


def lattice_points(c: CanonicalCell) -> List[Tuple[int, ...]]:
    """Every lattice point inside ``c``; only sensible at small resolution"""
    lo, hi = c.lower(), c.upper()
    points: List[Tuple[int, ...]] = [()]
    for a, b in zip(lo, hi):
        points = [p + (x,) for p in points for x in range(a, b)]
    return points
