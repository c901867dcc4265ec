"""
Brute-force reference implementations

Everything here is deliberately simple and independent of the incremental
builder: a recursive top-down tree construction, tile extraction, and
exhaustive subset search for defining sets.
"""
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from loguru import logger

from geometry import (
    CanonicalCell,
    ContractViolation,
    DegenerateInputError,
    GeometryConfig,
    QuantizedPoint,
    cell_contains,
    child_cell,
    point_cell,
    ingest_points,
    root_cell,
)
from geometry.cells import Region, quadrant_of_coords
from utils.performance_monitor import track_performance
from .node import Node
from .tree import CompressedQuadtree, tile_of


class TileFamily(str, Enum):
    """Which notion of tile a tile set is drawn from"""
    # cell minus child cells, one tile per node
    RESIDUAL = "residual"
    # leaf squares, empty-quadrant squares and compressed-edge annuli
    ELEMENTARY = "elementary"


def _cell_token(c: CanonicalCell) -> str:
    return f"{c.level}:" + ".".join(str(k) for k in c.corner)


@dataclass(frozen=True, order=True)
class TileKey:
    """Structural identity of a tile: outer cell plus sorted hole cells"""
    outer: CanonicalCell
    holes: Tuple[CanonicalCell, ...] = ()

    @classmethod
    def of(cls, outer: CanonicalCell, holes: Iterable[CanonicalCell] = ()) -> "TileKey":
        return cls(outer, tuple(sorted(holes)))

    def label(self) -> str:
        """Compact CSV-safe identifier, e.g. ``0:0.0-1:0.0-1:1.1``"""
        return "-".join(_cell_token(c) for c in (self.outer,) + self.holes)

    @property
    def kind(self) -> str:
        if not self.holes:
            return "square"
        return "annulus" if len(self.holes) == 1 else "residual"


def common_cell_by_descent(a: Region, b: Region, cfg: GeometryConfig) -> CanonicalCell:
    """Reference loop: walk down from the root while one quadrant holds both"""
    targets = []
    for region in (a, b):
        targets.append(region if isinstance(region, CanonicalCell) else point_cell(region, cfg.L))
    if targets[0] == targets[1]:
        raise DegenerateInputError(f"arguments denote the same region {targets[0]}")

    def holds(cell: CanonicalCell, target: CanonicalCell) -> bool:
        if target.level < cell.level:
            return False
        delta = target.level - cell.level
        return all((t >> delta) == k for t, k in zip(target.corner, cell.corner))

    cell = root_cell(cfg)
    while cell.level < min(targets[0].level, targets[1].level):
        for q in range(cfg.quadrant_count):
            child = child_cell(cell, q)
            if holds(child, targets[0]) and holds(child, targets[1]):
                cell = child
                break
        else:
            return cell
    return cell


def _subtree(cell: CanonicalCell, points: List[QuantizedPoint], cfg: GeometryConfig) -> Tuple[Node, int]:
    """Node for ``points`` hanging in quadrant ``cell`` of its parent"""
    if len(points) == 1:
        return Node(cell, stored_point=points[0]), 1
    enclosing = common_cell_by_descent(points[0], points[1], cfg)
    for p in points[2:]:
        if not cell_contains(enclosing, p):
            enclosing = common_cell_by_descent(enclosing, p, cfg)
    node = Node(enclosing)
    return node, _split(node, points, cfg) + 1


def _split(node: Node, points: List[QuantizedPoint], cfg: GeometryConfig) -> int:
    groups: Dict[int, List[QuantizedPoint]] = {}
    for p in points:
        groups.setdefault(quadrant_of_coords(node.cell, p.coords), []).append(p)
    created = 0
    for q in sorted(groups):
        child, count = _subtree(child_cell(node.cell, q), groups[q], cfg)
        node.attach(q, child)
        created += count
    return created


@track_performance("oracle", "build_topdown")
def build_topdown(points: Sequence, cfg: GeometryConfig) -> CompressedQuadtree:
    """Recursive construction of the canonical tree, blind to insertion order"""
    qpoints = ingest_points(points, cfg)
    T = CompressedQuadtree(cfg)
    if len(qpoints) == 1:
        T.root.stored_point = qpoints[0]
    elif len(qpoints) >= 2:
        T.node_count += _split(T.root, qpoints, cfg)

    for node in T.nodes():
        if node.stored_point is not None:
            p = node.stored_point
            T.points[p.id] = p
            T.inserted_ids.add(p.id)
            T.point_locations[p.id] = node
    return T


def tree_tiles(T: CompressedQuadtree, family: TileFamily = TileFamily.RESIDUAL) -> FrozenSet[TileKey]:
    """Every nonempty tile of a tree"""
    keys = set()
    for node in T.nodes():
        if family is TileFamily.RESIDUAL:
            tile = tile_of(node)
            if not tile.is_empty:
                keys.add(TileKey.of(tile.outer, tile.holes))
            continue

        if node.is_leaf:
            keys.add(TileKey(node.cell))
            continue
        for q in range(T.cfg.quadrant_count):
            quadrant = child_cell(node.cell, q)
            child = node.children.get(q)
            if child is None:
                keys.add(TileKey(quadrant))
            elif child.cell != quadrant:
                keys.add(TileKey(quadrant, (child.cell,)))
    return frozenset(keys)


def tiles_of(points: Sequence, cfg: GeometryConfig,
             family: TileFamily = TileFamily.RESIDUAL) -> FrozenSet[TileKey]:
    """Tile set of the canonical tree of ``points``"""
    return tree_tiles(build_topdown(points, cfg), family)


class DefiningSetSearch:
    """Exhaustive subset search over one small point set, memoizing tile sets

    Tile sets are cached per subset, so querying many tiles of the same set
    costs one tree build per subset visited.
    """

    def __init__(self, points: Sequence, cfg: GeometryConfig,
                 family: TileFamily = TileFamily.RESIDUAL):
        self.cfg = cfg
        self.family = family
        self.points: List[QuantizedPoint] = ingest_points(points, cfg)
        self._cache: Dict[Tuple[int, ...], FrozenSet[TileKey]] = {}
        self.tiles: FrozenSet[TileKey] = self.tiles_for(tuple(range(len(self.points))))

    def tiles_for(self, subset: Tuple[int, ...]) -> FrozenSet[TileKey]:
        cached = self._cache.get(subset)
        if cached is None:
            chosen = [self.points[i] for i in subset]
            cached = tree_tiles(build_topdown(chosen, self.cfg), self.family)
            self._cache[subset] = cached
        return cached

    def _require(self, f: TileKey) -> None:
        if f not in self.tiles:
            raise ContractViolation(f"tile {f.label()} is not a tile of the tree of this point set")

    def search(self, f: TileKey, k_max: Optional[int] = 4) -> Optional[List[QuantizedPoint]]:
        """Smallest subset whose tree has ``f`` as a tile, or None within ``k_max``"""
        self._require(f)
        limit = len(self.points) if k_max is None else min(k_max, len(self.points))
        for size in range(limit + 1):
            for subset in combinations(range(len(self.points)), size):
                if f in self.tiles_for(subset):
                    return [self.points[i] for i in subset]
        return None

    def minimal_sets(self, f: TileKey, k_max: Optional[int] = None) -> List[List[QuantizedPoint]]:
        """All inclusion-minimal subsets having ``f`` as a tile

        A subset is minimal iff it has ``f`` and contains no smaller minimal
        subset, so a size-ordered sweep only needs to skip supersets.
        """
        self._require(f)
        limit = len(self.points) if k_max is None else min(k_max, len(self.points))
        found: List[FrozenSet[int]] = []
        for size in range(limit + 1):
            for subset in combinations(range(len(self.points)), size):
                members = frozenset(subset)
                if any(m <= members for m in found):
                    continue
                if f in self.tiles_for(subset):
                    found.append(members)
        return [[self.points[i] for i in sorted(m)] for m in found]

    def intersection(self, f: TileKey, k_max: Optional[int] = None) -> List[QuantizedPoint]:
        """Points common to every defining set of ``f``"""
        sets = self.minimal_sets(f, k_max)
        if not sets:
            raise ContractViolation(f"no defining set of {f.label()} within size {k_max}")
        common = set(p.id for p in sets[0])
        for s in sets[1:]:
            common &= set(p.id for p in s)
        return [p for p in self.points if p.id in common]

    def max_defining_size(self, k_max: Optional[int] = 4) -> Tuple[int, List[TileKey]]:
        """Largest smallest-defining-set size over all tiles, plus tiles with none"""
        worst = 0
        failures: List[TileKey] = []
        for f in sorted(self.tiles):
            found = self.search(f, k_max)
            if found is None:
                failures.append(f)
            else:
                worst = max(worst, len(found))
        if failures:
            logger.warning(f"{len(failures)} tile(s) have no defining set of size <= {k_max}")
        return worst, failures


def defining_set_search(P: Sequence, f: TileKey, cfg: GeometryConfig, k_max: Optional[int] = 4,
                        family: TileFamily = TileFamily.RESIDUAL) -> Optional[List[QuantizedPoint]]:
    return DefiningSetSearch(P, cfg, family).search(f, k_max)


def defining_set_intersection(P: Sequence, f: TileKey, cfg: GeometryConfig,
                              family: TileFamily = TileFamily.RESIDUAL,
                              k_max: Optional[int] = None) -> List[QuantizedPoint]:
    return DefiningSetSearch(P, cfg, family).intersection(f, k_max)
