"""
Tiles: the region a tree node owns exclusively
"""
from dataclasses import dataclass, field
from typing import FrozenSet

from .cells import CanonicalCell, cell_contains, cell_contains_cell
from .errors import ContractViolation
from .lattice import QuantizedPoint


@dataclass(frozen=True)
class Tile:
    """``outer`` minus the union of pairwise disjoint strict-descendant ``holes``

    No holes is a square; one hole is an annulus; more holes is the residual
    region of a node with several occupied quadrants.
    """
    outer: CanonicalCell
    holes: FrozenSet[CanonicalCell] = field(default_factory=frozenset)

    def __post_init__(self):
        for hole in self.holes:
            if hole.level <= self.outer.level or not cell_contains_cell(self.outer, hole):
                raise ContractViolation(f"hole {hole} is not a strict descendant of {self.outer}")

    @property
    def is_square(self) -> bool:
        return not self.holes

    @property
    def is_annulus(self) -> bool:
        return len(self.holes) == 1

    def volume(self) -> int:
        """Lattice volume; zero when the holes cover the outer cell"""
        d = self.outer.dimension
        total = self.outer.side ** d
        for hole in self.holes:
            total -= hole.side ** d
        return total

    @property
    def is_empty(self) -> bool:
        return self.volume() == 0


def tile_contains(t: Tile, p: QuantizedPoint) -> bool:
    """Inside the outer cell and outside every hole"""
    if not cell_contains(t.outer, p):
        return False
    for hole in t.holes:
        if cell_contains(hole, p):
            return False
    return True
