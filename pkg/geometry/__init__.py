"""
Exact integer geometry: lattice points, canonical cells and tiles
"""

from .errors import (
    QuadtreeError,
    OutOfDomainError,
    DegenerateInputError,
    DuplicatePointError,
    ContractViolation,
    IndivisibleCellError,
    InvariantViolation,
    UnsupportedDimensionError,
    PointFileParseError,
)
from .lattice import DuplicatePolicy, GeometryConfig, QuantizedPoint, quantize, quantize_all, check_distinct, ingest_points
from .cells import (
    CanonicalCell,
    root_cell,
    point_cell,
    cell_contains,
    cell_contains_cell,
    quadrant_index,
    quadrant_of_cell,
    child_cell,
    child_cells,
    smallest_common_cell,
    lattice_points,
)
from .tiles import Tile, tile_contains

__all__ = [
    "QuadtreeError",
    "OutOfDomainError",
    "DegenerateInputError",
    "DuplicatePointError",
    "ContractViolation",
    "IndivisibleCellError",
    "InvariantViolation",
    "UnsupportedDimensionError",
    "PointFileParseError",
    "DuplicatePolicy",
    "GeometryConfig",
    "QuantizedPoint",
    "quantize",
    "quantize_all",
    "check_distinct",
    "ingest_points",
    "CanonicalCell",
    "root_cell",
    "point_cell",
    "cell_contains",
    "cell_contains_cell",
    "quadrant_index",
    "quadrant_of_cell",
    "child_cell",
    "child_cells",
    "smallest_common_cell",
    "lattice_points",
    "Tile",
    "tile_contains",
]
