"""
Compressed quadtree: structure, incremental construction and reference oracles
"""

from .node import Node
from .tree import CompressedQuadtree, tile_of, locate_tile, owners_of
from .restructure import MAX_NEW_NODES, RestructureCase, RestructureReport, insert, redistribute
from .serialization import canonical_serialize, parse_serialization, read_tree_file, write_tree_file
from .validation import validate
from .builder import BuildConfig, BuildStats, IterationRecord, shuffle, build
from .oracle import (
    TileFamily,
    TileKey,
    DefiningSetSearch,
    build_topdown,
    common_cell_by_descent,
    tiles_of,
    tree_tiles,
    defining_set_search,
    defining_set_intersection,
)

__all__ = [
    "Node",
    "CompressedQuadtree",
    "tile_of",
    "locate_tile",
    "owners_of",
    "MAX_NEW_NODES",
    "RestructureCase",
    "RestructureReport",
    "insert",
    "redistribute",
    "canonical_serialize",
    "parse_serialization",
    "read_tree_file",
    "write_tree_file",
    "validate",
    "BuildConfig",
    "BuildStats",
    "IterationRecord",
    "shuffle",
    "build",
    "TileFamily",
    "TileKey",
    "DefiningSetSearch",
    "build_topdown",
    "common_cell_by_descent",
    "tiles_of",
    "tree_tiles",
    "defining_set_search",
    "defining_set_intersection",
]
