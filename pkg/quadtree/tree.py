"""
Compressed quadtree container, tiles of nodes and point location
"""
from typing import Dict, Iterable, Iterator, List, Optional, Set

from loguru import logger

from geometry import (
    CanonicalCell,
    DegenerateInputError,
    GeometryConfig,
    QuantizedPoint,
    Tile,
    cell_contains,
    check_distinct,
    root_cell,
)
from geometry.cells import quadrant_of_coords
from .node import Node


class CompressedQuadtree:
    """The tree plus the per-point back-pointers used by the incremental build"""

    def __init__(self, cfg: GeometryConfig):
        self.cfg = cfg
        self.root = Node(root_cell(cfg))
        self.points: Dict[int, QuantizedPoint] = {}
        self.inserted_ids: Set[int] = set()
        # point id -> storing leaf once inserted, conflict-list owner before
        self.point_locations: Dict[int, Node] = {}
        self.node_count = 1

    def register(self, points: Iterable[QuantizedPoint]) -> None:
        """Place points in the conflict list of the node whose tile holds them"""
        points = list(points)
        check_distinct(list(self.points.values()) + points, self.cfg.duplicate_policy.value)
        for p in points:
            if p.id in self.points:
                raise DegenerateInputError(f"point id {p.id} registered twice")
            if len(p.coords) != self.cfg.d:
                raise DegenerateInputError(f"point {p.id} has dimension {len(p.coords)}, expected {self.cfg.d}")
            self.points[p.id] = p
            owner = locate_tile(self, p)
            owner.conflict_list[p.id] = p
            self.point_locations[p.id] = owner
        logger.debug(f"Registered {len(points)} point(s) for insertion")

    @property
    def size(self) -> int:
        """Number of inserted points"""
        return len(self.inserted_ids)

    @property
    def pending_ids(self) -> Set[int]:
        return set(self.points) - self.inserted_ids

    def nodes(self) -> Iterator[Node]:
        return self.root.preorder()

    def count_nodes(self) -> int:
        return sum(1 for _ in self.nodes())

    def max_depth(self) -> int:
        """Longest root-to-leaf path, counted in edges"""
        best = 0
        stack = [(self.root, 0)]
        while stack:
            node, depth = stack.pop()
            best = max(best, depth)
            stack.extend((child, depth + 1) for child in node.children.values())
        return best

    def leaves(self) -> List[Node]:
        return [n for n in self.nodes() if n.is_leaf]

    def compressed_edges(self) -> List[Node]:
        """Children whose cell lies strictly below their parent's quadrant"""
        return [
            n for n in self.nodes()
            if n.parent is not None and n.cell.level > n.parent.cell.level + 1
        ]

    def __repr__(self) -> str:
        return f"CompressedQuadtree(d={self.cfg.d}, L={self.cfg.L}, points={self.size}, nodes={self.node_count})"


def tile_of(v: Node) -> Tile:
    """The region ``v`` owns: its cell minus its children's cells"""
    return Tile(v.cell, frozenset(child.cell for child in v.children.values()))


def locate_tile(T: CompressedQuadtree, p: QuantizedPoint) -> Node:
    """Descend from the root to the unique node whose tile holds ``p``"""
    v = T.root
    while v.children:
        child = v.children.get(quadrant_of_coords(v.cell, p.coords))
        if child is None or not cell_contains(child.cell, p):
            return v
        v = child
    return v


def owners_of(T: CompressedQuadtree, p: QuantizedPoint) -> List[Node]:
    """Every node whose tile contains ``p``, found by brute force

    For small trees all nodes are scanned; otherwise only nodes whose cell
    contains ``p`` can qualify and those form a single root path.
    """
    if T.node_count <= 256:
        candidates: Iterable[Node] = T.nodes()
    else:
        chain = []
        frontier: Optional[Node] = T.root
        while frontier is not None:
            chain.append(frontier)
            frontier = next((c for c in frontier.children.values() if cell_contains(c.cell, p)), None)
        candidates = chain

    owners = []
    for node in candidates:
        if not cell_contains(node.cell, p):
            continue
        if any(cell_contains(child.cell, p) for child in node.children.values()):
            continue
        owners.append(node)
    return owners
