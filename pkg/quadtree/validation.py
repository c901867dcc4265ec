"""
Structural validation of a tree and its conflict lists
"""
from typing import Dict, List, Optional

import numpy as np
from loguru import logger

from config import config
from geometry import (
    CanonicalCell,
    DegenerateInputError,
    QuantizedPoint,
    cell_contains,
    cell_contains_cell,
    child_cell,
    point_cell,
    root_cell,
    smallest_common_cell,
    tile_contains,
)
from geometry.cells import quadrant_of_coords
from .node import Node
from .tree import CompressedQuadtree, locate_tile, owners_of, tile_of


def _check_node(T: CompressedQuadtree, node: Node, depth: int,
                extents: Dict[int, Optional[CanonicalCell]], violations: List[str]) -> None:
    cfg = T.cfg
    name = f"node {node.cell}"

    if node.cell.level > cfg.L or depth > cfg.L:
        violations.append(f"{name} at depth {depth} exceeds resolution {cfg.L}")

    has_point = node.stored_point is not None
    if node.is_leaf and not has_point and not (node.is_root and T.size == 0):
        violations.append(f"{name} is a leaf without a stored point")
    if has_point and not node.is_leaf:
        violations.append(f"{name} stores a point but has children")
    if has_point and not cell_contains(node.cell, node.stored_point):
        violations.append(f"{name} stores point {node.stored_point.id} outside its cell")

    for q, child in node.children.items():
        if child.parent is not node:
            violations.append(f"child {child.cell} of {name} has a stale parent pointer")
        if child.cell.level <= node.cell.level or not cell_contains_cell(node.cell, child.cell):
            violations.append(f"child {child.cell} is not a strict descendant of {name}")
            continue
        if quadrant_of_coords(node.cell, child.cell.lower()) != q:
            violations.append(f"child {child.cell} of {name} filed under the wrong quadrant {q}")

    if node.is_root:
        if node.cell != root_cell(cfg):
            violations.append(f"root cell {node.cell} is not the unit cube")
        return

    if node.is_leaf:
        parent = node.parent
        q = next((k for k, c in parent.children.items() if c is node), None)
        if q is None:
            violations.append(f"leaf {node.cell} is missing from its parent's children")
        elif node.cell != child_cell(parent.cell, q):
            violations.append(f"leaf {node.cell} is not the quadrant cell of its parent")
    else:
        if len(node.children) < 2:
            violations.append(f"internal {name} has only {len(node.children)} child")
        expected = extents[id(node)]
        if expected is not None and node.cell != expected:
            violations.append(f"internal {name} should have cell {expected}")


def _collect_extents(root: Node, resolution: int, violations: List[str]) -> Dict[int, Optional[CanonicalCell]]:
    """Bottom-up smallest cell holding each subtree's stored points"""
    extents: Dict[int, Optional[CanonicalCell]] = {}
    for node in reversed(list(root.preorder())):
        if node.stored_point is not None:
            extents[id(node)] = point_cell(node.stored_point, resolution)
            continue
        extent: Optional[CanonicalCell] = None
        for child in node.children.values():
            child_extent = extents[id(child)]
            if child_extent is None:
                continue
            try:
                extent = child_extent if extent is None else smallest_common_cell(extent, child_extent)
            except DegenerateInputError:
                violations.append(f"two subtrees below {node.cell} hold the same point")
        extents[id(node)] = extent
    return extents


def validate(T: CompressedQuadtree, samples: Optional[int] = None, seed: int = 0) -> List[str]:
    """Check every structural invariant; violations are returned, never raised"""
    violations: List[str] = []
    extents = _collect_extents(T.root, T.cfg.L, violations)

    node_total = 0
    stored: Dict[int, Node] = {}
    listed: Dict[int, Node] = {}
    stack = [(T.root, 0)]
    while stack:
        node, depth = stack.pop()
        node_total += 1
        _check_node(T, node, depth, extents, violations)

        if node.stored_point is not None:
            pid = node.stored_point.id
            if pid in stored:
                violations.append(f"point {pid} stored in two leaves")
            stored[pid] = node

        tile = tile_of(node)
        for pid, point in node.conflict_list.items():
            if pid in listed:
                violations.append(f"point {pid} appears in two conflict lists")
            listed[pid] = node
            if not tile_contains(tile, point):
                violations.append(f"conflict point {pid} lies outside the tile of node {node.cell}")
            if T.point_locations.get(pid) is not node:
                violations.append(f"back-pointer of conflict point {pid} is stale")

        stack.extend((child, depth + 1) for child in node.children.values())

    if node_total != T.node_count:
        violations.append(f"node_count says {T.node_count} but the tree has {node_total} nodes")
    if node_total > 2 * T.size + 1:
        violations.append(f"{node_total} nodes exceeds the linear bound 2n+1 = {2 * T.size + 1}")

    if set(stored) != T.inserted_ids:
        violations.append(
            f"stored points {sorted(set(stored) ^ T.inserted_ids)} disagree with the inserted set"
        )
    for pid, node in stored.items():
        if T.point_locations.get(pid) is not node:
            violations.append(f"back-pointer of inserted point {pid} is stale")

    pending = T.pending_ids
    if set(listed) != pending:
        missing = sorted(pending - set(listed))
        extra = sorted(set(listed) - pending)
        violations.append(f"conflict lists do not partition pending points (missing {missing}, extra {extra})")

    samples = config.VALIDATION_SAMPLES if samples is None else samples
    if samples:
        rng = np.random.default_rng(seed)
        draws = rng.integers(0, T.cfg.side, size=(samples, T.cfg.d), dtype=np.int64)
        for row in draws:
            lattice_point = QuantizedPoint(tuple(int(x) for x in row), -1)
            owners = owners_of(T, lattice_point)
            if len(owners) != 1:
                violations.append(f"lattice point {lattice_point.coords} lies in {len(owners)} tiles")
                continue
            located = locate_tile(T, lattice_point)
            if located is not owners[0]:
                violations.append(f"locate_tile disagrees with brute force at {lattice_point.coords}")

    if violations:
        logger.warning(f"Validation found {len(violations)} violation(s)")
    return violations
