"""
Single-point insertion and conflict-list redistribution

``insert`` performs exactly one of four restructuring cases and reports the
nodes it created together with the few candidate tiles the displaced
conflict points may move to. ``redistribute`` then does constant work per
displaced point, which is what bounds an iteration by O(1 + k).
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional

from geometry import (
    ContractViolation,
    DegenerateInputError,
    DuplicatePointError,
    InvariantViolation,
    QuantizedPoint,
    child_cell,
    quadrant_of_cell,
    smallest_common_cell,
    tile_contains,
)
from geometry.cells import quadrant_of_coords
from .node import Node
from .tree import CompressedQuadtree, tile_of

MAX_NEW_NODES = 3


class RestructureCase(Enum):
    """Which restructuring an insertion performed"""
    EMPTY_ROOT = "C0"
    EMPTY_QUADRANT = "C1"
    SPLIT_LEAF = "C2"
    SPLICE_EDGE = "C3"


@dataclass
class RestructureReport:
    """What one insertion changed, handed to ``redistribute``"""
    case: RestructureCase
    target: Node
    point: QuantizedPoint
    new_nodes: List[Node] = field(default_factory=list)
    # new leaves first, then the internal node(s); order only affects speed
    candidates: List[Node] = field(default_factory=list)
    conflicts: Dict[int, QuantizedPoint] = field(default_factory=dict)

    @property
    def nodes_created(self) -> int:
        return len(self.new_nodes)


def insert(T: CompressedQuadtree, v: Node, p: QuantizedPoint) -> RestructureReport:
    """Insert ``p`` into the node ``v`` whose tile contains it"""
    if p.id in T.inserted_ids:
        raise DegenerateInputError(f"point {p.id} was already inserted")
    if not tile_contains(tile_of(v), p):
        raise ContractViolation(f"tile of {v} does not contain point {p.id} {p.coords}")

    conflicts = v.conflict_list
    v.conflict_list = {}
    own_entry = conflicts.pop(p.id, None)

    try:
        if v.is_leaf:
            if v.stored_point is None:
                report = _store_in_empty_root(v, p)
            else:
                report = _split_leaf(T, v, p)
        else:
            q = quadrant_of_coords(v.cell, p.coords)
            w = v.children.get(q)
            if w is None:
                report = _hang_leaf(v, p, q)
            else:
                report = _splice_edge(T, v, w, p, q)
    except Exception:
        if own_entry is not None:
            conflicts[p.id] = own_entry
        v.conflict_list = conflicts
        raise

    if report.nodes_created > MAX_NEW_NODES:
        raise InvariantViolation(
            f"insertion of point {p.id} created {report.nodes_created} nodes (budget {MAX_NEW_NODES})"
        )

    report.conflicts = conflicts
    T.inserted_ids.add(p.id)
    T.points.setdefault(p.id, p)
    T.node_count += report.nodes_created
    for node in report.new_nodes:
        if node.stored_point is not None:
            T.point_locations[node.stored_point.id] = node
    if report.case is RestructureCase.EMPTY_ROOT:
        T.point_locations[p.id] = v

    return report


def _store_in_empty_root(v: Node, p: QuantizedPoint) -> RestructureReport:
    if not v.is_root:
        raise InvariantViolation(f"empty leaf {v} below the root")
    v.stored_point = p
    return RestructureReport(RestructureCase.EMPTY_ROOT, v, p, candidates=[v])


def _split_leaf(T: CompressedQuadtree, v: Node, p: QuantizedPoint) -> RestructureReport:
    q = v.stored_point
    if q.coords == p.coords:
        raise DuplicatePointError(q.id, p.id, p.coords, T.cfg.duplicate_policy.value)

    c = smallest_common_cell(p, q, T.cfg.L)
    new_nodes: List[Node] = []
    fallback: Optional[Node] = None
    v.stored_point = None

    if c == v.cell:
        top = v
    elif v.is_root:
        # the unit cube never shrinks, so the common cell hangs below it
        top = Node(c)
        v.attach(quadrant_of_cell(v.cell, c), top)
        new_nodes.append(top)
        fallback = v
    else:
        # reuse v with the shrunken cell; the vacated annulus joins the parent's tile
        v.cell = c
        top = v
        fallback = v.parent

    leaf_p = Node(child_cell(c, quadrant_of_coords(c, p.coords)), stored_point=p)
    leaf_q = Node(child_cell(c, quadrant_of_coords(c, q.coords)), stored_point=q)
    top.attach(quadrant_of_coords(c, p.coords), leaf_p)
    top.attach(quadrant_of_coords(c, q.coords), leaf_q)
    new_nodes.extend([leaf_p, leaf_q])

    candidates = [leaf_p, leaf_q, top]
    if fallback is not None:
        candidates.append(fallback)
    return RestructureReport(RestructureCase.SPLIT_LEAF, v, p, new_nodes, candidates)


def _hang_leaf(v: Node, p: QuantizedPoint, q: int) -> RestructureReport:
    leaf = Node(child_cell(v.cell, q), stored_point=p)
    v.attach(q, leaf)
    return RestructureReport(RestructureCase.EMPTY_QUADRANT, v, p, [leaf], [leaf, v])


def _splice_edge(T: CompressedQuadtree, v: Node, w: Node, p: QuantizedPoint, q: int) -> RestructureReport:
    # p is outside w's cell but inside the same quadrant of v, so w is a
    # compressed internal node and the common cell stays inside the quadrant
    c = smallest_common_cell(p, w.cell, T.cfg.L)
    if c.level <= v.cell.level or c.level >= w.cell.level:
        raise InvariantViolation(f"splice cell {c} not strictly between {v.cell} and {w.cell}")

    u = Node(c)
    v.attach(q, u)
    u.attach(quadrant_of_cell(c, w.cell), w)
    qp = quadrant_of_coords(c, p.coords)
    leaf = Node(child_cell(c, qp), stored_point=p)
    u.attach(qp, leaf)
    return RestructureReport(RestructureCase.SPLICE_EDGE, v, p, [u, leaf], [leaf, u, v])


def redistribute(T: CompressedQuadtree, report: RestructureReport,
                 cl: Optional[Dict[int, QuantizedPoint]] = None) -> Dict[int, Node]:
    """Move each displaced conflict point to the candidate tile containing it"""
    if cl is None:
        cl = report.conflicts
    tiles = [(node, tile_of(node)) for node in report.candidates]

    assignment: Dict[int, Node] = {}
    for pid, point in cl.items():
        for node, tile in tiles:
            if tile_contains(tile, point):
                node.conflict_list[pid] = point
                T.point_locations[pid] = node
                assignment[pid] = node
                break
        else:
            raise InvariantViolation(
                f"conflict point {pid} {point.coords} fits none of the {len(tiles)} candidate tiles "
                f"after {report.case.value}"
            )
    return assignment
