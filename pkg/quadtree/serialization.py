"""
Canonical text form of a tree

One node per line in preorder, children in ascending quadrant index:
``level corner_0 ... corner_{d-1} [leaf point_id coord_0 ... coord_{d-1}]``.
Two trees are equal iff their texts are equal.
"""
from pathlib import Path
from typing import List, Optional, Tuple, Union

from loguru import logger

from geometry import (
    CanonicalCell,
    GeometryConfig,
    PointFileParseError,
    QuantizedPoint,
    QuadtreeError,
    cell_contains,
    cell_contains_cell,
    quadrant_of_cell,
)
from .node import Node
from .tree import CompressedQuadtree

HEADER_PREFIX = "# compressed-quadtree"


def _node_line(node: Node) -> str:
    parts = [str(node.cell.level)]
    parts.extend(str(c) for c in node.cell.corner)
    if node.stored_point is not None:
        parts.append("leaf")
        parts.append(str(node.stored_point.id))
        parts.extend(str(x) for x in node.stored_point.coords)
    return " ".join(parts)


def canonical_serialize(T: CompressedQuadtree) -> str:
    """Deterministic preorder listing, newline-terminated"""
    return "".join(_node_line(node) + "\n" for node in T.nodes())


def tree_header(cfg: GeometryConfig) -> str:
    return f"{HEADER_PREFIX} d={cfg.d} resolution={cfg.L}\n"


def _parse_header(line: str) -> Tuple[Optional[int], Optional[int]]:
    d = resolution = None
    for token in line[len(HEADER_PREFIX):].split():
        key, _, value = token.partition("=")
        if key == "d":
            d = int(value)
        elif key == "resolution":
            resolution = int(value)
    return d, resolution


def _parse_line(tokens: List[str], d: int, resolution: int, line_number: int) -> Node:
    try:
        level = int(tokens[0])
        corner = tuple(int(t) for t in tokens[1:1 + d])
    except ValueError as e:
        raise PointFileParseError(f"bad cell: {e}", line_number)
    if len(corner) != d:
        raise PointFileParseError(f"expected {d} corner coordinates", line_number)
    try:
        cell = CanonicalCell(level, corner, resolution)
    except (ValueError, QuadtreeError) as e:
        raise PointFileParseError(f"bad cell: {e}", line_number)

    rest = tokens[1 + d:]
    if not rest:
        return Node(cell)
    if rest[0] != "leaf" or len(rest) != 2 + d:
        raise PointFileParseError(f"expected 'leaf id' and {d} coordinates after the cell", line_number)
    try:
        point = QuantizedPoint(tuple(int(t) for t in rest[2:]), int(rest[1]))
    except ValueError as e:
        raise PointFileParseError(f"bad leaf point: {e}", line_number)
    if not cell_contains(cell, point):
        raise PointFileParseError(f"leaf point {point.coords} lies outside {cell}", line_number)
    return Node(cell, stored_point=point)


def parse_serialization(text: str, resolution: Optional[int] = None,
                        duplicate_policy: str = "reject") -> CompressedQuadtree:
    """Rebuild a structure-only tree (no conflict lists) from canonical text

    The resolution comes from the argument or from a header comment; the
    dimension is read off the first node line.
    """
    d: Optional[int] = None
    rows: List[Tuple[int, List[str]]] = []
    for line_number, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            if line.startswith(HEADER_PREFIX):
                header_d, header_resolution = _parse_header(line)
                d = header_d if header_d is not None else d
                resolution = resolution if resolution is not None else header_resolution
            continue
        rows.append((line_number, line.split()))

    if not rows:
        raise PointFileParseError("no node lines found")
    if resolution is None:
        raise PointFileParseError("resolution unknown: pass it explicitly or add a header line")

    first_number, first_tokens = rows[0]
    if d is None:
        d = len(first_tokens) - 1 if "leaf" not in first_tokens else first_tokens.index("leaf") - 1
    if d < 1:
        raise PointFileParseError("cannot infer dimension from the root line", first_number)

    cfg = GeometryConfig(d=d, L=resolution, duplicate_policy=duplicate_policy)
    T = CompressedQuadtree(cfg)
    root = _parse_line(first_tokens, d, resolution, first_number)
    if root.cell != T.root.cell:
        raise PointFileParseError("first node must be the unit cube", first_number)
    T.root = root

    stack = [root]
    for line_number, tokens in rows[1:]:
        node = _parse_line(tokens, d, resolution, line_number)
        while stack and not (
            stack[-1].cell.level < node.cell.level and cell_contains_cell(stack[-1].cell, node.cell)
        ):
            stack.pop()
        if not stack:
            raise PointFileParseError(f"{node.cell} has no enclosing node", line_number)
        parent = stack[-1]
        q = quadrant_of_cell(parent.cell, node.cell)
        if q in parent.children:
            raise PointFileParseError(f"quadrant {q} of {parent.cell} listed twice", line_number)
        parent.attach(q, node)
        stack.append(node)
        T.node_count += 1

    for node in T.nodes():
        if node.stored_point is not None:
            p = node.stored_point
            if p.id in T.points:
                raise PointFileParseError(f"point id {p.id} appears twice")
            T.points[p.id] = p
            T.inserted_ids.add(p.id)
            T.point_locations[p.id] = node

    logger.debug(f"Parsed tree with {T.node_count} nodes and {T.size} points")
    return T


def write_tree_file(path: Union[str, Path], T: CompressedQuadtree) -> None:
    Path(path).write_text(tree_header(T.cfg) + canonical_serialize(T), encoding="ascii")


def read_tree_file(path: Union[str, Path], resolution: Optional[int] = None) -> CompressedQuadtree:
    text = Path(path).read_text(encoding="ascii")
    try:
        return parse_serialization(text, resolution)
    except PointFileParseError as e:
        e.path = str(path)
        raise
