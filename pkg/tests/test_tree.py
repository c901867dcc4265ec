import pytest

from conftest import make_points
from geometry import CanonicalCell, ContractViolation, DegenerateInputError, QuantizedPoint, root_cell
from quadtree import (
    CompressedQuadtree,
    Node,
    RestructureCase,
    build_topdown,
    insert,
    locate_tile,
    owners_of,
    redistribute,
    tile_of,
    validate,
)


def insert_all(T, points):
    """Register ``points`` and insert them in the given order"""
    T.register(points)
    reports = []
    for p in points:
        report = insert(T, T.point_locations[p.id], p)
        redistribute(T, report)
        reports.append(report)
    return reports


def test_tile_of_leaf_and_compressed_root(plane8):
    T = CompressedQuadtree(plane8)
    assert tile_of(T.root).is_square

    child = Node(CanonicalCell(3, (5, 5), 8))
    T.root.attach(0, child)
    tile = tile_of(T.root)
    assert tile.is_annulus
    assert tile.holes == frozenset({child.cell})
    assert tile.volume() == 256 * 256 - 32 * 32


def test_tile_of_node_with_two_children(plane2):
    T = build_topdown(make_points((0, 0), (3, 3)), plane2)
    tile = tile_of(T.root)
    assert len(tile.holes) == 2
    assert not tile.is_empty


def test_locate_tile_on_empty_tree(plane8):
    T = CompressedQuadtree(plane8)
    assert locate_tile(T, QuantizedPoint((7, 9), 0)) is T.root


def test_locate_tile_in_unoccupied_quadrant(plane2):
    T = build_topdown(make_points((0, 0), (3, 3)), plane2)
    assert locate_tile(T, QuantizedPoint((3, 0), 9)) is T.root


def test_locate_tile_descends_into_compressed_child(plane8, compressed_pair):
    T = build_topdown(compressed_pair, plane8)
    v = locate_tile(T, QuantizedPoint((29, 29), 9))
    assert v.is_leaf and v.stored_point.id == 1
    # inside the quadrant of the root but outside the compressed cell
    assert locate_tile(T, QuantizedPoint((10, 10), 9)) is T.root


def test_owners_of_finds_exactly_one_tile(plane6):
    T = build_topdown(make_points((1, 1), (2, 2), (60, 3), (33, 40)), plane6)
    for coords in [(0, 0), (1, 1), (3, 3), (63, 63), (60, 3), (32, 0)]:
        p = QuantizedPoint(coords, -1)
        assert owners_of(T, p) == [locate_tile(T, p)]


def test_first_insertion_stores_in_root(plane8):
    T = CompressedQuadtree(plane8)
    (report,) = insert_all(T, make_points((5, 5)))
    assert report.case is RestructureCase.EMPTY_ROOT
    assert report.nodes_created == 0
    assert T.root.stored_point.id == 0
    assert T.point_locations[0] is T.root


def test_split_of_root_leaf_creates_compressed_node(plane8, compressed_pair):
    T = CompressedQuadtree(plane8)
    reports = insert_all(T, compressed_pair)
    assert [r.case for r in reports] == [RestructureCase.EMPTY_ROOT, RestructureCase.SPLIT_LEAF]
    assert reports[1].nodes_created == 3
    assert T.node_count == 4

    (u,) = T.root.children.values()
    assert u.cell == CanonicalCell(5, (3, 3), 8)
    assert sorted(c.cell.level for c in u.children.values()) == [6, 6]
    assert validate(T, samples=200) == []


def test_split_at_root_cell_creates_two_leaves(plane2):
    T = CompressedQuadtree(plane2)
    reports = insert_all(T, make_points((0, 0), (3, 3)))
    assert reports[1].case is RestructureCase.SPLIT_LEAF
    assert reports[1].nodes_created == 2
    assert sorted(T.root.children) == [0, 3]


def test_point_in_empty_quadrant_hangs_a_leaf(plane2):
    T = CompressedQuadtree(plane2)
    reports = insert_all(T, make_points((0, 0), (3, 3), (3, 0)))
    assert reports[2].case is RestructureCase.EMPTY_QUADRANT
    assert reports[2].nodes_created == 1
    assert T.root.children[1].cell == CanonicalCell(1, (1, 0), 2)


def test_split_of_nonroot_leaf_shrinks_it(plane8):
    T = CompressedQuadtree(plane8)
    points = make_points((0, 0), (255, 255), (200, 210))
    reports = insert_all(T, points)
    assert reports[2].case is RestructureCase.SPLIT_LEAF
    assert reports[2].nodes_created == 2
    assert validate(T, samples=200) == []
    assert T.count_nodes() == T.node_count == 5


def test_splice_into_compressed_edge(plane8, compressed_pair):
    T = CompressedQuadtree(plane8)
    points = compressed_pair + [QuantizedPoint((40, 25), 2), QuantizedPoint((10, 10), 3)]
    T.register(points)
    for p in points[:2]:
        redistribute(T, insert(T, T.point_locations[p.id], p))

    report = insert(T, T.point_locations[2], points[2])
    assert report.case is RestructureCase.SPLICE_EDGE
    assert report.nodes_created == 2
    u = report.new_nodes[0]
    assert u.cell == CanonicalCell(2, (0, 0), 8)

    # (10, 10) sits in the annulus that the spliced node now owns
    assignment = redistribute(T, report)
    assert assignment == {3: u}
    assert validate(T, samples=200) == []


def test_split_moves_conflict_point_into_new_leaf(plane8):
    T = CompressedQuadtree(plane8)
    points = make_points((25, 25), (30, 30), (29, 29))
    T.register(points)
    redistribute(T, insert(T, T.root, points[0]))
    report = insert(T, T.root, points[1])
    assignment = redistribute(T, report)
    leaf = next(n for n in report.new_nodes if n.stored_point is points[1])
    assert assignment == {2: leaf}
    assert T.point_locations[2] is leaf


def test_redistribute_with_no_conflicts(plane8):
    T = CompressedQuadtree(plane8)
    p = QuantizedPoint((1, 2), 0)
    T.register([p])
    assert redistribute(T, insert(T, T.root, p)) == {}


def test_insert_preconditions(plane2):
    T = CompressedQuadtree(plane2)
    points = make_points((0, 0), (3, 3))
    insert_all(T, points)
    leaf = T.root.children[0]
    with pytest.raises(ContractViolation):
        insert(T, leaf, QuantizedPoint((3, 0), 5))
    with pytest.raises(DegenerateInputError):
        insert(T, leaf, points[0])


def test_register_rejects_duplicates(plane8):
    T = CompressedQuadtree(plane8)
    with pytest.raises(DegenerateInputError):
        T.register(make_points((3, 3), (3, 3)))


def test_tree_helpers(plane8, compressed_pair):
    T = build_topdown(compressed_pair, plane8)
    assert T.max_depth() == 2
    assert len(T.leaves()) == 2
    assert [n.cell.level for n in T.compressed_edges()] == [5]
    assert T.root.cell == root_cell(plane8)
    assert [n.depth() for n in T.leaves()] == [2, 2]
