from conftest import make_points
from geometry import CanonicalCell, QuantizedPoint
from quadtree import BuildConfig, CompressedQuadtree, Node, build, build_topdown, insert, redistribute, validate


def test_empty_tree_is_valid(plane8):
    assert validate(CompressedQuadtree(plane8), samples=50) == []


def test_built_tree_is_valid(plane6):
    points = make_points((1, 1), (2, 2), (60, 3), (33, 40), (33, 41), (0, 63))
    T, _ = build(points, BuildConfig(seed=9, geometry=plane6))
    assert validate(T, samples=500) == []


def test_detects_wrong_node_count(plane8, compressed_pair):
    T = build_topdown(compressed_pair, plane8)
    T.node_count += 1
    assert any("node_count" in v for v in validate(T, samples=0))


def test_detects_stale_parent_pointer(plane8, compressed_pair):
    T = build_topdown(compressed_pair, plane8)
    leaf = T.leaves()[0]
    leaf.parent = T.root
    assert any("parent pointer" in v for v in validate(T, samples=0))


def test_detects_leaf_not_on_quadrant_cell(plane8, compressed_pair):
    T = build_topdown(compressed_pair, plane8)
    leaf = T.leaves()[0]
    leaf.cell = CanonicalCell(7, (12, 12), 8)
    assert any("quadrant cell" in v for v in validate(T, samples=0))


def test_detects_loose_internal_cell(plane8, compressed_pair):
    T = build_topdown(compressed_pair, plane8)
    (u,) = T.root.children.values()
    u.cell = CanonicalCell(4, (1, 1), 8)
    violations = validate(T, samples=0)
    assert any("should have cell" in v for v in violations)


def test_detects_internal_node_with_one_child(plane8):
    T = build_topdown(make_points((0, 0), (255, 255)), plane8)
    child = T.root.children[3]
    middle = Node(CanonicalCell(1, (1, 1), 8))
    T.root.attach(3, middle)
    child.cell = CanonicalCell(2, (3, 3), 8)
    middle.attach(3, child)
    T.node_count += 1
    assert any("only 1 child" in v for v in validate(T, samples=0))


def test_detects_conflict_point_in_wrong_tile(plane8):
    T = CompressedQuadtree(plane8)
    points = make_points((0, 0), (255, 255), (250, 250))
    T.register(points)
    for p in points[:2]:
        redistribute(T, insert(T, T.point_locations[p.id], p))
    assert validate(T, samples=0) == []

    owner = T.point_locations[2]
    del owner.conflict_list[2]
    T.root.conflict_list[2] = points[2]
    T.point_locations[2] = T.root
    assert any("outside the tile" in v for v in validate(T, samples=0))


def test_detects_missing_pending_point(plane8):
    T = CompressedQuadtree(plane8)
    T.register(make_points((5, 5), (6, 6)))
    T.root.conflict_list.pop(1)
    assert any("partition" in v for v in validate(T, samples=0))


def test_sampling_finds_doubly_owned_points(plane8):
    T = build_topdown(make_points((0, 0), (255, 255)), plane8)
    # a second leaf on the same cell as quadrant 0 overlaps its tile
    T.root.attach(1, Node(CanonicalCell(1, (0, 0), 8), stored_point=QuantizedPoint((3, 3), 7)))
    T.node_count += 1
    T.points[7] = T.root.children[1].stored_point
    T.inserted_ids.add(7)
    T.point_locations[7] = T.root.children[1]
    assert any("lies in 2 tiles" in v for v in validate(T, samples=300))
