from fractions import Fraction

import numpy as np
import pytest

from geometry import GeometryConfig, PointFileParseError, quantize_all
from quadtree import BuildConfig, build
from utils.point_io import (
    LARGEST_BELOW_ONE,
    clustered_points,
    format_points,
    generate_points,
    parse_points,
    points_header,
    read_points,
    write_points,
)


def test_parse_points_skips_comments_and_blank_lines():
    text = "# header\n0.5 0.25\n\n  # indented comment\n0.1 0.7\n"
    assert parse_points(text) == [(Fraction(1, 2), Fraction(1, 4)), (Fraction(1, 10), Fraction(7, 10))]


def test_parsed_decimals_quantize_exactly():
    cfg = GeometryConfig(d=2, L=2)
    assert [p.coords for p in quantize_all(parse_points("0.3 0.7\n0.5 0.75\n"), cfg)] == [(1, 2), (2, 3)]


def test_parse_points_arity_mismatch_names_the_line():
    with pytest.raises(PointFileParseError) as info:
        parse_points("# c\n0.1 0.2\n0.3\n", source="pts.txt")
    assert info.value.line_number == 3
    assert "pts.txt:3:" in str(info.value)


def test_parse_points_rejects_garbage():
    with pytest.raises(PointFileParseError) as info:
        parse_points("0.1 abc\n")
    assert info.value.line_number == 1


def test_empty_file_is_header_only(tmp_path):
    path = write_points(tmp_path / "p.txt", generate_points(0, 2, "uniform", 0), points_header(0, 2, "uniform", 0))
    assert path.read_text() == "# points n=0 d=2 dist=uniform seed=0\n"
    assert read_points(path) == []


def test_written_points_read_back_exactly(tmp_path):
    points = generate_points(5, 3, "uniform", 9)
    path = write_points(tmp_path / "p.txt", points, "x")
    back = np.array([[float(c) for c in row] for row in read_points(path)])
    assert np.array_equal(back, points)


def test_generators_are_seeded():
    for dist in ("uniform", "clustered"):
        a = format_points(generate_points(4, 2, dist, 17), "h")
        assert a == format_points(generate_points(4, 2, dist, 17), "h")
        assert a != format_points(generate_points(4, 2, dist, 18), "h")
    with pytest.raises(ValueError):
        generate_points(4, 2, "gaussian", 0)


def test_clustered_points_stay_in_domain():
    points = clustered_points(2000, 2, seed=3, clusters=3, sigma=0.5)
    assert points.min() >= 0.0
    assert points.max() <= LARGEST_BELOW_ONE < 1.0


def test_clustered_input_builds_compressed_edges():
    points = clustered_points(100, 2, seed=1)
    T, _ = build(points, BuildConfig(geometry=GeometryConfig()))
    assert T.size == 100
    assert T.compressed_edges()
