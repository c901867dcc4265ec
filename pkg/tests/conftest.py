"""
Shared fixtures and hypothesis strategies
"""
import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from geometry import GeometryConfig, QuantizedPoint  # noqa: E402


def make_points(*coords):
    """QuantizedPoints with ids in argument order"""
    return [QuantizedPoint(tuple(c), i) for i, c in enumerate(coords)]


@st.composite
def lattice_sets(draw, resolution=6, d=2, min_size=0, max_size=40):
    """Distinct lattice points; a small resolution forces deep shared prefixes"""
    coord = st.integers(min_value=0, max_value=(1 << resolution) - 1)
    raw = draw(st.lists(st.tuples(*[coord] * d), min_size=min_size, max_size=max_size, unique=True))
    return make_points(*raw)


@pytest.fixture
def plane8():
    return GeometryConfig(d=2, L=8)


@pytest.fixture
def plane2():
    return GeometryConfig(d=2, L=2)


@pytest.fixture
def plane6():
    return GeometryConfig(d=2, L=6)


@pytest.fixture
def compressed_pair(plane8):
    return make_points((25, 25), (30, 30))
