import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from skewsign.shapes import Partition, SkewShape  # noqa: E402


def P(*parts):
    return Partition(parts)


def S(outer, inner=()):
    return SkewShape(Partition(tuple(outer)), Partition(tuple(inner)))


@st.composite
def partitions(draw, max_size=10, max_rows=6):
    size = draw(st.integers(0, max_size))
    parts = []
    cap = size
    while size and len(parts) < max_rows:
        part = draw(st.integers(1, min(cap, size)))
        parts.append(part)
        size -= part
        cap = part
    return Partition(tuple(parts))


@st.composite
def skew_shapes(draw, max_outer=8):
    outer = draw(partitions(max_size=max_outer))
    inner = [draw(st.integers(0, row)) for row in outer.parts]
    for k in range(1, len(inner)):
        inner[k] = min(inner[k], inner[k - 1])
    return SkewShape(outer, Partition(tuple(inner)))


@pytest.fixture
def square():
    return S((2, 2))
