from fractions import Fraction

import pytest
from hypothesis import strategies as st

from fuzzysns import DiscreteFuzzyNumber, TriangularFuzzyNumber


def tri(a, m, b):
    return TriangularFuzzyNumber(a, m, b)


def dfn(points):
    return DiscreteFuzzyNumber(points)


@st.composite
def triangles(draw, low=0, high=60):
    a = draw(st.integers(low, high))
    m = draw(st.integers(a, high))
    b = draw(st.integers(m, high))
    return TriangularFuzzyNumber(a, m, b)


@st.composite
def radix_triangles(draw, high=12):
    a = draw(st.integers(1, high))
    m = draw(st.integers(a, high))
    b = draw(st.integers(m, high))
    return TriangularFuzzyNumber(a, m, b)


@st.composite
def discretes(draw, low=0, high=30, max_size=8):
    values = draw(
        st.lists(st.integers(low, high), min_size=1, max_size=max_size, unique=True)
    )
    grades = {}
    for v in values:
        grades[v] = Fraction(draw(st.integers(1, 10)), 10)
    grades[draw(st.sampled_from(values))] = Fraction(1)
    return DiscreteFuzzyNumber(grades)


@pytest.fixture
def crisp_line_scenario_text():
    return """{
  "entities": [
    {"id": "i", "kind": "crisp", "value": 7},
    {"id": "j", "kind": "crisp", "value": 10}
  ],
  "steps": [
    {"form": "L", "operands": ["i"], "images": ["j"], "radix": 3, "rates": [2]}
  ],
  "options": {"remainder_mode": "correlated", "clamp_negative": false}
}
"""
