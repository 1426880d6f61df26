from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from homore.ore import OrePoly
from homore.polynomial import Polynomial
from homore.scalars import QQ

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

rationals = st.fractions(min_value=-6, max_value=6, max_denominator=5).map(QQ)


@st.composite
def polys(draw, max_deg=4):
    coeffs = draw(st.lists(rationals, max_size=max_deg + 1))
    return Polynomial(coeffs)


@st.composite
def ore_polys(draw, max_x=2, max_y=2):
    terms = draw(st.dictionaries(st.integers(0, max_x), polys(max_y), max_size=max_x + 1))
    return OrePoly(terms)


@pytest.fixture
def half():
    return QQ(Fraction(1, 2))
