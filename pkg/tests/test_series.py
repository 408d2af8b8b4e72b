from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nilcone.series import (
    AtLeast,
    Exact,
    TruncatedLaurentSeries,
    series_add,
    series_make,
    series_mul,
    series_valuation,
)


def test_make_zero():
    s = series_make([], 8)
    assert s.lead_exp == 8 and s.precision == 8 and s.coeffs == ()
    assert series_valuation(s) == AtLeast(8)


def test_make_single_monomial():
    s = series_make([(-1, 1)], 8)
    assert s.lead_exp == -1
    assert s[-1] == 1
    assert all(s[k] == 0 for k in range(0, 8))


def test_make_direct():
    s = series_make([(0, 2), (3, Fraction(-1, 2))], 6)
    assert [s[k] for k in range(6)] == [2, 0, 0, Fraction(-1, 2), 0, 0]


def test_make_rejects_exponent_at_precision():
    with pytest.raises(ValueError):
        series_make([(6, 1)], 6)


def test_unknown_coefficient_raises():
    with pytest.raises(IndexError):
        series_make([(0, 1)], 3)[3]


def test_add_cancellation():
    s = series_add(series_make([(1, 1)], 8), series_make([(1, -1)], 8))
    assert s.precision == 8
    assert series_valuation(s) == AtLeast(8)


def test_add_precision_is_min():
    s = series_add(series_make([(-1, 1)], 4), series_make([(0, 1)], 6))
    assert s.precision == 4 and s.lead_exp == -1
    assert s == series_make([(-1, 1), (0, 1)], 4)


def test_add_direct():
    s = series_make([(0, 2), (1, 1)], 5) + series_make([(0, 3)], 5)
    assert s == series_make([(0, 5), (1, 1)], 5)


def test_mul_inverse_monomials():
    s = series_mul(series_make([(-1, 1)], 4), series_make([(1, 1)], 6))
    assert s.lead_exp == 0 and s.precision == 5
    assert s == series_make([(0, 1)], 5)


def test_mul_hand_cauchy_product():
    a = series_make([(0, 1), (1, 1)], 3)
    b = series_make([(0, 1), (1, -1)], 3)
    assert series_mul(a, b) == series_make([(0, 1), (2, -1)], 3)
    assert series_mul(a, b).precision == 3


def test_mul_absorbing_zero():
    s = series_mul(series_make([(0, 5), (2, 1)], 10), TruncatedLaurentSeries.zero(8))
    assert s.precision == 8
    assert series_valuation(s) == AtLeast(8)


@pytest.mark.parametrize(
    "s, v",
    [
        (series_make([(2, 1), (3, -1)], 8), Exact(2)),
        (TruncatedLaurentSeries.zero(8), AtLeast(8)),
        (series_make([(-1, 1)], 4), Exact(-1)),
    ],
)
def test_valuation_examples(s, v):
    assert series_valuation(s) == v


def test_immutable():
    s = series_make([(0, 1)], 3)
    with pytest.raises(AttributeError):
        s.precision = 5


# -- properties ---------------------------------------------------------------

coeff = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def series(draw, min_lead=-3, max_prec=10):
    lead = draw(st.integers(min_lead, 3))
    prec = draw(st.integers(lead + 1, max_prec))
    cs = draw(st.lists(coeff, min_size=prec - lead, max_size=prec - lead))
    return TruncatedLaurentSeries(lead, cs, prec)


@settings(max_examples=200, deadline=None)
@given(series(), series())
def test_valuation_additive_on_exact(a, b):
    va, vb = series_valuation(a), series_valuation(b)
    p = series_mul(a, b)
    if va.exact and vb.exact and p.precision > va.value + vb.value:
        assert series_valuation(p) == Exact(va.value + vb.value)


@settings(max_examples=200, deadline=None)
@given(series(), series())
def test_valuation_of_sum_at_least_min(a, b):
    va, vb = series_valuation(a), series_valuation(b)
    assert series_valuation(a + b).value >= min(va.value, vb.value)


@st.composite
def series_pair_with_refinement(draw):
    """A series and a higher-precision series agreeing on the shared window."""
    coarse = draw(series())
    extra = draw(st.integers(1, 5))
    tail = draw(st.lists(coeff, min_size=extra, max_size=extra))
    fine = TruncatedLaurentSeries(coarse.lead_exp, coarse.coeffs + tuple(tail), coarse.precision + extra)
    return coarse, fine


@settings(max_examples=200, deadline=None)
@given(series_pair_with_refinement(), series_pair_with_refinement())
def test_precision_never_overstated(p, q):
    (a, a_fine), (b, b_fine) = p, q
    for coarse, fine in ((a + b, a_fine + b_fine), (a * b, a_fine * b_fine)):
        assert fine.precision >= coarse.precision
        for k in range(coarse.lead_exp, coarse.precision):
            assert coarse[k] == fine[k]
