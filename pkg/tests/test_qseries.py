"""Series arithmetic: explicit examples plus randomized ring axioms."""

import pytest
from hypothesis import assume, given, settings, strategies as st

from qleech.qseries import (
    LaurentSeries,
    NonUnitError,
    TruncationError,
    euler_product,
    euler_product_pentagonal,
)

coeffs_st = st.lists(st.integers(min_value=-9, max_value=9), min_size=0, max_size=6)


@st.composite
def series_st(draw):
    valuation = draw(st.integers(min_value=-4, max_value=4))
    return LaurentSeries.from_coeffs(valuation, draw(coeffs_st))


@st.composite
def unit_series_st(draw):
    valuation = draw(st.integers(min_value=-4, max_value=4))
    lead = draw(st.sampled_from((1, -1)))
    tail = draw(st.lists(st.integers(min_value=-9, max_value=9), max_size=5))
    return LaurentSeries.from_coeffs(valuation, [lead] + tail)


def test_coeff_values():
    s = LaurentSeries.from_coeffs(0, [1, -1])
    assert s.coeff(0) == 1
    assert s.coeff(1) == -1
    assert s.coeff(-3) == 0


def test_coeff_beyond_truncation_raises():
    s = LaurentSeries.from_coeffs(0, [1, -1])
    with pytest.raises(TruncationError):
        s.coeff(2)
    with pytest.raises(TruncationError):
        LaurentSeries.zero(5).coeff(5)


def test_zero_series_shape():
    z = LaurentSeries.from_coeffs(2, [0, 0, 0])
    assert z.is_zero
    assert z.order == 5
    assert z.coeff(4) == 0


def test_valuation_tightening_on_build():
    s = LaurentSeries.from_coeffs(-2, [0, 0, 3, 1])
    assert s.valuation == 0
    assert s.order == 2
    assert s.coeffs == (3, 1)


def test_add_simple():
    a = LaurentSeries.from_coeffs(0, [1, 1])
    b = LaurentSeries.from_coeffs(0, [1, -1])
    s = a + b
    assert s.coeff(0) == 2 and s.coeff(1) == 0
    assert s.order == 2


def test_add_keeps_pole_and_positive_part():
    a = LaurentSeries.monomial(-1, order=2)
    b = LaurentSeries.monomial(1, order=2)
    s = a + b
    assert s.valuation == -1
    assert (s.coeff(-1), s.coeff(0), s.coeff(1)) == (1, 0, 1)


def test_add_cancellation_retightens_valuation():
    a = LaurentSeries.from_coeffs(0, [1, 2])
    b = LaurentSeries.from_coeffs(0, [-1, 5])
    s = a + b
    assert s.valuation == 1
    assert s.coeffs == (7,)


def test_add_full_cancellation_gives_zero():
    a = LaurentSeries.from_coeffs(1, [1, -24, 252])
    s = a + (-a)
    assert s.is_zero
    assert s.order == a.order


def test_mul_geometric_inverse():
    one_minus_q = LaurentSeries.from_coeffs(0, [1, -1] + [0] * 8)
    geometric = LaurentSeries.from_coeffs(0, [1] * 10)
    assert one_minus_q * geometric == LaurentSeries.one(10)


def test_mul_order_and_valuation_rule():
    a = LaurentSeries.from_coeffs(-1, [1, 2, 3])  # order 2
    b = LaurentSeries.from_coeffs(1, [4, 5])  # order 3
    p = a * b
    assert p.valuation == 0
    assert p.order == min(a.order + b.valuation, b.order + a.valuation)
    assert p.coeff(0) == 4
    assert p.coeff(1) == 13


def test_mul_by_zero_series():
    z = LaurentSeries.zero(3)
    b = LaurentSeries.from_coeffs(1, [2, 7])
    p = z * b
    assert p.is_zero
    assert p.order == 3 + b.valuation


def test_scalar_mul():
    a = LaurentSeries.from_coeffs(0, [1, -1])
    assert (3 * a).coeffs == (3, -3)
    assert (0 * a).is_zero


def test_pow_square():
    a = LaurentSeries.from_coeffs(0, [1, -1, 0])
    sq = a**2
    assert (sq.coeff(0), sq.coeff(1), sq.coeff(2)) == (1, -2, 1)


def test_pow_zero_is_one():
    a = LaurentSeries.from_coeffs(2, [5, 1, 1])
    assert a**0 == LaurentSeries.one(a.order - a.valuation)


def test_pow_negative_rejected():
    with pytest.raises(ValueError):
        LaurentSeries.one(4) ** -1


def test_invert_one():
    assert LaurentSeries.one(5).invert() == LaurentSeries.one(5)


def test_invert_geometric():
    a = LaurentSeries.from_coeffs(0, [1, -1, 0, 0])
    assert a.invert().coeffs == (1, 1, 1, 1)


def test_invert_negative_unit():
    a = LaurentSeries.from_coeffs(0, [-1, 3])
    inv = a.invert()
    assert (a * inv) == LaurentSeries.one(2)


def test_invert_shifts_valuation():
    a = LaurentSeries.from_coeffs(1, [1, -24, 252])
    inv = a.invert()
    assert inv.valuation == -1
    assert inv.coeff(-1) == 1
    assert a * inv == LaurentSeries.one(3)


def test_invert_non_unit_rejected():
    with pytest.raises(NonUnitError):
        LaurentSeries.from_coeffs(0, [2, 1]).invert()
    with pytest.raises(NonUnitError):
        LaurentSeries.zero(4).invert()


def test_truncate_and_extend():
    a = LaurentSeries.from_coeffs(0, [1, 2, 3, 4])
    t = a.truncate(2)
    assert t.coeffs == (1, 2)
    with pytest.raises(TruncationError):
        t.truncate(3)


def test_truncate_below_valuation_gives_zero():
    a = LaurentSeries.from_coeffs(3, [7])
    t = a.truncate(1)
    assert t.is_zero and t.order == 1


def test_shift():
    a = LaurentSeries.from_coeffs(0, [1, -24])
    s = a.shift(1)
    assert s.valuation == 1 and s.order == 3
    assert s.coeff(1) == 1


# -- the two Euler product routes ---------------------------------------------


def test_euler_product_order_two():
    assert euler_product(2).coeffs == (1, -1)
    assert euler_product_pentagonal(2).coeffs == (1, -1)


def test_euler_product_first_terms():
    # direct product expansion: 1 - q - q^2 + q^5 + q^7 - q^12 ...
    e = euler_product(13)
    assert e.coeffs == (1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1)


def test_pentagonal_exponents_below_16():
    e = euler_product_pentagonal(16)
    support = {m for m, c in e.coefficients().items() if c != 0}
    assert support == {0, 1, 2, 5, 7, 12, 15}


def test_order_must_be_positive():
    with pytest.raises(ValueError):
        euler_product(0)
    with pytest.raises(ValueError):
        euler_product_pentagonal(-3)


@pytest.mark.parametrize("order", [1, 2, 50, 200, 500])
def test_euler_routes_agree(order):
    assert euler_product(order) == euler_product_pentagonal(order)


# -- randomized algebraic properties ------------------------------------------


@given(series_st(), series_st())
def test_add_commutes(a, b):
    assert a + b == b + a


@given(series_st(), series_st())
def test_mul_commutes(a, b):
    assert a * b == b * a


@settings(deadline=None)
@given(series_st(), series_st(), series_st())
def test_mul_associates(a, b, c):
    assert (a * b) * c == a * (b * c)


@settings(deadline=None)
@given(series_st(), series_st(), series_st())
def test_mul_distributes_to_common_truncation(a, b, c):
    lhs = a * (b + c)
    rhs = a * b + a * c
    order = min(lhs.order, rhs.order)
    assert lhs.truncate(order) == rhs.truncate(order)


@given(series_st(), series_st())
def test_add_truncation_monotone(a, b):
    order = min(a.order, b.order) - 2
    assert (a + b).truncate(order) == a.truncate(order) + b.truncate(order)


@settings(deadline=None)
@given(series_st(), series_st(), st.integers(min_value=0, max_value=3))
def test_mul_truncation_monotone(a, b, drop):
    assume(not a.is_zero and not b.is_zero)
    order = (a * b).order - drop
    at = a.truncate(order - b.valuation)
    bt = b.truncate(order - a.valuation)
    assume(not at.is_zero and not bt.is_zero)
    assert at * bt == (a * b).truncate(order)


@settings(deadline=None)
@given(series_st(), st.integers(min_value=1, max_value=8))
def test_pow_matches_repeated_mul(a, k):
    by_mul = a
    for _ in range(k - 1):
        by_mul = by_mul * a
    assert a**k == by_mul


@given(unit_series_st())
def test_invert_roundtrip(a):
    assert a * a.invert() == LaurentSeries.one(a.order - a.valuation)
