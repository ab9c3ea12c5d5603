from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from truncated_tableaux.errors import ValuationMismatch
from truncated_tableaux.qseries import (
    ONE,
    QPoly,
    QRationalFn,
    QSeries,
    count_from_gf,
    expand,
    limit_at_one,
    qbinom,
    rational_from_series,
)

small_polys = st.lists(st.integers(-5, 5), max_size=6).map(lambda c: QPoly(tuple(c)))
factor_lists = st.lists(st.integers(1, 4), max_size=4)


def test_qpoly_basics():
    p = QPoly((1, 2, 0, 0))
    assert p.coeffs == (1, 2) and p.degree == 1
    assert QPoly().is_zero()
    assert QPoly.monomial(3, 2).coeffs == (0, 0, 3)
    assert QPoly.binomial(2, 0) == QPoly((-1, 0, 1))
    assert (QPoly((1, 1)) ** 2).coeffs == (1, 2, 1)
    assert QPoly((1, 1))(2) == 3


def test_qpoly_exact_division():
    a = QPoly((1, 2, 1))
    assert a.exact_div(QPoly((1, 1))) == QPoly((1, 1))
    with pytest.raises(ArithmeticError):
        QPoly((1, 0, 1)).exact_div(QPoly((1, 1)))


def test_split_one_minus_q():
    v, rest = (QPoly((1, -1)) ** 3 * QPoly((2, 1))).split_one_minus_q()
    assert v == 3 and rest == QPoly((2, 1))


def test_qbinom_values():
    assert qbinom(3, 1) == QPoly((1, 1, 1))
    assert qbinom(4, 2) == QPoly((1, 1, 2, 1, 1))
    assert qbinom(2, 3).is_zero()
    assert qbinom(5, 0) == ONE


@given(st.integers(0, 8), st.integers(0, 8))
def test_qbinom_at_one_is_binomial(a, b):
    from math import comb

    assert qbinom(a, b)(1) == (comb(a, b) if b <= a else 0)


def test_expand_examples():
    assert expand(QRationalFn.from_factors(ONE, [1]), 3).coeffs == (1, 1, 1, 1)
    assert expand(QRationalFn.from_factors(ONE, [1, 2]), 4).coeffs == (1, 1, 2, 2, 3)
    assert expand(QRationalFn.from_factors(QPoly((1, 1)), [3]), 3).coeffs == (1, 1, 0, 1)


def test_expand_with_extra_denominator():
    f = QRationalFn(ONE, {}, QPoly((1, -2)))
    assert expand(f, 4).coeffs == (1, 2, 4, 8, 16)


def test_limit_at_one_examples():
    assert limit_at_one(QRationalFn.from_factors(ONE, [1, 2]), 2) == Fraction(1, 2)
    assert limit_at_one(QRationalFn.from_factors(ONE, range(1, 6)), 5) == Fraction(1, 120)
    with pytest.raises(ValuationMismatch):
        limit_at_one(QRationalFn.from_factors(ONE, [2]), 2)


def test_count_from_gf_examples():
    assert count_from_gf(QRationalFn.from_factors(ONE, [1, 2]), 2) == 1
    assert count_from_gf(QRationalFn.from_factors(ONE, range(1, 6)), 5) == 1
    assert count_from_gf(QRationalFn.from_factors(ONE, [1, 1]), 2) == 2


def test_rational_from_series_recovers_numerator():
    f = QRationalFn.from_factors(QPoly((1, 0, 3)), [1, 2])
    g = rational_from_series(expand(f, 12), [1, 2], 4)
    assert g.num == f.num


def test_series_shift_and_truncate():
    s = QSeries((1, 2, 3), 4)
    assert s.shift(2).coeffs == (0, 0, 1, 2, 3)
    assert s.truncate(1).coeffs == (1, 2)
    assert s.times_one_minus_q_pow(1).divide_one_minus_q_pow(1) == s


@given(small_polys, small_polys, small_polys)
def test_qpoly_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == QPoly()


@given(small_polys, st.integers(0, 4))
def test_shift_is_multiplication_by_monomial(a, d):
    assert a.shift(d) == a * QPoly.monomial(1, d)
    assert a.shift(d).shift(-d) == a


@given(small_polys, st.integers(1, 4))
def test_divide_one_minus_q_pow_roundtrip(a, k):
    b = a * (ONE - QPoly.monomial(1, k))
    assert b.divide_one_minus_q_pow(k) == a


@given(small_polys, factor_lists, small_polys, factor_lists)
def test_expand_is_multiplicative(a, fa, b, fb):
    f, g = QRationalFn.from_factors(a, fa), QRationalFn.from_factors(b, fb)
    assert expand(f * g, 8) == expand(f, 8) * expand(g, 8)


@given(small_polys, factor_lists)
def test_rational_evaluation_matches_series_at_small_q(a, fa):
    f = QRationalFn.from_factors(a, fa)
    q = Fraction(1, 1000)
    s = expand(f, 30)
    partial = sum(Fraction(c) * q**d for d, c in enumerate(s.coeffs))
    assert abs(f(q) - partial) < Fraction(1, 10**40)
