from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fockcat.series import (
    ONE,
    T,
    ZERO,
    IrrationalError,
    LaurentPoly,
    PoleError,
    QSeries,
    quantum_int,
    series_geom_inverse,
    specialize_t,
)

coeffs = st.one_of(st.integers(-5, 5), st.fractions(-5, 5, max_denominator=4))
laurents = st.dictionaries(st.integers(-6, 6), coeffs, max_size=5).map(LaurentPoly)
t_laurents = st.dictionaries(st.integers(-3, 3).map(lambda k: 2 * k), coeffs, max_size=4).map(
    LaurentPoly
)


def series_of(order, scalars=laurents):
    return st.dictionaries(st.integers(0, order + 2), scalars, max_size=5).map(
        lambda d: QSeries(d, order)
    )


# -- quantum integers ------------------------------------------------------


def test_quantum_int_small_values():
    assert quantum_int(0) == ZERO
    assert quantum_int(1) == ONE
    assert quantum_int(3) == 1 + T + T * T
    assert str(quantum_int(3)) == "1 + t + t^2"


def test_quantum_int_rejects_negative():
    with pytest.raises(ValueError):
        quantum_int(-1)


@given(st.integers(0, 12))
def test_quantum_int_times_t_minus_one(k):
    # (t - 1)[k] = t^k - 1
    assert (T - 1) * quantum_int(k) == LaurentPoly.t_power(k) - 1


def test_quantum_int_generating_function():
    # sum [k+1] x^k = 1/((1-x)(1-tx)), checked as series in x = u
    order = 9
    lhs = QSeries({k: quantum_int(k + 1) for k in range(order)}, order)
    rhs = series_geom_inverse(1, ONE, order) * series_geom_inverse(1, T, order)
    assert lhs == rhs


# -- Laurent polynomials -----------------------------------------------------


@settings(max_examples=60)
@given(laurents, laurents, laurents)
def test_laurent_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a + b == b + a
    assert a - a == ZERO


@given(laurents)
def test_bar_is_an_involution(a):
    assert a.bar().bar() == a


@given(laurents)
def test_laurent_json_roundtrip(a):
    assert LaurentPoly.from_json(a.to_json()) == a


def test_half_integer_powers_print():
    assert str(LaurentPoly.s_power(3)) == "t^(3/2)"
    assert str(LaurentPoly.t_power(-1)) == "t^-1"
    assert str(LaurentPoly.t_power(Fraction(-1, 2))) == "t^(-1/2)"
    assert str(LaurentPoly({2: Fraction(1, 2)})) == "1/2*t"


def test_zero_coefficients_are_dropped():
    assert LaurentPoly({0: 0, 2: 0}).is_zero()
    assert LaurentPoly({2: Fraction(4, 2)}).coeff_t(1) == 2
    assert isinstance(LaurentPoly({2: Fraction(4, 2)}).coeff_t(1), int)


def test_t_power_rejects_third():
    with pytest.raises(ValueError):
        LaurentPoly.t_power(Fraction(1, 3))


# -- truncated q-series --------------------------------------------------------


def test_geom_inverse_examples():
    assert series_geom_inverse(2, ONE, 7) == QSeries({0: 1, 2: 1, 4: 1, 6: 1}, 7)
    assert series_geom_inverse(2, T, 5) == QSeries({0: 1, 2: T, 4: T * T}, 5)
    assert series_geom_inverse(1, ONE, 3) == QSeries({0: 1, 1: 1, 2: 1}, 3)


def test_geom_inverse_rejects_bad_exponent():
    with pytest.raises(ValueError):
        series_geom_inverse(0, ONE, 4)


@given(st.integers(1, 5), laurents, st.integers(1, 12))
def test_geom_inverse_is_inverse(e, c, order):
    one_minus = QSeries({0: 1, e: -c}, order)
    assert one_minus * series_geom_inverse(e, c, order) == QSeries.one(order)


def test_truncation_drops_terms_at_order():
    s = QSeries({0: 1, 3: 5, 4: 7}, 4)
    assert s.coeff_u(3) == 5
    with pytest.raises(ValueError):
        s.coeff_u(4)
    assert s == QSeries({0: 1, 3: 5}, 4)


def test_mixed_orders_take_the_minimum():
    a = QSeries({0: 1, 5: 1}, 8)
    b = QSeries({0: 1}, 4)
    assert (a + b).order == 4
    assert (a * b).order == 4
    assert (a + b) == QSeries({0: 2}, 4)


@settings(max_examples=40)
@given(series_of(6), series_of(6), series_of(5))
def test_series_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a


def test_series_printing():
    s = QSeries({0: 1, 2: 1 + T, 4: 3 + 3 * T + T * T}, 6)
    assert str(s) == "1 + (1+t)q + (3+3t+t^2)q^2 + O(q^3)"
    assert str(QSeries({1: 1}, 5)) == "q^(1/2) + O(q^(5/2))"
    assert str(QSeries.one(2)) == "1 + O(q)"


# -- specialization ------------------------------------------------------------


def test_specialize_examples():
    s = QSeries({0: 1, 2: 1 + T}, 4)
    assert specialize_t(s, 0) == QSeries({0: 1, 2: 1}, 4)
    assert specialize_t(s, 1) == QSeries({0: 1, 2: 2}, 4)
    with pytest.raises(PoleError):
        specialize_t(QSeries({2: LaurentPoly.t_power(-1)}, 4), 0)


def test_specialize_half_powers():
    s = QSeries({2: LaurentPoly.s_power(1)}, 4)
    assert specialize_t(s, 4) == QSeries({2: 2}, 4)
    assert specialize_t(s, Fraction(9, 4)) == QSeries({2: Fraction(3, 2)}, 4)
    with pytest.raises(IrrationalError):
        specialize_t(s, 2)


@settings(max_examples=40)
@given(series_of(5, t_laurents), series_of(5, t_laurents), st.sampled_from([-3, -2, -1, 1, 2, 3]))
def test_specialize_is_a_ring_map(a, b, v):
    assert specialize_t(a * b, v) == specialize_t(a, v) * specialize_t(b, v)
    assert specialize_t(a + b, v) == specialize_t(a, v) + specialize_t(b, v)
