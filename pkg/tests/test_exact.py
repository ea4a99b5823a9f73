from fractions import Fraction as Fr

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dml.exact import as_rational, format_rational, mpq, parse_rational, to_mpf
from dml.polynomial import RationalPolynomial, interpolate, linear
from dml.precision import context, default_digits

fractions = st.fractions(min_value=-50, max_value=50, max_denominator=30)


def test_parse_and_format():
    assert parse_rational("-1/858") == Fr(-1, 858)
    assert parse_rational("7") == 7
    assert format_rational(mpq(6, -4)) == "-3/2"
    assert format_rational(mpq(4, 2)) == "2"


@pytest.mark.parametrize("bad", ["0.5", "1/0", "abc", "1e3"])
def test_parse_rejects(bad):
    with pytest.raises((ValueError, ZeroDivisionError)):
        parse_rational(bad)


def test_floats_are_refused():
    with pytest.raises(TypeError):
        as_rational(0.5)


@given(fractions)
def test_roundtrip(q):
    assert parse_rational(format_rational(as_rational(q))) == q


def test_lowest_terms():
    q = as_rational("6/-4")
    assert (q.numerator, q.denominator) == (-3, 2)


def test_to_mpf_correctly_rounded():
    ctx = context(30)
    x = to_mpf(mpq(1, 3), ctx)
    assert abs(x - ctx.mpf(1) / 3) == 0


def test_private_context_leaves_global_alone():
    import mpmath

    before = mpmath.mp.dps
    context(80)
    assert mpmath.mp.dps == before


def test_precision_policy(monkeypatch):
    monkeypatch.delenv("DML_PRECISION_DIGITS", raising=False)
    assert default_digits(100) == 64
    assert default_digits(3310) == 115
    monkeypatch.setenv("DML_PRECISION_DIGITS", "40")
    assert default_digits(3310) == 40
    monkeypatch.setenv("DML_PRECISION_DIGITS", "10")
    with pytest.raises(ValueError):
        default_digits()


class TestPolynomial:
    def test_trailing_zeros_stripped(self):
        p = RationalPolynomial((1, 2, 0, 0))
        assert p.degree == 1 and p[5] == 0

    def test_zero(self):
        assert RationalPolynomial(()).degree == -1

    @given(st.lists(fractions, min_size=1, max_size=6), st.lists(fractions, min_size=1, max_size=6), fractions)
    def test_ring_operations(self, a, b, x):
        p, q = RationalPolynomial(tuple(a)), RationalPolynomial(tuple(b))
        assert (p * q)(x) == p(x) * q(x)
        assert (p + q)(x) == p(x) + q(x)
        assert (p - q)(x) == p(x) - q(x)

    @given(st.lists(fractions, min_size=1, max_size=7))
    def test_interpolation_recovers(self, coeffs):
        p = RationalPolynomial(tuple(coeffs))
        xs = list(range(len(coeffs)))
        assert interpolate(xs, [p(x) for x in xs]) == p

    def test_calculus(self):
        p = RationalPolynomial((1, 2, 3))
        assert p.derivative() == RationalPolynomial((2, 6))
        assert p.antiderivative().derivative() == p
        assert linear(2, 3)(Fr(1, 2)) == Fr(7, 2)
