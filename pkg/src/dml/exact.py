"""Exact rational helpers built on gmpy2.

Every closed-form moment in the package is an ``mpq``.  This module holds
the small amount of glue needed around it: coercion, "p/q" parsing and
formatting, Pochhammer symbols and conversion to mpmath numbers.
"""

from fractions import Fraction
from numbers import Integral

import gmpy2
from gmpy2 import mpq, mpz
from mpmath.libmp import from_rational, round_nearest

__all__ = [
    "mpq",
    "mpz",
    "as_rational",
    "parse_rational",
    "format_rational",
    "pochhammer",
    "rising",
    "falling",
    "binomial",
    "to_mpf",
]

_MPQ = type(mpq(0))
_MPZ = type(mpz(0))


def as_rational(x):
    """Coerce ``x`` to an exact ``mpq``.

    Integers, ``Fraction``, ``mpz``/``mpq`` and "p/q" strings are accepted.
    Floats are rejected because they rarely mean what the caller intends.
    """
    if isinstance(x, _MPQ):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, (Integral, _MPZ)):
        return mpq(int(x))
    if isinstance(x, Fraction):
        return mpq(x.numerator, x.denominator)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def parse_rational(text: str):
    """Parse ``"p/q"`` or an integer string into an ``mpq``.

    Decimal points are refused on purpose; exact inputs travel as ratios.
    """
    s = text.strip()
    if not s:
        raise ValueError("empty rational string")
    if "." in s or "e" in s.lower():
        raise ValueError(f"not an exact rational: {text!r}")
    if "/" in s:
        p, q = s.split("/", 1)
        num, den = int(p), int(q)
        if den == 0:
            raise ZeroDivisionError(f"zero denominator in {text!r}")
        return mpq(num, den)
    return mpq(int(s))


def format_rational(q) -> str:
    """Render an ``mpq`` as ``"p/q"`` (or ``"p"`` when integral)."""
    q = as_rational(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def rising(x, m: int):
    """Ascending Pochhammer symbol ``x (x+1) ... (x+m-1)``."""
    if m < 0:
        raise ValueError("Pochhammer length must be nonnegative")
    x = as_rational(x)
    out = mpq(1)
    for i in range(m):
        out *= x + i
    return out


def falling(x, m: int):
    """Descending Pochhammer symbol ``x (x-1) ... (x-m+1)``."""
    if m < 0:
        raise ValueError("Pochhammer length must be nonnegative")
    x = as_rational(x)
    out = mpq(1)
    for i in range(m):
        out *= x - i
    return out


def pochhammer(x, m: int, direction: str = "ascending"):
    """Pochhammer symbol in either direction.

    Parameters
    ----------
    x : rational-like
    m : int
        Number of factors, ``m >= 0``.
    direction : {"ascending", "descending"}

    Examples
    --------
    >>> pochhammer(mpq(3, 2), 2)
    mpq(15,4)
    """
    if direction == "ascending":
        return rising(x, m)
    if direction == "descending":
        return falling(x, m)
    raise ValueError(f"unknown direction {direction!r}")


def rising_table(x, m: int) -> list:
    """Return ``[(x)_0, (x)_1, ..., (x)_m]``."""
    x = as_rational(x)
    out = [mpq(1)]
    for i in range(m):
        out.append(out[-1] * (x + i))
    return out


def binomial(n: int, k: int):
    return gmpy2.comb(n, k)


def to_mpf(q, ctx):
    """Correctly rounded conversion of an ``mpq`` into the mpmath context ``ctx``."""
    q = as_rational(q)
    return ctx.make_mpf(from_rational(int(q.numerator), int(q.denominator), ctx.prec, round_nearest))
