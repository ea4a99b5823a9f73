"""Exact determinantal moments of random 4x4 (and some 6x6) density matrices.

The central objects are the Hilbert-Schmidt moments of ``|rho|`` and of the
partial-transpose determinant ``|rho^PT|`` for the one-parameter family
indexed by ``alpha`` (``1/2`` real, ``1`` complex, ``2`` presumably
quaternionic).  All results are exact ``mpq`` values.

Notation: ``f0(alpha, k) = <|rho|^k>`` and
``f1(alpha, n, k) = <|rho^PT|^n |rho|^k> / <|rho|^k>``.
"""

from functools import lru_cache
from math import factorial

from .exact import as_rational, binomial, mpq, rising, rising_table
from .polynomial import RationalPolynomial, interpolate

HALF = mpq(1, 2)

__all__ = [
    "f0_det_moment",
    "f1_adjustment",
    "bivariate_moment",
    "pt_moment",
    "product_moment",
    "classical_product_moment",
    "r_ratio",
    "f2_central_adjustment",
    "denominator_value",
    "numerator_polynomial",
    "leading_coefficients_rebit",
    "sixbysix_adjustment",
    "nongeneric_delta",
    "nongeneric_moment",
    "nongeneric_brute_oracle",
    "nongeneric_first_moment",
    "transformed_unit_interval_factor",
    "terminating_hypergeometric",
    "f1_hypergeometric",
    "product_moment_hypergeometric",
    "pt_moment_hypergeometric",
]


def _alpha(alpha):
    a = as_rational(alpha)
    if a < 0:
        raise ValueError("alpha must be nonnegative")
    return a


def _nonneg_int(name, v):
    if isinstance(v, bool) or int(v) != v or v < 0:
        raise ValueError(f"{name} must be a nonnegative integer, got {v!r}")
    return int(v)


@lru_cache(maxsize=None)
def _f0(a, k):
    num = factorial(k) * rising(a + 1, k) * rising(2 * a + 1, k)
    den = mpq(2) ** (6 * k) * rising(3 * a + mpq(3, 2), k) * rising(6 * a + mpq(5, 2), 2 * k)
    return num / den


def f0_det_moment(alpha, k: int):
    """Hilbert-Schmidt moment ``<|rho|^k>``.

    Parameters
    ----------
    alpha : rational-like
        Family parameter, ``alpha >= 0``.
    k : int

    Returns
    -------
    mpq
    """
    return _f0(_alpha(alpha), _nonneg_int("k", k))


@lru_cache(maxsize=None)
def _f1(a, n, k, base3):
    if n == 0:
        return mpq(1)
    pa = rising_table(a, n)
    pb = rising_table(a + HALF, n)
    pc = rising_table(-2 * k - 2 * n - 1 - 5 * a, n)
    pd = rising_table(k + 1 + a, n)
    pe = rising_table(base3, n)
    total = mpq(0)
    for j in range(n + 1):
        m = n - j
        # (k-j+1)_{n-j} is an integer for integer k and vanishes often
        head = rising(k - j + 1, m)
        if head == 0:
            continue
        total += 4**j * binomial(n, j) * pa[j] * pb[j] * pc[j] * head * pd[m] * pe[m]
    pre = mpq(2) ** (6 * n) * rising(k + 3 * a + mpq(3, 2), n) * rising(2 * k + 6 * a + mpq(5, 2), 2 * n)
    return total / pre


def f1_adjustment(alpha, n: int, k, *, third_base=None):
    """Ratio ``<|rho^PT|^n |rho|^k> / <|rho|^k>`` as a finite sum.

    Parameters
    ----------
    alpha : rational-like
    n : int
        Power of the partial-transpose determinant.
    k : rational-like
        Power of ``|rho|``; usually a nonnegative integer but any rational
        is accepted, which is what numerator extraction relies on.
    third_base : rational-like, optional
        Override for the base of the last ``(n-j)``-indexed Pochhammer
        factor.  The default ``k + 1 + 2 alpha`` is the right one; the
        override exists so the alternative ``k + 2 + alpha`` can be shown
        to fail.

    Returns
    -------
    mpq
    """
    a = _alpha(alpha)
    n = _nonneg_int("n", n)
    k = as_rational(k)
    base3 = k + 1 + 2 * a if third_base is None else as_rational(third_base)
    return _f1(a, n, k, base3)


def bivariate_moment(alpha, n: int, k: int):
    """``<|rho|^k |rho^PT|^n>`` under the Hilbert-Schmidt measure."""
    return f1_adjustment(alpha, n, k) * f0_det_moment(alpha, k)


def pt_moment(alpha, n: int):
    """``<|rho^PT|^n>``."""
    return bivariate_moment(alpha, n, 0)


def product_moment(alpha, n: int):
    """``<(|rho| |rho^PT|)^n>``."""
    return bivariate_moment(alpha, n, n)


def classical_product_moment(n: int):
    """Closed form of ``product_moment(0, n)`` from double factorial products."""
    n = _nonneg_int("n", n)
    num = mpq(factorial(2 * n)) ** 3
    return num / (mpq(4096) ** n * rising(mpq(3, 2), 2 * n) * rising(mpq(5, 2), 4 * n))


def r_ratio(alpha, n: int, k: int):
    """``f0(alpha, n+k) / f0(alpha, k)``."""
    return f0_det_moment(alpha, n + k) / f0_det_moment(alpha, k)


def f2_central_adjustment(alpha, n: int, k: int):
    """``<|rho|^k (|rho^PT| - |rho|)^n> / <|rho|^k>`` by binomial expansion."""
    n = _nonneg_int("n", n)
    k = _nonneg_int("k", k)
    total = mpq(0)
    for j in range(n + 1):
        sign = -1 if (n - j) % 2 else 1
        total += sign * binomial(n, j) * f1_adjustment(alpha, j, k + n - j) * r_ratio(alpha, n - j, k)
    return total


# -- numerator polynomials -------------------------------------------------

_FAMILIES = {"rebit": HALF, "qubit": mpq(1)}


def _family_alpha(family):
    if isinstance(family, str) and family in _FAMILIES:
        return _FAMILIES[family]
    return _alpha(family)


def denominator_value(family, n: int, k):
    """Conventional denominator ``B_n`` of the rational function ``f1 = A_n / B_n``.

    The real family uses ``128^n`` in front, the others ``2^(6n)``; the
    remaining Pochhammer factors follow the general-alpha shape.
    """
    a = _family_alpha(family)
    k = as_rational(k)
    scale = mpq(128) ** n if family == "rebit" else mpq(2) ** (6 * n)
    return scale * rising(k + 3 * a + mpq(3, 2), n) * rising(2 * k + 6 * a + mpq(5, 2), 2 * n)


def numerator_polynomial(family, n: int) -> RationalPolynomial:
    """Numerator ``A_n(k)`` of ``f1(alpha, n, k)`` in ascending powers of ``k``.

    Parameters
    ----------
    family : {"rebit", "qubit"} or rational-like alpha
    n : int
        ``n >= 1``.

    Raises
    ------
    ArithmeticError
        If the interpolant through ``3n+1`` nodes fails to reproduce the
        next two values, meaning ``A_n`` is not of degree ``3n``.
    """
    n = _nonneg_int("n", n)
    if n < 1:
        raise ValueError("n must be >= 1")
    a = _family_alpha(family)

    def value(k):
        return f1_adjustment(a, n, k) * denominator_value(family, n, k)

    nodes = list(range(3 * n + 1))
    poly = interpolate(nodes, [value(k) for k in nodes])
    for extra in (3 * n + 1, 3 * n + 2):
        if poly(extra) != value(extra):
            raise ArithmeticError(f"numerator for n={n} is not a degree-{3 * n} polynomial")
    return poly


def leading_coefficients_rebit(n: int, depth: int):
    """Closed-form top coefficients of the real-family numerator.

    ``depth`` 0 gives the leading coefficient (of ``k^(3n)``), depth 1 the
    next one, and so on down to depth 5 (coefficient of ``k^(3n-5)``).
    """
    n = _nonneg_int("n", n)
    if n < 1:
        raise ValueError("n must be >= 1")
    if not 0 <= depth <= 5:
        raise ValueError("depth must lie in 0..5")
    if depth > 3 * n:
        raise ValueError(f"the numerator for n={n} has no coefficient at depth {depth}")
    if depth >= 4 and n < 2:
        raise ValueError("depths 4 and 5 need n >= 2")
    p2 = mpq(2) ** n
    N = mpq(n)
    if depth == 0:
        return p2
    if depth == 1:
        return 3 * p2 / 2 * N * (N + 2)
    if depth == 2:
        return p2 / 8 * N * (N * (N * (9 * N + 32) + 24) - 45)
    if depth == 3:
        return p2 / 16 * N * (N * (N * (N * (9 * N**2 + 42 * N + 52) - 119) - 52) - 60)
    if depth == 4:
        inner = 135 * N**7 + 855 * N**6 + 1895 * N**5 - 1771 * N**4 - 3091 * N**3 - 7731 * N**2 + 32394 * N
        return p2 / 128 / 5 * (N - 1) * inner
    inner = 3 * N * (3 * N * (9 * N + 59) + 377) - 2887
    for c in (-2295, -10535, 112240, -181492, 436720):
        inner = N * inner + c
    return p2 / 256 / 5 * (N - 1) * N * inner


# -- 6x6 systems -----------------------------------------------------------

def _poly(coeffs_desc, k):
    acc = mpq(0)
    for c in coeffs_desc:
        acc = acc * k + c
    return acc


def sixbysix_adjustment(kind: str, n: int, k: int):
    """``<|rho|^k |rho^PT|^n> / <|rho|^k>`` for 6x6 systems.

    Only ``("rebit_retrit", 1)``, ``("rebit_retrit", 2)`` and
    ``("qubit_qutrit", 1)`` are known in closed form.
    """
    k = as_rational(_nonneg_int("k", k))
    if kind == "rebit_retrit" and n == 1:
        num = _poly([4, 40, 95, -220, -1149, -1170], k)
        den = 576 * (k + 4) * (3 * k + 11) * (3 * k + 13) * (6 * k + 23) * (6 * k + 25)
        return num / den
    if kind == "rebit_retrit" and n == 2:
        num = _poly([16, 336, 2616, 8496, 12069, 101979, 903539, 3316809, 5620320, 3715740], k)
        den = 331776 * (k + 5)
        for f in ((3, 11), (3, 13), (3, 14), (3, 16), (6, 23), (6, 25), (6, 29), (6, 31)):
            den *= f[0] * k + f[1]
        return num / den
    if kind == "qubit_qutrit" and n == 1:
        num = _poly([1, 15, 37, -423, -2558, -3840], k)
        den = 72 * (2 * k + 13) * (3 * k + 19) * (3 * k + 20) * (6 * k + 37) * (6 * k + 41)
        return num / den
    raise ValueError(f"no closed form for ({kind}, n={n})")


# -- the non-generic family ------------------------------------------------
# Only the (2,3) off-diagonal pair survives; its entry lives in R^beta.

def nongeneric_delta(beta, k: int):
    """``<|rho|^k>`` for the non-generic family."""
    b = as_rational(beta)
    k = _nonneg_int("k", k)
    return mpq(factorial(k)) ** 3 * rising(1 + b / 2, k) / rising(4 + b, 4 * k)


def nongeneric_moment(beta, n: int, k: int):
    """``<|rho^PT|^n |rho|^k>`` for the non-generic family (terminating 4F3 form)."""
    b = as_rational(beta)
    if b <= 0:
        raise ValueError("beta must be positive")
    n = _nonneg_int("n", n)
    k = _nonneg_int("k", k)
    c = k + 1 + b / 2
    pre = rising(k + 1, n) ** 2 * rising(c, n) ** 2 / rising(4 + b + 4 * k, 4 * n)
    series = terminating_hypergeometric([-n, c + n, c + n, b / 2], [-k - n, -k - n, c])
    return nongeneric_delta(b, k) * pre * series


def nongeneric_brute_oracle(beta, n: int, k: int):
    """Same quantity as :func:`nongeneric_moment` from the raw double sum."""
    b = as_rational(beta)
    n = _nonneg_int("n", n)
    k = _nonneg_int("k", k)
    total = mpq(0)
    for i in range(n + 1):
        for j in range(n + 1):
            term = binomial(n, i) * binomial(n, j) * rising(k + 1, n - j) ** 2
            term *= rising(k + 1 + b / 2, n + j) * rising(k + 1, n - i) * rising(b / 2, i + j)
            total += -term if j % 2 else term
    return nongeneric_delta(b, k) * total / rising(4 + b + 4 * k, 4 * n)


def nongeneric_first_moment(beta, k: int):
    """Closed form of ``nongeneric_moment(beta, 1, k)``."""
    b = as_rational(beta)
    k = as_rational(_nonneg_int("k", k))
    inner = (k + 1) ** 2 * (2 * k + 2 + b) - b * (2 * k + 4 + b) ** 2 / 4
    return nongeneric_delta(b, int(k)) / rising(4 + b + 4 * k, 4) * (2 * k + 2 + b) / 4 * inner


# -- unit-interval variables -----------------------------------------------

def transformed_unit_interval_factor(alpha, k: int, order: int = 1):
    """``<T_rho^k T_PT^order> / <T_rho^k>`` with ``T_rho = 256|rho|``, ``T_PT = (256|rho^PT| + 16)/17``.

    Both variables then live on ``[0, 1]``.  Only ``order`` 1 and 2 are
    offered; the expansion is exact linearity over :func:`f1_adjustment`.
    """
    if order not in (1, 2):
        raise ValueError("order must be 1 or 2")
    total = mpq(0)
    for j in range(order + 1):
        # (256 V + 16)^order, binomially expanded
        total += binomial(order, j) * mpq(256) ** j * mpq(16) ** (order - j) * f1_adjustment(alpha, j, k)
    return total / mpq(17) ** order


# -- hypergeometric oracles ------------------------------------------------

def terminating_hypergeometric(upper, lower):
    """Sum a terminating pFq series at unit argument, exactly.

    The series stops at the first vanishing upper parameter.  A vanishing
    lower parameter reached earlier is an error.
    """
    upper = [as_rational(u) for u in upper]
    lower = [as_rational(v) for v in lower]
    total = mpq(0)
    term = mpq(1)
    j = 0
    while True:
        total += term
        num = mpq(1)
        for u in upper:
            num *= u + j
        if num == 0:
            return total
        den = mpq(j + 1)
        for v in lower:
            den *= v + j
        if den == 0:
            raise ZeroDivisionError("lower parameter hits zero before the series terminates")
        term = term * num / den
        j += 1
        if j > 100000:
            raise ArithmeticError("series does not terminate")


def f1_hypergeometric(alpha, n: int, k: int):
    """Independent 5F4 evaluation of :func:`f1_adjustment`; valid for ``k >= n``."""
    a = _alpha(alpha)
    n = _nonneg_int("n", n)
    k = _nonneg_int("k", k)
    if k < n:
        raise ValueError("the 5F4 form drops terms when k < n")
    pre = rising(k + 1, n) * rising(k + 1 + a, n) * rising(k + 1 + 2 * a, n)
    pre /= mpq(2) ** (6 * n) * rising(k + 3 * a + mpq(3, 2), n) * rising(2 * k + 6 * a + mpq(5, 2), 2 * n)
    series = terminating_hypergeometric(
        [-n, -k, a, a + HALF, -2 * k - 2 * n - 1 - 5 * a],
        [-k - n - a, -k - n - 2 * a, mpq(-(k + n), 2), mpq(-(k + n - 1), 2)],
    )
    return pre * series


def product_moment_hypergeometric(alpha, n: int):
    """Independent 4F3 evaluation of :func:`product_moment`."""
    a = _alpha(alpha)
    n = _nonneg_int("n", n)
    pre = factorial(2 * n) * rising(1 + a, 2 * n) * rising(1 + 2 * a, 2 * n)
    pre /= mpq(2) ** (12 * n) * rising(3 * a + mpq(3, 2), 2 * n) * rising(6 * a + mpq(5, 2), 4 * n)
    series = terminating_hypergeometric(
        [-n, a, a + HALF, -4 * n - 1 - 5 * a],
        [-2 * n - a, -2 * n - 2 * a, HALF - n],
    )
    return pre * series


def pt_moment_hypergeometric(alpha, n: int):
    """Independent evaluation of :func:`pt_moment` as a sum of two pieces.

    For ``n = 1`` the series part degenerates (a lower parameter vanishes)
    and is taken to be 1.
    """
    a = _alpha(alpha)
    n = _nonneg_int("n", n)
    if n == 0:
        return mpq(1)
    den = rising(3 * a + mpq(3, 2), n) * rising(6 * a + mpq(5, 2), 2 * n)
    first = factorial(n) * rising(a + 1, n) * rising(2 * a + 1, n) / (mpq(2) ** (6 * n) * den)
    second = rising(-2 * n - 1 - 5 * a, n) * rising(a, n) * rising(a + HALF, n) / (mpq(2) ** (4 * n) * den)
    if n == 1:
        series = mpq(1)
    else:
        series = terminating_hypergeometric(
            [mpq(-(n - 2), 2), mpq(-(n - 1), 2), -n, a + 1, 2 * a + 1],
            [1 - n, n + 2 + 5 * a, 1 - n - a, HALF - n - a],
        )
    return first + second * series
