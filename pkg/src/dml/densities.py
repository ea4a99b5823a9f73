"""Closed-form densities of ``t = 256 |rho|`` for real 4x4 states.

``hs_det_density`` is the Hilbert-Schmidt law and ``bures_det_density`` the
Bures law of the real ensemble.  Both vanish like ``(1 - t)^(7/2)`` at
``t = 1``; near that end the closed forms cancel badly, so short series in
``s = sqrt(1 - sqrt(t))`` (HS) and ``1 - sqrt(t)`` (Bures) take over.
"""

import math

import numpy as np
from scipy import integrate, optimize, special

from .exact import mpq, rising

_B27 = special.beta(2, 3.5)


def _check_t(t):
    t = float(t)
    if not 0 < t <= 1:
        raise ValueError(f"t must lie in (0, 1], got {t}")
    return t


def _hs_series(t, s):
    # 63 t * int_0^s u^6 / (1 - u^2)^3 du, expanded in u^2
    if s == 0:
        return 0.0
    acc, m, term = 0.0, 0, s**7
    while True:
        piece = (m + 1) * (m + 2) / 2 * term / (2 * m + 7)
        acc += piece
        if piece < 1e-18 * acc:
            break
        m += 1
        term *= s * s
    return 63 * t * acc


def hs_det_density(t: float) -> float:
    """Hilbert-Schmidt density of ``256 |rho|`` at ``t``.

    Examples
    --------
    >>> round(hs_det_density(0.5), 6)
    0.962398
    """
    t = _check_t(t)
    r = math.sqrt(t)
    s = math.sqrt(1 - r)
    if s < 0.35:
        return _hs_series(t, s)
    return 63 / 8 * (s * (-8 * t - 9 * r + 2) + 15 * t * math.log(s + 1) - 3.75 * t * math.log(t))


HS_LIMIT_AT_ZERO = 63 / 4


def _bures_series(t, delta):
    # (16 / (pi sqrt t)) * int_0^delta (delta - u) u^(3/2) (1 - u)^(-3/2) du
    if delta == 0:
        return 0.0
    acc, m, coef, dpow = 0.0, 0, 1.0, delta**3.5
    while True:
        piece = coef * dpow / ((m + 2.5) * (m + 3.5))
        acc += piece
        if abs(piece) < 1e-18 * abs(acc):
            break
        coef *= (m + 1.5) / (m + 1)  # binomial series of (1 - u)^(-3/2)
        m += 1
        dpow *= delta
    return 16 / (math.pi * math.sqrt(t)) * acc


def bures_det_density(t: float) -> float:
    """Bures density of ``256 |rho|`` (real states); behaves like ``6 / sqrt(t)`` at 0."""
    t = _check_t(t)
    r = math.sqrt(t)
    delta = 1 - r
    if delta < 0.3:
        return _bures_series(t, delta)
    core = 3 * math.pi * (4 * r + 1) - 4 * (13 + 2 * r) * math.sqrt(r - t) - 2 * (12 * r + 3) * math.asin(2 * r - 1)
    return core / (math.pi * r)


DENSITIES = {"hs": hs_det_density, "bures": bures_det_density}


def density_moment_exact(metric: str, n: int):
    """Exact ``int t^n f(t) dt`` for either metric."""
    if metric == "hs":
        return rising(4, 2 * n) * rising(2, 2 * n) / (rising(5, 2 * n) * rising(mpq(11, 2), 2 * n))
    if metric == "bures":
        return rising(mpq(3, 2), 2 * n) / ((n + 1) * (2 * n + 1) * rising(4, 2 * n))
    raise ValueError(f"unknown metric {metric!r}")


def _integrate(g, a=0.0, b=1.0):
    # u = sqrt(t) tames the t -> 0 end of both densities
    val, _ = integrate.quad(lambda u: 2 * u * g(u * u) if u > 0 else 0.0, math.sqrt(a), math.sqrt(b),
                            epsabs=1e-14, epsrel=1e-12, limit=400)
    return val


def density_moment(metric: str, n: int) -> float:
    """Numerical ``int_0^1 t^n f(t) dt``."""
    if n > 30:
        raise ValueError("n must be <= 30")
    f = DENSITIES[metric]
    return _integrate(lambda t: t**n * f(t))


def normalization(metric: str) -> float:
    return density_moment(metric, 0)


def product_density(f1, f2, epsrel: float = 1e-10):
    """Density of ``X1 X2`` for independent ``X1 ~ f1`` and ``X2 ~ f2`` on ``[0, 1]``.

    Returns a function ``f(x) = int_x^1 f1(s) f2(x/s) ds / s``.
    """

    def f(x):
        if not 0 < x <= 1:
            raise ValueError("x must lie in (0, 1]")
        if x == 1:
            return 0.0
        val, err = integrate.quad(lambda s: f1(s) * f2(x / s) / s, x, 1, epsabs=1e-13, epsrel=epsrel, limit=400)
        if not np.isfinite(val):
            raise ArithmeticError("product-density quadrature did not converge")
        return val

    return f


def hs_factor_densities():
    """The two factors whose product is ``256 |rho|`` under Hilbert-Schmidt."""
    return (lambda s: 2 * s), (lambda s: (1 - math.sqrt(s)) ** 2.5 / (2 * _B27))


def bures_factor_densities():
    return (lambda s: s**-0.5 - 1), (lambda s: 8 / math.pi * s**-0.25 * (1 - math.sqrt(s)) ** 1.5)


def crossing_point(lo: float = 1e-4, hi: float = 0.5) -> float:
    """Where the HS density overtakes the Bures density.

    Raises if the difference changes sign more than once on a fine grid.
    """
    g = lambda t: hs_det_density(t) - bures_det_density(t)  # noqa: E731
    grid = np.linspace(lo, 1 - 1e-9, 4000)
    signs = np.sign([g(t) for t in grid])
    changes = np.nonzero(np.diff(signs))[0]
    if len(changes) != 1:
        raise ArithmeticError(f"expected one crossing, found {len(changes)}")
    i = changes[0]
    return optimize.brentq(g, grid[i], grid[i + 1], xtol=1e-14)


def density_grid(points: int = 1001):
    """Rows ``(t, f_hs, f_bures)`` on an even grid of ``(0, 1]``."""
    ts = np.linspace(0, 1, points)[1:]
    return [(float(t), hs_det_density(t), bures_det_density(t)) for t in ts]
