"""Moment sequences on the unit interval."""

from dataclasses import dataclass, field

from ..exact import as_rational, binomial, mpq, mpz
from ..moments import f0_det_moment, pt_moment, product_moment
from ..precision import default_digits

import gmpy2

# (lo, hi, threshold) of each determinantal variable before rescaling.
# The threshold is the image of 0, i.e. where |rho^PT| changes sign.
VARIABLES = {
    "ptdet": (mpq(-1, 16), mpq(1, 256)),
    "product": (mpq(-1, 110592), mpq(1, 65536)),
    "det": (mpq(0), mpq(1, 256)),
}

# conjectured separability probabilities for the three main alpha values
CONJECTURES = {mpq(1, 2): mpq(29, 64), mpq(1): mpq(8, 33), mpq(2): mpq(26, 323)}


def common_denominator(values):
    """Return ``(D, nums)`` with ``values[i] == nums[i] / D`` and integer ``nums``."""
    den = mpz(1)
    for v in values:
        den = gmpy2.lcm(den, v.denominator)
    return den, [v.numerator * (den // v.denominator) for v in values]


def rescale_moments(raw, lo, hi):
    """Exact moments of ``T = (V - lo) / (hi - lo)`` from those of ``V``."""
    lo, hi = as_rational(lo), as_rational(hi)
    shift = -lo
    width = hi - lo
    if width <= 0:
        raise ValueError("empty range")
    den, nums = common_denominator(raw)
    sn, sd = shift.numerator, shift.denominator
    out = []
    for m in range(len(raw)):
        # sum_i C(m,i) shift^(m-i) E[V^i] with everything over sd^m * den
        acc = mpz(0)
        sn_pow = mpz(1)
        sd_pow = sd**m
        for i in range(m, -1, -1):
            acc += binomial(m, i) * sn_pow * sd_pow * nums[i]
            sn_pow *= sn
            if i:
                sd_pow //= sd
        out.append(mpq(acc, sd**m * den) / width**m)
    return out


def hankel_pivots(moments, order: int):
    """Exact pivots ``h_0..h_{order-1}`` of the Hankel matrix ``(mu_{i+j})``.

    They are the squared norms of the monic orthogonal polynomials and come
    from the Chebyshev algorithm run in rationals.  All positive means the
    Hankel matrix of that order is positive definite.
    """
    from .quadrature import chebyshev_recurrence

    _, _, norms = chebyshev_recurrence(moments, order)
    return norms


@dataclass(frozen=True)
class MomentSequence:
    """Exact moments of a variable rescaled to ``[0, 1]``.

    Attributes
    ----------
    variable : str
        ``"ptdet"``, ``"product"``, ``"det"`` or ``"custom"``.
    alpha : mpq or None
    lo, hi : mpq
        Range of the raw variable.
    threshold : mpq or None
        Image of the separability cut ``V = 0`` on ``[0, 1]``.
    moments : tuple of mpq
        ``mu_0 .. mu_N`` of the rescaled variable; ``mu_0 = 1``.
    raw : tuple of mpq
        Moments of the raw variable.
    """

    variable: str
    alpha: object
    lo: object
    hi: object
    threshold: object
    moments: tuple
    raw: tuple = field(repr=False, default=())
    precision: int = 64

    @property
    def N(self) -> int:
        return len(self.moments) - 1

    @classmethod
    def on_unit_interval(cls, moments, threshold=None, precision=64):
        """Wrap moments that already live on ``[0, 1]``."""
        mom = tuple(as_rational(m) for m in moments)
        if mom[0] != 1:
            raise ValueError("mu_0 must be 1")
        thr = None if threshold is None else as_rational(threshold)
        return cls("custom", None, mpq(0), mpq(1), thr, mom, mom, precision)

    def truncated(self, N: int):
        if N > self.N:
            raise ValueError(f"only {self.N} moments available")
        return MomentSequence(self.variable, self.alpha, self.lo, self.hi, self.threshold,
                              self.moments[: N + 1], self.raw[: N + 1], self.precision)

    def to_raw(self, t):
        """Map a point of ``[0, 1]`` back to the raw variable."""
        return self.lo + (self.hi - self.lo) * t


def raw_moments(alpha, variable: str, N: int) -> list:
    """Exact moments ``E[V^n]``, ``n = 0..N``, of a determinantal variable."""
    fn = {"ptdet": pt_moment, "product": product_moment, "det": f0_det_moment}.get(variable)
    if fn is None:
        raise ValueError(f"unknown variable {variable!r}")
    a = as_rational(alpha)
    return [fn(a, n) for n in range(N + 1)]


def build_moment_sequence(alpha, variable: str, N: int, precision=None, check_order=None):
    """Exact rescaled moments of ``|rho^PT|``, ``|rho||rho^PT|`` or ``|rho|``.

    Parameters
    ----------
    alpha : rational-like
    variable : {"ptdet", "product", "det"}
    N : int
        Highest moment, ``N >= 1``.
    precision : int, optional
        Working digits recorded on the sequence for later stages.
    check_order : int, optional
        Hankel order verified to be positive definite, exactly.  Defaults
        to ``min((N + 1) // 2, 24)``; the cost grows quickly with the order.

    Raises
    ------
    ValueError
        If a Hankel pivot is not positive.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    lo, hi = VARIABLES[variable] if variable in VARIABLES else (None, None)
    if lo is None:
        raise ValueError(f"unknown variable {variable!r}")
    a = as_rational(alpha)
    raw = raw_moments(a, variable, N)
    mom = rescale_moments(raw, lo, hi)
    threshold = None if variable == "det" else -lo / (hi - lo)
    order = min((N + 1) // 2, 24) if check_order is None else check_order
    pivots = hankel_pivots(mom, order)
    for i, h in enumerate(pivots):
        if h <= 0:
            raise ValueError(f"moments of {variable} at alpha={a} fail Hankel positivity at order {i}")
    digits = default_digits(N) if precision is None else precision
    return MomentSequence(variable, a, lo, hi, threshold, tuple(mom), tuple(raw), digits)
