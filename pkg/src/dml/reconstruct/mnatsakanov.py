"""Moment-recovered distribution functions on ``[0, 1]``.

The order-M estimate puts mass
``p_k = sum_{j=k}^{M} C(M, j) C(j, k) (-1)^(j-k) mu_j`` at ``k / M``; the
distribution function is ``F_M(x) = sum_{k <= floor(M x)} p_k``.
"""

import math
from dataclasses import dataclass

from ..exact import as_rational, binomial, mpq, mpz, to_mpf
from ..precision import context
from .sequence import common_denominator


def recovered_masses(moments, M: int) -> list:
    """Exact masses ``p_0..p_M``; they sum to ``mu_0``."""
    mu = [as_rational(m) for m in moments[: M + 1]]
    if len(mu) < M + 1:
        raise ValueError(f"order {M} needs {M + 1} moments")
    den, nums = common_denominator(mu)
    out = []
    for k in range(M + 1):
        acc = mpz(0)
        for j in range(k, M + 1):
            term = binomial(M, j) * binomial(j, k) * nums[j]
            acc += -term if (j - k) % 2 else term
        out.append(mpq(acc, den))
    return out


@dataclass
class RecoveredDistribution:
    """Masses ``p_k`` at the grid points ``k / M``."""

    M: int
    masses: list
    digits: int

    def _ctx(self):
        return context(self.digits)

    def cdf(self, x):
        """``F_M(x)`` at working precision."""
        ctx = self._ctx()
        x = as_rational(x)
        if not 0 <= x <= 1:
            raise ValueError("x must lie in [0, 1]")
        top = math.floor(x * self.M)
        return to_mpf(sum(self.masses[: top + 1], mpq(0)), ctx)

    def density(self, x):
        """Histogram density ``M p_k`` on the cell ``[k/M, (k+1)/M)``."""
        ctx = self._ctx()
        x = as_rational(x)
        k = min(math.floor(x * self.M), self.M)
        return to_mpf(self.M * self.masses[k], ctx)

    def density_integral(self):
        """Integral of the histogram density over ``[0, 1]``; equals ``1 - p_M``."""
        return to_mpf(sum(self.masses[: self.M], mpq(0)), self._ctx())

    def tail(self, threshold):
        """``1 - F_M(threshold)``."""
        return 1 - self.cdf(threshold)


def mnatsakanov_recover(ms, M: int, precision=None) -> RecoveredDistribution:
    if M > ms.N:
        raise ValueError(f"M={M} exceeds the {ms.N} available moments")
    return RecoveredDistribution(M, recovered_masses(ms.moments, M), precision or ms.precision)


def mnatsakanov_cdf(ms, M: int, x, precision=None):
    """``F_M(x)`` for the moment sequence ``ms``."""
    return mnatsakanov_recover(ms, M, precision).cdf(x)
