"""Orthogonal projection of a density on ``[0, 1]`` onto shifted Legendre polynomials.

With ``P~_j(x) = sum_i a_{j,i} x^i`` the shifted Legendre polynomials,
the coefficients ``lambda_j = sum_i a_{j,i} mu_i`` are linear in the
moments and the degree-N least-squares approximant is
``f_N = sum_j (2j + 1) lambda_j P~_j``.
"""

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from ..exact import as_rational, mpq, mpz, to_mpf
from ..polynomial import RationalPolynomial
from ..precision import context
from .sequence import common_denominator


class PrecisionError(ArithmeticError):
    """The floating evaluation of a coefficient disagrees with its exact value."""


def shifted_legendre_row(j: int) -> list:
    """Integer coefficients ``a_{j,0..j}`` of ``P~_j``, ascending.

    ``a_{j,i} = (-1)^(j+i) C(j, i) C(j+i, i)``, generated by the ratio
    ``a_{j,i+1} / a_{j,i} = -(j-i)(j+i+1) / (i+1)^2``.
    """
    row = [mpz(-1) ** j]
    for i in range(j):
        row.append(-row[-1] * (j - i) * (j + i + 1) // ((i + 1) ** 2))
    return row


def shifted_legendre(j: int) -> RationalPolynomial:
    return RationalPolynomial(tuple(mpq(c) for c in shifted_legendre_row(j)))


def _lambda_block(args):
    js, nums = args
    out = []
    for j in js:
        row = shifted_legendre_row(j)
        out.append(sum((c * nums[i] for i, c in enumerate(row)), mpz(0)))
    return out


def exact_legendre_coefficients(moments, N: int, workers: int = 1) -> list:
    """Exact ``lambda_0..lambda_N`` from exact moments.

    The moments are put over a common denominator so the inner sums are
    pure integer arithmetic.  ``workers > 1`` spreads the rows over
    processes; the result does not depend on it.
    """
    mu = [as_rational(m) for m in moments[: N + 1]]
    if len(mu) < N + 1:
        raise ValueError(f"need {N + 1} moments, got {len(mu)}")
    den, nums = common_denominator(mu)
    js = list(range(N + 1))
    if workers > 1 and N > 200:
        # interleave rows so blocks carry similar work
        blocks = [js[w::workers] for w in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_lambda_block, [(b, nums) for b in blocks]))
        numer = [None] * (N + 1)
        for b, vals in zip(blocks, parts):
            for j, v in zip(b, vals):
                numer[j] = v
    else:
        numer = _lambda_block((js, nums))
    return [mpq(v, den) for v in numer]


@dataclass
class DensityApprox:
    """Degree-N Legendre approximant on ``[0, 1]``.

    Attributes
    ----------
    N : int
    lambdas : list of mpf
        ``lambda_j`` at working precision; ``lambda_0 = 1``.
    exact : list of mpq
        The same coefficients as exact rationals.
    digits : int
    cancellation : list of float
        Decimal digits lost by summing ``a_{j,i} mu_i`` in floating point,
        for the rows that were cross-checked.
    """

    N: int
    lambdas: list
    exact: list
    digits: int
    cancellation: list

    @property
    def ctx(self):
        return self.lambdas[0].context

    def __call__(self, x):
        """Evaluate ``f_N(x)`` by the three-term recurrence."""
        ctx = self.ctx
        u = 2 * ctx.convert(x) - 1
        p_prev, p = ctx.mpf(0), ctx.mpf(1)
        total = self.lambdas[0]
        for j in range(1, self.N + 1):
            p_prev, p = p, ((2 * j - 1) * u * p - (j - 1) * p_prev) / j
            total += (2 * j + 1) * self.lambdas[j] * p
        return total

    def polynomial(self) -> RationalPolynomial:
        """``f_N`` as an exact polynomial; practical for small ``N`` only."""
        poly = RationalPolynomial(())
        for j, lam in enumerate(self.exact):
            poly = poly + shifted_legendre(j) * ((2 * j + 1) * lam)
        return poly

    def tail(self, threshold):
        """``int_t^1 f_N``; see :func:`tail_probability`."""
        return tail_probability(self, threshold)


def legendre_coefficients(ms, N=None, precision=None, check_rows: int = 50, workers: int = 1) -> DensityApprox:
    """Project the density behind ``ms`` onto polynomials of degree ``N``.

    Parameters
    ----------
    ms : MomentSequence
    N : int, optional
        Defaults to every available moment.
    precision : int, optional
        Working digits; defaults to the sequence's own.
    check_rows : int
        Rows ``j <= check_rows`` are re-summed in floating point with guard
        digits sized from the observed cancellation, and compared with the
        exact value.

    Raises
    ------
    PrecisionError
        When a re-summed coefficient disagrees beyond ``10^-(digits-8)``
        relative to ``max(1, |lambda_j|)``.
    """
    N = ms.N if N is None else N
    if N > ms.N:
        raise ValueError(f"N={N} exceeds the {ms.N} available moments")
    digits = precision or ms.precision
    ctx = context(digits)
    exact = exact_legendre_coefficients(ms.moments, N, workers=workers)
    lambdas = [to_mpf(v, ctx) for v in exact]

    lost = []
    for j in range(min(N, check_rows) + 1):
        row = shifted_legendre_row(j)
        mags = sum(abs(float(c)) * abs(float(ms.moments[i])) for i, c in enumerate(row))
        size = max(abs(float(exact[j])), 1e-300)
        lost_j = max(0.0, math.log10(mags / size)) if mags else 0.0
        lost.append(lost_j)
        guard = context(digits + int(math.ceil(lost_j)) + 8)
        approx = guard.fsum(guard.mpf(int(c)) * to_mpf(ms.moments[i], guard) for i, c in enumerate(row))
        err = abs(approx - to_mpf(exact[j], guard))
        if err > guard.mpf(10) ** (-(digits - 8)) * max(1, abs(to_mpf(exact[j], guard))):
            raise PrecisionError(f"lambda_{j} floating re-sum disagrees with exact value by {guard.nstr(err, 3)}")
    return DensityApprox(N, lambdas, exact, digits, lost)


def tail_probability(da: DensityApprox, threshold):
    """``int_t^1 f_N(x) dx`` computed term by term from Legendre identities.

    With ``u = 2t - 1`` and standard Legendre ``P_j``,
    ``int_t^1 (2j+1) P~_j = -(P_{j+1}(u) - P_{j-1}(u)) / 2`` for ``j >= 1``.
    Values outside ``[0, 1]`` are returned as is; they flag an
    under-resolved reconstruction.
    """
    ctx = da.ctx
    t = to_mpf(as_rational(threshold), ctx)
    if not 0 <= t <= 1:
        raise ValueError("threshold must lie in [0, 1]")
    u = 2 * t - 1
    # standard Legendre values P_0..P_{N+1} at u
    P = [ctx.mpf(1), u]
    for j in range(1, da.N + 1):
        P.append(((2 * j + 1) * u * P[j] - j * P[j - 1]) / (j + 1))
    total = (1 - t) * da.lambdas[0]
    for j in range(1, da.N + 1):
        total -= da.lambdas[j] * (P[j + 1] - P[j - 1]) / 2
    return total
