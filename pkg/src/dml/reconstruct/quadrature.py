"""Gauss quadrature rules built directly from moments.

Moments arrive as exact rationals, so the ill-conditioned step (moments to
orthogonal polynomials) is done exactly.  Only the eigenvalue problem for
the nodes and the weight formula run at working precision.
"""

from dataclasses import dataclass

from ..exact import as_rational, mpq, to_mpf
from ..polynomial import RationalPolynomial
from ..precision import context, default_digits


class QuadratureAccuracyError(ArithmeticError):
    """Raised when a rule fails to reproduce its moments to tolerance."""

    def __init__(self, message, rule=None):
        super().__init__(message)
        self.rule = rule


def chebyshev_recurrence(moments, n: int):
    """Exact three-term recurrence coefficients from raw moments.

    Runs the classical Chebyshev algorithm in rationals.  Moments up to
    index ``2n - 1`` are needed.

    Returns
    -------
    alphas, betas, norms : list of mpq
        ``P_{k+1} = (x - alphas[k]) P_k - betas[k] P_{k-1}`` with
        ``betas[0] = mu_0`` and ``norms[k] = int P_k^2 dmu``.
    """
    mu = [as_rational(m) for m in moments]
    if len(mu) < 2 * n:
        raise ValueError(f"order {n} needs {2 * n} moments, got {len(mu)}")
    if n < 1:
        return [], [], []
    alphas = [mu[1] / mu[0]]
    betas = [mu[0]]
    norms = [mu[0]]
    prev = [mpq(0)] * (2 * n)
    cur = list(mu[: 2 * n])
    for k in range(1, n):
        nxt = [mpq(0)] * (2 * n)
        for l in range(k, 2 * n - k):
            nxt[l] = cur[l + 1] - alphas[k - 1] * cur[l] - betas[k - 1] * prev[l]
        if nxt[k] == 0:
            raise ValueError(f"moment sequence is degenerate at order {k}")
        alphas.append(nxt[k + 1] / nxt[k] - cur[k] / cur[k - 1])
        betas.append(nxt[k] / cur[k - 1])
        norms.append(nxt[k])
        prev, cur = cur, nxt
    return alphas, betas, norms


def orthogonal_polynomials(moments, n: int):
    """Monic orthogonal polynomials ``P_0..P_n`` from an exact LDL^T of the Hankel matrix.

    Row ``k`` of ``L^{-1}`` holds the coefficients of ``P_k`` and
    ``D_k = h_k``.  ``h_n`` is only returned when ``mu_{2n}`` is available.

    Raises
    ------
    ValueError
        If a pivot is not positive (the Hankel matrix is not positive definite).
    """
    mu = [as_rational(m) for m in moments]
    if len(mu) < 2 * n:
        raise ValueError(f"order {n} needs {2 * n} moments, got {len(mu)}")
    size = n + 1
    L = [[mpq(0)] * size for _ in range(size)]
    D = []
    for j in range(size):
        if 2 * j >= len(mu):
            break
        d = mu[2 * j] - sum((L[j][k] ** 2 * D[k] for k in range(j)), mpq(0))
        if d <= 0:
            raise ValueError(f"Hankel matrix is not positive definite at order {j}")
        D.append(d)
        L[j][j] = mpq(1)
        for i in range(j + 1, size):
            s = mu[i + j] - sum((L[i][k] * L[j][k] * D[k] for k in range(j)), mpq(0))
            L[i][j] = s / d
    # the last row of L is complete even if D_n is not
    # invert the unit lower-triangular L row by row
    inv = [[mpq(0)] * size for _ in range(size)]
    for i in range(size):
        inv[i][i] = mpq(1)
        for j in range(i):
            inv[i][j] = -sum((L[i][k] * inv[k][j] for k in range(j, i)), mpq(0))
    polys = [RationalPolynomial(tuple(inv[i][: i + 1])) for i in range(size)]
    return polys, D


def monic_orthopoly(ms, n: int):
    """Coefficients ``a_0..a_{n-1}`` of the monic ``P_n`` and its norm ``h_n``.

    ``P_n(x) = x^n + sum a_i x^i`` solves the Hankel system
    ``sum_i a_i mu_{i+j} = -mu_{j+n}`` for ``j < n``.
    """
    mom = ms.moments if hasattr(ms, "moments") else ms
    if len(mom) < 2 * n + 1:
        raise ValueError(f"h_{n} needs moments through index {2 * n}")
    polys, D = orthogonal_polynomials(mom, n)
    return list(polys[n].coefficients[:n]), D[n]


@dataclass
class QuadratureRule:
    """Nodes and weights on the rescaled unit interval.

    Attributes
    ----------
    order : int
    nodes, weights : list of mpf
        Ascending nodes and their weights.
    norms : list of mpq
        Structural constants ``h_0..h_{n-1}``.
    errors : list of mpf
        ``eps_j = mu_j - sum w_i x_i^j`` for ``j = 0..2n-1``.
    tolerance : list of mpf
        Allowed ``|eps_j|``.
    """

    order: int
    nodes: list
    weights: list
    norms: list
    errors: list
    tolerance: list
    digits: int
    method: str
    lo: object = mpq(0)
    hi: object = mpq(1)

    @property
    def max_error(self):
        return max(abs(e) for e in self.errors)

    @property
    def within_tolerance(self) -> bool:
        return all(abs(e) <= t for e, t in zip(self.errors, self.tolerance))

    def nodes_on(self, lo=None, hi=None) -> list:
        """Nodes mapped affinely onto ``[lo, hi]`` (defaults to the raw range)."""
        lo = self.lo if lo is None else as_rational(lo)
        hi = self.hi if hi is None else as_rational(hi)
        ctx = self.nodes[0].context if self.nodes else None
        a, w = to_mpf(lo, ctx), to_mpf(hi - lo, ctx)
        return [a + w * x for x in self.nodes]


def _jacobi_nodes(ctx, alphas, betas):
    n = len(alphas)
    J = ctx.zeros(n, n)
    for i in range(n):
        J[i, i] = to_mpf(alphas[i], ctx)
        if i + 1 < n:
            off = ctx.sqrt(to_mpf(betas[i + 1], ctx))
            J[i, i + 1] = off
            J[i + 1, i] = off
    E, Q = ctx.eigsy(J)
    pairs = sorted(((E[i], [Q[r, i] for r in range(n)]) for i in range(n)), key=lambda p: p[0])
    return [p[0] for p in pairs], [p[1] for p in pairs]


def _horner(ctx, poly, x):
    acc = ctx.mpf(0)
    for c in reversed(poly.coefficients):
        acc = acc * x + to_mpf(c, ctx)
    return acc


def gauss_rule(ms, n: int, precision=None, method: str = "hankel", check: bool = True) -> QuadratureRule:
    """n-point Gauss rule for the measure whose moments are ``ms``.

    Parameters
    ----------
    ms : MomentSequence
        Needs moments through index ``2n - 1``.
    n : int
    precision : int, optional
        Working digits for nodes and weights.
    method : {"hankel", "recurrence"}
        ``"hankel"`` factors the Hankel matrix and uses
        ``w_i = h_{n-1} / (P_n'(x_i) P_{n-1}(x_i))``; ``"recurrence"`` runs
        the Chebyshev algorithm and takes Golub-Welsch weights.  Nodes are
        Jacobi-matrix eigenvalues either way.
    check : bool
        Raise :class:`QuadratureAccuracyError` when some ``|eps_j|`` exceeds
        ``10^(-digits/2) * max(1, |mu_j|)``.
    """
    mom = list(ms.moments)
    if len(mom) < 2 * n:
        raise ValueError(f"a {n}-point rule needs {2 * n} moments")
    digits = precision or getattr(ms, "precision", None) or default_digits()
    ctx = context(digits)
    if method == "hankel":
        polys, D = orthogonal_polynomials(mom[: 2 * n], n)
        norms = D[:n]
        alphas = []
        for k in range(n):
            below = polys[k][k - 1] if k else mpq(0)
            alphas.append(below - polys[k + 1][k])
        betas = [mom[0]] + [norms[k] / norms[k - 1] for k in range(1, n)]
        nodes, _ = _jacobi_nodes(ctx, alphas, betas)
        dp = polys[n].derivative()
        h = to_mpf(norms[n - 1], ctx)
        weights = [h / (_horner(ctx, dp, x) * _horner(ctx, polys[n - 1], x)) for x in nodes]
    elif method == "recurrence":
        alphas, betas, norms = chebyshev_recurrence(mom[: 2 * n], n)
        nodes, vecs = _jacobi_nodes(ctx, alphas, betas)
        m0 = to_mpf(mom[0], ctx)
        weights = [m0 * v[0] ** 2 for v in vecs]
    else:
        raise ValueError(f"unknown method {method!r}")

    errors, tol = [], []
    scale = ctx.mpf(10) ** (-(digits // 2))
    for j in range(2 * n):
        mu = to_mpf(mom[j], ctx)
        errors.append(mu - ctx.fsum(w * x**j for w, x in zip(weights, nodes)))
        tol.append(scale * max(ctx.mpf(1), abs(mu)))
    rule = QuadratureRule(n, nodes, weights, list(norms), errors, tol, digits, method,
                          getattr(ms, "lo", mpq(0)), getattr(ms, "hi", mpq(1)))
    if check and not rule.within_tolerance:
        raise QuadratureAccuracyError(
            f"{n}-point rule misses its moments: max|eps| = {ctx.nstr(rule.max_error, 5)}", rule)
    return rule


def quadrature_cdf(rule: QuadratureRule, t):
    """Piecewise-linear distribution function through the node midpoints."""
    ctx = rule.nodes[0].context
    t = to_mpf(as_rational(t), ctx)
    xs = [ctx.mpf(0)]
    ys = [ctx.mpf(0)]
    acc = ctx.mpf(0)
    for i in range(rule.order - 1):
        acc += rule.weights[i]
        xs.append((rule.nodes[i] + rule.nodes[i + 1]) / 2)
        ys.append(acc)
    xs.append(ctx.mpf(1))
    ys.append(ctx.mpf(1))
    if t <= 0:
        return ctx.mpf(0)
    if t >= 1:
        return ctx.mpf(1)
    for i in range(len(xs) - 1):
        if xs[i] <= t <= xs[i + 1]:
            return ys[i] + (ys[i + 1] - ys[i]) * (t - xs[i]) / (xs[i + 1] - xs[i])
    return ctx.mpf(1)


def quadrature_threshold_probability(rule: QuadratureRule, threshold):
    """Mass above ``threshold`` under the interpolated distribution function."""
    return 1 - quadrature_cdf(rule, threshold)


def positive_zeros(rule: QuadratureRule, threshold) -> int:
    """Number of nodes strictly above ``threshold`` (the image of ``V = 0``)."""
    t = to_mpf(as_rational(threshold), rule.nodes[0].context)
    return sum(1 for x in rule.nodes if x > t)
