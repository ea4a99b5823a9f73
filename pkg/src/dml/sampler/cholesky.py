"""Cholesky coordinates for real positive matrices.

A trace-one real ``N x N`` state is ``rho = C^T C`` with ``C`` upper
triangular and ``c_ii >= 0``.  The ``N(N+1)/2`` entries of ``C`` sit on the
unit sphere, ordered row by row: ``c11, c12, ..., c1N, c22, ..., cNN``.
"""

import math

import numpy as np

from ..exact import mpq, rising


def _size(m: int) -> int:
    n = int((math.isqrt(8 * m + 1) - 1) // 2)
    if n * (n + 1) // 2 != m:
        raise ValueError(f"{m} is not a triangular number")
    return n


def upper_from_vector(c):
    c = np.asarray(c, dtype=float)
    n = _size(c.size)
    C = np.zeros((n, n))
    C[np.triu_indices(n)] = c
    return C


def jacobian_analytic(c) -> float:
    """``|det d rho / d c| = 2^N prod_i c_ii^(N+1-i)``."""
    C = upper_from_vector(c)
    n = len(C)
    return 2.0**n * math.prod(C[i, i] ** (n - i) for i in range(n))


def _rho_upper(c):
    C = upper_from_vector(c)
    rho = C.T @ C
    return rho[np.triu_indices(len(C))]


def jacobian_finite_difference(c, h: float = 1e-5) -> float:
    """Central-difference Jacobian determinant of ``c -> (rho_ij)_{i<=j}``.

    The map is quadratic, so central differences are exact up to rounding.
    """
    c = np.asarray(c, dtype=float)
    cols = []
    for i in range(c.size):
        e = np.zeros_like(c)
        e[i] = h
        cols.append((_rho_upper(c + e) - _rho_upper(c - e)) / (2 * h))
    return abs(float(np.linalg.det(np.column_stack(cols))))


def cholesky_map(c):
    """Map Cholesky coordinates to ``(rho, jacobian)``.

    Parameters
    ----------
    c : array_like
        ``N(N+1)/2`` entries of ``C`` in row order, diagonal entries
        nonnegative, ``sum c_ij^2 = 1``.

    Returns
    -------
    rho : ndarray
        ``C^T C``, of unit trace.
    jacobian : float
        Analytic ``|det d rho / d c|``.
    """
    c = np.asarray(c, dtype=float)
    C = upper_from_vector(c)
    if np.any(np.diag(C) < 0):
        raise ValueError("diagonal Cholesky entries must be nonnegative")
    if abs(float(c @ c) - 1) > 1e-9:
        raise ValueError("Cholesky coordinates must lie on the unit sphere")
    return C.T @ C, jacobian_analytic(c)


def random_sphere_point(gen, n: int = 4):
    """A point of the sphere octant with nonnegative diagonal (not uniform)."""
    v = gen.standard_normal(n * (n + 1) // 2)
    v /= np.linalg.norm(v)
    C = upper_from_vector(v)
    idx = np.diag_indices(n)
    C[idx] = np.abs(C[idx])
    return C[np.triu_indices(n)]


def _exponent_table(exponents, n=4):
    """Normalize exponents to a dict ``{(i, j): n_ij}`` with 1-based ``i <= j``."""
    if isinstance(exponents, dict):
        table = {tuple(key): int(v) for key, v in exponents.items()}
    else:
        arr = np.asarray(exponents)
        if arr.ndim == 2:
            table = {(i + 1, j + 1): int(arr[i, j]) for i in range(n) for j in range(i, n)}
        else:
            keys = [(i + 1, j + 1) for i in range(n) for j in range(i, n)]
            if arr.size != len(keys):
                raise ValueError("need one exponent per upper-triangular entry")
            table = dict(zip(keys, (int(v) for v in arr)))
    for (i, j), v in table.items():
        if not 1 <= i <= j <= n:
            raise ValueError(f"bad index ({i}, {j})")
        if v < 0:
            raise ValueError("exponents must be nonnegative")
    return table


def dirichlet_monomial_expectation(exponents, k: int):
    """``<|rho|^k prod c_ij^n_ij>`` for the real 4x4 Hilbert-Schmidt measure.

    Parameters
    ----------
    exponents : dict, 4x4 array or length-10 sequence
        ``n_ij`` for ``1 <= i <= j <= 4``.
    k : int

    Returns
    -------
    mpq
        Zero when an off-diagonal exponent is odd.
    """
    table = _exponent_table(exponents)
    get = lambda i, j: table.get((i, j), 0)  # noqa: E731
    if any(v % 2 for (i, j), v in table.items() if i < j):
        return mpq(0)
    if any(get(i, i) % 2 for i in range(1, 5)):
        raise ValueError("odd diagonal exponents give non-rational values")
    total = sum(table.values())
    out = mpq(1)
    for i, base in zip(range(1, 5), (mpq(5, 2), mpq(2), mpq(3, 2), mpq(1))):
        out *= rising(base, k + get(i, i) // 2)
    for (i, j), v in table.items():
        if i < j:
            out *= rising(mpq(1, 2), v // 2)
    return out / rising(mpq(10), 4 * k + total // 2)


def dirichlet_mc_expectation(exponents, k: int, samples: int, gen):
    """Monte Carlo value of :func:`dirichlet_monomial_expectation`.

    Draws squared entries from the Jacobian-weighted Dirichlet law with
    random signs off the diagonal.  Returns ``(mean, stderr)``.
    """
    table = _exponent_table(exponents)
    keys = [(i, j) for i in range(1, 5) for j in range(i, 5)]
    diag = {1: 2.5, 2: 2.0, 3: 1.5, 4: 1.0}
    params = [diag[i] if i == j else 0.5 for i, j in keys]
    y = gen.dirichlet(params, size=samples)
    c = np.sqrt(y)
    off = [n for n, (i, j) in enumerate(keys) if i < j]
    c[:, off] *= gen.choice([-1.0, 1.0], size=(samples, len(off)))
    det = np.prod([y[:, n] for n, (i, j) in enumerate(keys) if i == j], axis=0)
    val = det**k
    for n, key in enumerate(keys):
        val = val * c[:, n] ** table.get(key, 0)
    return float(val.mean()), float(val.std(ddof=1) / math.sqrt(samples))
