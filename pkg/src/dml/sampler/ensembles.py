"""Random density matrices under the Hilbert-Schmidt and Bures measures.

Batch samplers return stacks shaped ``(size, D, D)``; ``D = d`` for real and
complex matrices and ``2d`` for quaternionic ones (complex block form, with
complex trace 2 so that the quaternionic trace is 1).
"""

from dataclasses import dataclass

import numpy as np

from .linalg import RINGS, dagger, determinant, haar_unitary, partial_transpose, quaternion_matrix

BETA = {"real": 1, "complex": 2, "quaternion": 4}


@dataclass(frozen=True)
class RngStream:
    """Reproducible random stream identified by ``(seed, stream)``.

    ``generator(chunk)`` gives an independent PCG64 generator for each
    chunk of work, so results do not depend on how chunks are scheduled.
    """

    seed: int
    stream: int = 0

    def generator(self, chunk: int = 0):
        ss = np.random.SeedSequence(self.seed, spawn_key=(self.stream, chunk))
        return np.random.Generator(np.random.PCG64(ss))


@dataclass
class DensityMatrixSample:
    """A single density matrix.

    ``entries`` is real or complex ``d x d``, or ``2d x 2d`` complex for the
    quaternionic ring.
    """

    entries: np.ndarray
    dims: tuple = (2, 2)
    ring: str = "complex"

    @property
    def d(self) -> int:
        return self.dims[0] * self.dims[1]

    @property
    def trace(self) -> float:
        t = float(np.trace(self.entries).real)
        return t / 2 if self.ring == "quaternion" else t

    @property
    def det(self) -> float:
        return float(determinant(self.entries, self.ring))

    @property
    def pt_det(self) -> float:
        return float(determinant(self.pt().entries, self.ring))

    def pt(self):
        return DensityMatrixSample(partial_transpose(self.entries, self.dims, self.ring), self.dims, self.ring)

    def eigenvalues(self):
        ev = np.linalg.eigvalsh(self.entries)
        return ev[::2] if self.ring == "quaternion" else ev

    def check(self, tol: float = 1e-12):
        """Raise ``ValueError`` unless Hermitian, unit trace and positive semidefinite."""
        m = self.entries
        scale = max(1.0, float(np.abs(m).max()))
        if np.abs(m - dagger(m)).max() > tol * scale:
            raise ValueError("matrix is not Hermitian")
        if abs(self.trace - 1) > tol:
            raise ValueError(f"trace {self.trace} is not 1")
        if self.eigenvalues().min() < -tol:
            raise ValueError("matrix has a negative eigenvalue")
        return self


def _dims(d: int):
    if d == 4:
        return (2, 2)
    if d == 6:
        return (2, 3)
    raise ValueError("d must be 4 or 6")


def _normalize(m, ring):
    tr = np.trace(m, axis1=-2, axis2=-1).real
    if ring == "quaternion":
        tr = tr / 2
    return m / tr[:, None, None]


def _ginibre(gen, shape, ring):
    if ring == "real":
        return gen.standard_normal(shape)
    if ring == "complex":
        return (gen.standard_normal(shape) + 1j * gen.standard_normal(shape)) / np.sqrt(2)
    raise ValueError(f"no Ginibre route for ring {ring!r}")


def hs_batch(ring: str, d: int, size: int, gen):
    """``size`` Hilbert-Schmidt distributed density matrices.

    Complex: ``G G^dag / Tr`` with square ``G``.  Real: the flat measure
    needs ``G`` of shape ``d x (d+1)``; a square real ``G`` gives a different
    (induced) measure.  Quaternionic: Cholesky factors drawn from the
    matching Dirichlet law, see :func:`cholesky_batch`.
    """
    if ring not in RINGS:
        raise ValueError(f"unknown ring {ring!r}")
    if ring == "quaternion":
        return cholesky_batch(ring, d, size, gen)
    cols = d + 1 if ring == "real" else d
    g = _ginibre(gen, (size, d, cols), ring)
    return _normalize(g @ dagger(g), ring)


def _random_units(gen, size_shape, dim):
    v = gen.standard_normal(size_shape + (dim,))
    return v / np.linalg.norm(v, axis=-1, keepdims=True)


def cholesky_batch(ring: str, d: int, size: int, gen):
    """Hilbert-Schmidt states from an upper-triangular Cholesky factor.

    Squared moduli of the entries of ``C`` are Dirichlet distributed with
    parameter ``1 + (beta/2)(d - i)`` for the ``i``-th diagonal entry and
    ``beta/2`` for each off-diagonal entry; phases (unit vectors in
    ``R^beta``) are uniform.  ``rho = C^dag C`` then carries the flat measure.
    """
    beta = BETA[ring]
    iu = np.triu_indices(d, 1)
    n_off = len(iu[0])
    params = [1 + beta / 2 * (d - 1 - i) for i in range(d)] + [beta / 2] * n_off
    y = gen.dirichlet(params, size=size)
    diag = np.sqrt(y[:, :d])
    mod = np.sqrt(y[:, d:])
    units = _random_units(gen, (size, n_off), beta)
    comps = np.zeros((4, size, d, d))
    for i in range(d):
        comps[0, :, i, i] = diag[:, i]
    for c in range(beta):
        comps[c][:, iu[0], iu[1]] = mod * units[..., c]
    if ring == "real":
        C = comps[0]
    elif ring == "complex":
        C = comps[0] + 1j * comps[1]
    else:
        C = quaternion_matrix(*comps)
    return _normalize(dagger(C) @ C, ring)


def bures_batch(ring: str, d: int, size: int, gen):
    """``size`` Bures distributed density matrices.

    Complex: ``(I + U) G G^dag (I + U)^dag`` normalized, with ``U`` Haar.
    Real: eigenvalues by rejection from a Dirichlet(1/2, ...) proposal
    against the real Bures eigenvalue density, eigenvectors Haar orthogonal.
    """
    if d != 4:
        raise ValueError("Bures sampling is provided for d = 4")
    if ring == "complex":
        g = _ginibre(gen, (size, d, d), ring)
        u = haar_unitary(d, size, gen)
        a = (np.eye(d) + u) @ g
        return _normalize(a @ dagger(a), ring)
    if ring == "real":
        lam = _real_bures_spectra(gen, size, d)
        o = haar_unitary(d, size, gen, real=True)
        return (o * lam[:, None, :]) @ np.swapaxes(o, -1, -2)
    raise ValueError(f"Bures sampling is not available for ring {ring!r}")


# sup over the 3-simplex of prod_{i<j} |l_i - l_j| / sqrt(l_i + l_j); the max
# is about 0.012028, attained on the boundary
_REAL_BURES_BOUND = 0.0121


def _real_bures_spectra(gen, size, d):
    out = np.empty((0, d))
    while len(out) < size:
        m = max(2 * (size - len(out)) * 5, 1000)
        lam = gen.dirichlet([0.5] * d, size=m)
        i, j = np.triu_indices(d, 1)
        f = np.prod(np.abs(lam[:, i] - lam[:, j]) / np.sqrt(lam[:, i] + lam[:, j]), axis=1)
        ratio = f / _REAL_BURES_BOUND
        if ratio.max() > 1:
            raise RuntimeError("rejection bound violated")
        keep = gen.random(m) < ratio
        out = np.vstack([out, lam[keep]])
    return out[:size]


def sample_hs(ring: str, d: int, rng) -> DensityMatrixSample:
    """One Hilbert-Schmidt density matrix of size ``d`` (4 or 6)."""
    gen = rng.generator() if isinstance(rng, RngStream) else rng
    return DensityMatrixSample(hs_batch(ring, d, 1, gen)[0], _dims(d), ring)


def sample_bures(ring: str, d: int, rng) -> DensityMatrixSample:
    """One Bures density matrix (``d = 4``)."""
    gen = rng.generator() if isinstance(rng, RngStream) else rng
    return DensityMatrixSample(bures_batch(ring, d, 1, gen)[0], _dims(d), ring)


def batch(measure: str, ring: str, d: int, size: int, gen):
    if measure == "hs":
        return hs_batch(ring, d, size, gen)
    if measure == "bures":
        return bures_batch(ring, d, size, gen)
    raise ValueError(f"unknown measure {measure!r}")


def determinants(mats, ring: str, d: int):
    """``(|rho|, |rho^PT|)`` for a stack of matrices."""
    dims = _dims(d)
    return determinant(mats, ring), determinant(partial_transpose(mats, dims, ring), ring)


def nongeneric_batch(beta, size: int, gen):
    """Squared Cholesky moduli ``y1..y5`` of the non-generic family.

    Only the (2,3) off-diagonal pair is free; its entry lives in ``R^beta``.
    Returns ``(|rho|, |rho^PT|)``.
    """
    y = gen.dirichlet([1, 1 + beta / 2, 1, 1, beta / 2], size=size)
    y1, y2, y3, y4, y5 = y.T
    det = y1 * y2 * y3 * y4
    pt = y2 * (y3 + y5) * (y1 * y4 - y2 * y5)
    return det, pt
