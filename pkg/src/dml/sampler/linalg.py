"""Batched linear algebra for real, complex and quaternionic density matrices.

Quaternionic matrices are stored in their complex 2x2-block form: the
quaternion ``a + b i + c j + d k`` becomes ``[[a + b i, c + d i], [-c + d i, a - b i]]``.
Every function accepts a single matrix or a stack with leading batch axes.
"""

import numpy as np

RINGS = ("real", "complex", "quaternion")


def quaternion_block(a, b, c, d):
    """Complex 2x2 blocks for quaternions with components ``a, b, c, d`` (broadcast)."""
    a, b, c, d = np.broadcast_arrays(a, b, c, d)
    out = np.empty(a.shape + (2, 2), dtype=complex)
    out[..., 0, 0] = a + 1j * b
    out[..., 0, 1] = c + 1j * d
    out[..., 1, 0] = -c + 1j * d
    out[..., 1, 1] = a - 1j * b
    return out


def quaternion_matrix(a, b, c, d):
    """Assemble ``(..., m, n)`` quaternion component arrays into ``(..., 2m, 2n)`` complex form."""
    blocks = quaternion_block(a, b, c, d)  # (..., m, n, 2, 2)
    *lead, m, n, _, _ = blocks.shape
    return blocks.swapaxes(-3, -2).reshape(*lead, 2 * m, 2 * n)


def partial_transpose(rho, dims=(2, 2), ring: str = "complex"):
    """Transpose every ``d2 x d2`` block in place (transpose on the second factor).

    For quaternionic matrices the quaternion entries are swapped without
    conjugation, i.e. the 2x2 complex blocks move as units.
    """
    d1, d2 = dims
    rho = np.asarray(rho)
    lead = rho.shape[:-2]
    if ring == "quaternion":
        t = rho.reshape(*lead, d1, d2, 2, d1, d2, 2)
        t = np.swapaxes(t, -5, -2)
    else:
        t = rho.reshape(*lead, d1, d2, d1, d2)
        t = np.swapaxes(t, -3, -1)
    return t.reshape(rho.shape)


def determinant(m, ring: str = "complex"):
    """Determinant as a real number (or array of them).

    Quaternionic Hermitian matrices use the Moore determinant: the product
    of the real eigenvalues, one from each Kramers pair of the complex form.
    This keeps the sign, which the partial transpose needs.
    """
    m = np.asarray(m)
    if ring == "quaternion":
        ev = np.linalg.eigvalsh(m)
        return np.prod(ev[..., ::2], axis=-1)
    d = np.linalg.det(m)
    return d.real if np.iscomplexobj(d) else d


def haar_unitary(n: int, size: int, gen, real: bool = False):
    """Haar-distributed orthogonal or unitary matrices by QR with phase fixing."""
    if real:
        z = gen.standard_normal((size, n, n))
    else:
        z = (gen.standard_normal((size, n, n)) + 1j * gen.standard_normal((size, n, n))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    diag = np.diagonal(r, axis1=-2, axis2=-1)
    phase = diag / np.abs(diag)
    return q * phase[..., None, :]


def dagger(m):
    return np.conj(np.swapaxes(m, -1, -2))


def normalize_trace(m):
    tr = np.trace(m, axis1=-2, axis2=-1).real
    return m / tr[..., None, None]
