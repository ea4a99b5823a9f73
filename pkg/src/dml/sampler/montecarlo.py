"""Monte Carlo estimators over random density matrices.

Work is cut into fixed-size chunks, each with its own generator derived
from ``(seed, stream, chunk)``.  Partial statistics are merged in chunk
order, so results are identical for any number of worker threads.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .ensembles import RngStream, batch, determinants, nongeneric_batch

Z95 = 1.959963984540054
CHUNK = 100_000

PT_RANGE = (-1 / 16, 1 / 256)
DET_RANGE = (0.0, 1 / 256)
PRODUCT_FLOOR = -1 / 110592


@dataclass
class SampleStats:
    """Mean of a sample with its standard error and 95% normal interval."""

    count: int
    mean: float
    stderr: float
    seed: int = None

    @property
    def ci(self):
        h = Z95 * self.stderr
        return (self.mean - h, self.mean + h)

    def within(self, value, n_se: float = 4.0) -> bool:
        return abs(self.mean - value) <= n_se * self.stderr

    def as_dict(self) -> dict:
        lo, hi = self.ci
        return {"mean": self.mean, "stderr": self.stderr, "ci_lo": lo, "ci_hi": hi,
                "count": self.count, "seed": self.seed}


class _Partial:
    """Running count, mean and sum of squared deviations (Chan et al. merge)."""

    __slots__ = ("n", "mean", "m2")

    def __init__(self, n=0, mean=0.0, m2=0.0):
        self.n, self.mean, self.m2 = n, mean, m2

    @classmethod
    def of(cls, values):
        v = np.asarray(values, dtype=float)
        if v.size == 0:
            return cls()
        mu = float(v.mean())
        return cls(v.size, mu, float(((v - mu) ** 2).sum()))

    def merge(self, other):
        if other.n == 0:
            return self
        if self.n == 0:
            return other
        n = self.n + other.n
        delta = other.mean - self.mean
        mean = self.mean + delta * other.n / n
        m2 = self.m2 + other.m2 + delta**2 * self.n * other.n / n
        return _Partial(n, mean, m2)

    def stats(self, seed=None) -> SampleStats:
        sd = math.sqrt(self.m2 / (self.n - 1)) if self.n > 1 else float("nan")
        return SampleStats(self.n, self.mean, sd / math.sqrt(self.n), seed)


def _chunks(samples, chunk):
    full, rest = divmod(samples, chunk)
    return [chunk] * full + ([rest] if rest else [])


def run_chunks(fn, samples: int, rng: RngStream, workers: int = 1, chunk: int = CHUNK):
    """Apply ``fn(generator, size)`` to every chunk and return results in chunk order."""
    sizes = _chunks(samples, chunk)
    jobs = [(rng.generator(i), s) for i, s in enumerate(sizes)]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(lambda job: fn(*job), jobs))
    return [fn(g, s) for g, s in jobs]


def _merge(parts):
    total = _Partial()
    for p in parts:
        total = total.merge(p)
    return total


def mc_joint_moments(ring: str, measure: str, pairs, samples: int, rng: RngStream, d: int = 4,
                     workers: int = 1, chunk: int = CHUNK) -> dict:
    """Estimate ``<|rho|^k |rho^PT|^n>`` for several ``(n, k)`` from one sample.

    Returns a dict keyed by ``(n, k)``.
    """
    pairs = list(pairs)

    def work(gen, size):
        det, pt = determinants(batch(measure, ring, d, size, gen), ring, d)
        return [_Partial.of(det**k * pt**n) for n, k in pairs]

    results = run_chunks(work, samples, rng, workers, chunk)
    return {p: _merge(r[i] for r in results).stats(rng.seed) for i, p in enumerate(pairs)}


def mc_moment(ring: str, measure: str, n: int, k: int, samples: int, rng: RngStream, d: int = 4,
              workers: int = 1) -> SampleStats:
    """Sample mean of ``|rho|^k |rho^PT|^n``.

    Parameters
    ----------
    ring : {"real", "complex", "quaternion"}
    measure : {"hs", "bures"}
    n, k : int
    samples : int
        At least 10^4.
    rng : RngStream
    d : {4, 6}
    """
    if samples < 10_000:
        raise ValueError("use at least 10^4 samples")
    return mc_joint_moments(ring, measure, [(n, k)], samples, rng, d, workers)[(n, k)]


def mc_separability_probability(ring: str, measure: str, samples: int, rng: RngStream,
                                workers: int = 1) -> SampleStats:
    """Fraction of 4x4 samples with ``|rho^PT| >= 0``."""

    def work(gen, size):
        _, pt = determinants(batch(measure, ring, 4, size, gen), ring, 4)
        return _Partial.of(pt >= 0)

    return _merge(run_chunks(work, samples, rng, workers)).stats(rng.seed)


def nongeneric_separability_probability(beta, samples: int, rng: RngStream, workers: int = 1) -> SampleStats:
    """Fraction of separable states in the non-generic family with parameter ``beta``."""

    def work(gen, size):
        _, pt = nongeneric_batch(beta, size, gen)
        return _Partial.of(pt >= 0)

    return _merge(run_chunks(work, samples, rng, workers)).stats(rng.seed)


def nongeneric_mc_moment(beta, n: int, k: int, samples: int, rng: RngStream) -> SampleStats:
    def work(gen, size):
        det, pt = nongeneric_batch(beta, size, gen)
        return _Partial.of(det**k * pt**n)

    return _merge(run_chunks(work, samples, rng)).stats(rng.seed)


@dataclass
class Histogram2D:
    """Counts on a regular grid over ``|rho|`` (x) and ``|rho^PT|`` (y)."""

    x_edges: np.ndarray
    y_edges: np.ndarray
    counts: np.ndarray
    samples: int

    @property
    def total(self) -> int:
        return int(self.counts.sum())

    def marginal_density_x(self, scale: float = 1.0):
        """Histogram density of ``scale * |rho|`` from the x marginal."""
        widths = np.diff(self.x_edges) * scale
        return self.counts.sum(axis=1) / (self.samples * widths)

    def rows(self):
        for i in range(len(self.x_edges) - 1):
            for j in range(len(self.y_edges) - 1):
                yield (self.x_edges[i], self.x_edges[i + 1], self.y_edges[j], self.y_edges[j + 1],
                       int(self.counts[i, j]))


def _clip_checked(v, lo, hi, name):
    slack = 1e-9 * (hi - lo)
    if v.min() < lo - slack or v.max() > hi + slack:
        raise ValueError(f"{name} outside its proven range [{lo}, {hi}]: determinant bug")
    return np.clip(v, lo, hi)


def joint_histogram(ring: str, samples: int, bins: int, rng: RngStream, measure: str = "hs",
                    workers: int = 1) -> Histogram2D:
    """Joint histogram of ``(|rho|, |rho^PT|)`` for 4x4 states.

    Values outside ``[0, 1/256] x [-1/16, 1/256]`` raise ``ValueError``.
    """
    if bins < 10:
        raise ValueError("bins must be at least 10")
    x_edges = np.linspace(*DET_RANGE, bins + 1)
    y_edges = np.linspace(*PT_RANGE, bins + 1)

    def work(gen, size):
        det, pt = determinants(batch(measure, ring, 4, size, gen), ring, 4)
        det = _clip_checked(det, *DET_RANGE, "|rho|")
        pt = _clip_checked(pt, *PT_RANGE, "|rho^PT|")
        if ring == "real" and (det * pt).min() < PRODUCT_FLOOR * (1 + 1e-9):
            raise ValueError("|rho||rho^PT| below its proven minimum")
        h, _, _ = np.histogram2d(det, pt, bins=[x_edges, y_edges])
        return h.astype(np.int64)

    counts = sum(run_chunks(work, samples, rng, workers))
    return Histogram2D(x_edges, y_edges, counts, samples)
