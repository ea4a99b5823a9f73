"""End-to-end separability estimates from exact moments."""

from dataclasses import dataclass

from ..exact import as_rational, format_rational
from ..precision import check_digits, default_digits
from .legendre import legendre_coefficients, tail_probability
from .mnatsakanov import mnatsakanov_recover
from .quadrature import gauss_rule, quadrature_threshold_probability
from .sequence import build_moment_sequence

METHODS = ("legendre", "mnatsakanov", "quadrature")


@dataclass
class EstimateRecord:
    alpha: object
    variable: str
    n_moments: int
    precision_digits: int
    method: str
    estimate: object
    threshold: object

    def as_dict(self) -> dict:
        ctx = self.estimate.context
        return {
            "alpha": format_rational(self.alpha),
            "variable": self.variable,
            "n_moments": self.n_moments,
            "precision_digits": self.precision_digits,
            "method": self.method,
            "estimate": ctx.nstr(self.estimate, self.precision_digits, strip_zeros=False),
            "threshold": format_rational(self.threshold),
        }


def separability_estimate(alpha, variable: str, N: int, precision=None, method: str = "legendre",
                          workers: int = 1, sequence=None) -> EstimateRecord:
    """Estimate the probability that ``|rho^PT| >= 0`` from ``N`` moments.

    Parameters
    ----------
    alpha : rational-like
    variable : {"ptdet", "product"}
    N : int
        Moments used.  For ``method="quadrature"`` this is the number of
        nodes, and ``2N`` moments are generated.
    precision : int, optional
    method : {"legendre", "mnatsakanov", "quadrature"}
    sequence : MomentSequence, optional
        Reuse an already built sequence (it may be longer than needed).
    """
    if variable not in ("ptdet", "product"):
        raise ValueError("separability estimates need variable 'ptdet' or 'product'")
    if method not in METHODS:
        raise ValueError(f"method must be one of {METHODS}")
    a = as_rational(alpha)
    digits = check_digits(precision) if precision else default_digits(N)
    need = 2 * N - 1 if method == "quadrature" else N
    ms = sequence if sequence is not None else build_moment_sequence(a, variable, need, digits)
    if ms.N > need:
        ms = ms.truncated(need)
    if method == "legendre":
        value = tail_probability(legendre_coefficients(ms, need, digits, workers=workers), ms.threshold)
    elif method == "mnatsakanov":
        value = mnatsakanov_recover(ms, need, digits).tail(ms.threshold)
    else:
        value = quadrature_threshold_probability(gauss_rule(ms, N, digits), ms.threshold)
    return EstimateRecord(a, variable, N, digits, method, value, ms.threshold)
