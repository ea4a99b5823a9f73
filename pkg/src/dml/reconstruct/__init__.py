"""Reconstruction of distributions on ``[0, 1]`` from exact moments."""

from .estimate import EstimateRecord, separability_estimate
from .legendre import (
    DensityApprox,
    PrecisionError,
    exact_legendre_coefficients,
    legendre_coefficients,
    shifted_legendre,
    tail_probability,
)
from .mnatsakanov import RecoveredDistribution, mnatsakanov_cdf, mnatsakanov_recover, recovered_masses
from .quadrature import (
    QuadratureAccuracyError,
    QuadratureRule,
    chebyshev_recurrence,
    gauss_rule,
    monic_orthopoly,
    orthogonal_polynomials,
    positive_zeros,
    quadrature_cdf,
    quadrature_threshold_probability,
)
from .sequence import (
    CONJECTURES,
    VARIABLES,
    MomentSequence,
    build_moment_sequence,
    raw_moments,
    rescale_moments,
)

__all__ = [
    "CONJECTURES",
    "VARIABLES",
    "DensityApprox",
    "EstimateRecord",
    "MomentSequence",
    "PrecisionError",
    "QuadratureAccuracyError",
    "QuadratureRule",
    "RecoveredDistribution",
    "build_moment_sequence",
    "chebyshev_recurrence",
    "exact_legendre_coefficients",
    "gauss_rule",
    "legendre_coefficients",
    "mnatsakanov_cdf",
    "mnatsakanov_recover",
    "monic_orthopoly",
    "orthogonal_polynomials",
    "positive_zeros",
    "quadrature_cdf",
    "quadrature_threshold_probability",
    "raw_moments",
    "recovered_masses",
    "rescale_moments",
    "separability_estimate",
    "shifted_legendre",
    "tail_probability",
]
