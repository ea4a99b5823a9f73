"""Random density matrices and Monte Carlo checks of the exact moments."""

from .cholesky import (
    cholesky_map,
    dirichlet_mc_expectation,
    dirichlet_monomial_expectation,
    jacobian_analytic,
    jacobian_finite_difference,
    random_sphere_point,
)
from .ensembles import (
    DensityMatrixSample,
    RngStream,
    bures_batch,
    cholesky_batch,
    determinants,
    hs_batch,
    nongeneric_batch,
    sample_bures,
    sample_hs,
)
from .linalg import determinant, haar_unitary, partial_transpose, quaternion_matrix
from .montecarlo import (
    Histogram2D,
    SampleStats,
    joint_histogram,
    mc_joint_moments,
    mc_moment,
    mc_separability_probability,
    nongeneric_mc_moment,
    nongeneric_separability_probability,
)

__all__ = [
    "DensityMatrixSample",
    "Histogram2D",
    "RngStream",
    "SampleStats",
    "bures_batch",
    "cholesky_batch",
    "cholesky_map",
    "determinant",
    "determinants",
    "dirichlet_mc_expectation",
    "dirichlet_monomial_expectation",
    "haar_unitary",
    "hs_batch",
    "jacobian_analytic",
    "jacobian_finite_difference",
    "joint_histogram",
    "mc_joint_moments",
    "mc_moment",
    "mc_separability_probability",
    "nongeneric_batch",
    "nongeneric_mc_moment",
    "nongeneric_separability_probability",
    "partial_transpose",
    "quaternion_matrix",
    "random_sphere_point",
    "sample_bures",
    "sample_hs",
]
