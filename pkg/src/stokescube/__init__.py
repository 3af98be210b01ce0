"""Oracle-backed certification of closed-form bounds for the trigonometric
Stokes eigenbasis on the cube (0, pi)^3."""

from .eigenbasis import (
    Mode,
    QuadSpec,
    divergence,
    eigenvalue,
    enumerate_modes,
    evaluate,
    factorization_residual,
    fd_residual,
    grad_inner_product,
    gram_matrix,
    inner_product,
)
from .errors import AccuracyError, DomainError, IntegrityError
from .gamma_opt import (
    CONSTANTS,
    Constants,
    SphereSearchSpec,
    find_sigma,
    g_profile,
    gamma,
    gamma_max_closed,
    gamma_max_oracle,
    gamma_restricted,
)
from .integrals import (
    IntegralQuery,
    SumSpec,
    closed_integral,
    combined_sum_bound,
    family_sum_bound,
    family_sum_partial,
    quad_integral,
    upsilon,
    upsilon_db,
)
from .supnorms import (
    Case22,
    Direction,
    GridMax,
    GridSpec,
    ProjectionCoeffs,
    case22_value,
    corner_profile,
    dir_sup_norm_sq,
    dir_sup_norm_sq_raw,
    grid_sup_sq_oracle,
    grid_sup_sq_oracle_batch,
    sup_norm_sq,
)

__version__ = "0.1.0"

__all__ = [
    "AccuracyError",
    "CONSTANTS",
    "Case22",
    "Constants",
    "Direction",
    "DomainError",
    "GridMax",
    "GridSpec",
    "IntegralQuery",
    "IntegrityError",
    "Mode",
    "ProjectionCoeffs",
    "QuadSpec",
    "SphereSearchSpec",
    "SumSpec",
    "case22_value",
    "closed_integral",
    "combined_sum_bound",
    "corner_profile",
    "dir_sup_norm_sq",
    "dir_sup_norm_sq_raw",
    "divergence",
    "eigenvalue",
    "enumerate_modes",
    "evaluate",
    "factorization_residual",
    "family_sum_bound",
    "family_sum_partial",
    "fd_residual",
    "find_sigma",
    "g_profile",
    "gamma",
    "gamma_max_closed",
    "gamma_max_oracle",
    "gamma_restricted",
    "grad_inner_product",
    "gram_matrix",
    "grid_sup_sq_oracle",
    "grid_sup_sq_oracle_batch",
    "inner_product",
    "quad_integral",
    "sup_norm_sq",
    "upsilon",
    "upsilon_db",
]
