"""Analysis of constructed codes: transforms, subspaces, distances, minimum vectors."""

from .distance import (
    DistanceReport,
    bch_bound,
    distance_bounds,
    min_distance,
    min_weight_codewords,
    rm_distance,
    sandwich_bound,
)
from .minvectors import min_vector_case, predicted_min_vectors, locator_shape_check
from .ms import (
    LocatorPoly,
    MSCoefficients,
    locator_poly,
    ms_coefficients,
    ms_consistent,
    ms_poly_eval,
    newton_check,
    sc_system_check,
)
from .subspaces import (
    Subspace,
    affine_split_check,
    enumerate_subspaces,
    gaussian_binomial,
    power_sums,
    subspace_from_roots,
)

__all__ = [
    "DistanceReport",
    "LocatorPoly",
    "MSCoefficients",
    "Subspace",
    "affine_split_check",
    "bch_bound",
    "distance_bounds",
    "enumerate_subspaces",
    "gaussian_binomial",
    "locator_poly",
    "min_distance",
    "min_vector_case",
    "min_weight_codewords",
    "ms_coefficients",
    "ms_consistent",
    "ms_poly_eval",
    "newton_check",
    "power_sums",
    "predicted_min_vectors",
    "locator_shape_check",
    "rm_distance",
    "sandwich_bound",
    "sc_system_check",
    "subspace_from_roots",
]
