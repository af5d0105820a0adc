"""Code constructions, metric analysis, equivalence and symmetry checks."""

from .constructions import (
    best_binary,
    coset_code,
    hadamard_quaternary,
    heptacode,
    julin_coset_decomposition,
    julin_quaternary,
    paley_hadamard12,
    pentacode_direct,
)
from .core import (
    BINARY,
    Z4,
    Code,
    DistanceEnumerator,
    distance_enumerator,
    min_distance,
    plotkin_bound,
    plotkin_check,
    shorten,
)
from .isometry import (
    LeeIsometry,
    binary_automorphism_order,
    lee_equivalent,
    left_mult_isometry_set,
    pentacode_symmetries_check,
)

__all__ = [
    "BINARY",
    "Z4",
    "Code",
    "DistanceEnumerator",
    "LeeIsometry",
    "best_binary",
    "binary_automorphism_order",
    "coset_code",
    "distance_enumerator",
    "hadamard_quaternary",
    "heptacode",
    "julin_coset_decomposition",
    "julin_quaternary",
    "lee_equivalent",
    "left_mult_isometry_set",
    "min_distance",
    "paley_hadamard12",
    "pentacode_direct",
    "pentacode_symmetries_check",
    "plotkin_bound",
    "plotkin_check",
    "shorten",
]
