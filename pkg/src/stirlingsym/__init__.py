"""Exact-arithmetic toolkit for symmetric functions built from nested
multiset permutations, with truncated series inversion, tree models, poset
Mobius invariants and volume cross-checks."""

from .partitions import (
    compositions_of,
    conjugate,
    partitions_of,
    weak_compositions,
    z_of,
)
from .symfunc import (
    DEFAULT_DEGREE_CAP,
    DegreeCapError,
    SymFunc,
    TPoly,
    basis_element,
    character,
    convert,
    evaluate_h,
    multiply,
    omega,
    specialize_E,
)
from .series import QQ, QT, SymFuncRing, TruncatedSeries
from .stirling import (
    StirlingPerm,
    enumerate_stirling,
    eulerian_polynomial,
    stirling_symfunc,
)
from .trees import (
    ColoredTree,
    comb_type,
    enumerate_colored,
    enumerate_normalized,
    lyndon_type,
)

__all__ = [
    "DEFAULT_DEGREE_CAP",
    "DegreeCapError",
    "QQ",
    "QT",
    "SymFunc",
    "SymFuncRing",
    "StirlingPerm",
    "TPoly",
    "TruncatedSeries",
    "ColoredTree",
    "basis_element",
    "character",
    "comb_type",
    "compositions_of",
    "conjugate",
    "convert",
    "enumerate_colored",
    "enumerate_normalized",
    "enumerate_stirling",
    "eulerian_polynomial",
    "evaluate_h",
    "lyndon_type",
    "multiply",
    "omega",
    "partitions_of",
    "specialize_E",
    "stirling_symfunc",
    "weak_compositions",
    "z_of",
]

__version__ = "0.1.0"
