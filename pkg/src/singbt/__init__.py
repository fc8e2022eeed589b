"""Invariants of singular and tied singular links from the bt-algebra."""

from .braids import GenTok, Word, closure_components, underlying_permutation
from .btalgebra import AlgebraElement, invariant, specialize_invariant
from .partitions import Permutation, SetPartition
from .scalars import Laurent, Polynomial, RationalFunction, Scalar, parse_scalar
from .singular import GradedWord, graded_trace, upsilon_hat

__all__ = [
    "AlgebraElement", "GenTok", "GradedWord", "Laurent", "Permutation", "Polynomial",
    "RationalFunction", "Scalar", "SetPartition", "Word", "closure_components", "graded_trace",
    "invariant", "parse_scalar", "specialize_invariant", "underlying_permutation", "upsilon_hat",
]
