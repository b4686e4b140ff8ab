"""Exact scalar, polynomial, matrix and truncated-series arithmetic."""

from .poly import BiPoly, LAM, H, as_fraction, fraction_to_str
from .series import SeriesScalar, STREAMS, stream_coefficients, taylor_series
from .matrices import (
    PolyMatrix,
    TensorSum,
    anticommutator,
    charpoly,
    commutator,
    nilpotent_apply,
)

__all__ = [
    "BiPoly",
    "LAM",
    "H",
    "as_fraction",
    "fraction_to_str",
    "SeriesScalar",
    "STREAMS",
    "stream_coefficients",
    "taylor_series",
    "PolyMatrix",
    "TensorSum",
    "anticommutator",
    "charpoly",
    "commutator",
    "nilpotent_apply",
]
