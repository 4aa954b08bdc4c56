"""Exact fixed-point computations for the K-theory of parabolic flag Hilbert schemes."""

from .fixed_points import KVector, apply_word, operator_matrix, parse_word, pieri
from .qt import Character, QTFraction, from_text, to_text
from .shapes import AIndex, FlagPoint, enumerate_a_indices, enumerate_flags, from_flag, to_flag

__all__ = [
    "AIndex",
    "Character",
    "FlagPoint",
    "KVector",
    "QTFraction",
    "apply_word",
    "enumerate_a_indices",
    "enumerate_flags",
    "from_flag",
    "from_text",
    "operator_matrix",
    "parse_word",
    "pieri",
    "to_flag",
    "to_text",
]
__version__ = "0.1.0"
