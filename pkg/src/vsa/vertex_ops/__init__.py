"""
vertex_ops/__init__.py
"""

from .operations import TruncatedField, apply_generator_mode, mode_range, nth_product, translation, vertex_operator
from .axioms import (
    check_borcherds,
    check_skew_symmetry,
    check_translation,
    check_vacuum,
    sweep_borcherds,
    sweep_skew_symmetry,
    sweep_translation,
)
