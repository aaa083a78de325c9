"""
state_spaces/affine_algebra/__init__.py
"""

from .affine_algebra import AffineAlgebra
