"""
state_spaces/free_differential_algebra/__init__.py
"""

from .free_differential_algebra import FreeDifferentialAlgebra
