"""
state_spaces/neveu_schwarz_algebra/__init__.py
"""

from .neveu_schwarz_algebra import NeveuSchwarzAlgebra
