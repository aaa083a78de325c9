"""
state_spaces/__init__.py
"""

from .algebra_base import DimensionRow, MonomialAlgebra, VertexAlgebra, enumerate_basis, graded_dimension
from .monomial import Generator, Mode, MonomialState, TensorMonomial, enumerate_monomials, mode_key
from .state_vector import StateVector
from .mode_algebra_base import ModeAlgebra
from .affine_algebra import AffineAlgebra
from .neveu_schwarz_algebra import NeveuSchwarzAlgebra
from .free_differential_algebra import FreeDifferentialAlgebra
from .tensor_algebra import TensorAlgebra, tensor_state
from .state_parser import parse_state
from .builtin_algebras import (
    affine_osp12,
    affine_sl2,
    free_differential,
    heisenberg,
    heisenberg_double_algebra,
    neveu_schwarz,
    odd_pair,
    superspace,
)
