"""
scalars_linear/__init__.py
"""

from .scalars import (
    Parity,
    Scalar,
    binomial,
    ceil_fraction,
    check_mode_index,
    check_weight,
    floor_fraction,
    format_scalar,
    in_lattice,
    koszul_sign,
    lattice_points,
    lcm_of_denominators,
    parse_scalar,
)
from .sparse_matrix import (
    EchelonBasis,
    SparseMatrix,
    dense_to_sparse,
    in_span,
    kernel_basis,
    rank,
    row_echelon,
    solve_nullspace,
)
