"""
lie_superalgebra/__init__.py
"""

from .lie_superalgebra import (
    LieSuperalgebraSpec,
    abelian_odd_pair,
    heisenberg_double,
    one_dimensional,
    osp12,
    sl2,
    validate,
)
