"""
This module defines the affine vertex superalgebra V_ĝ(k, 0), the level-k vacuum module of the
affinization ĝ = 𝔤 ⊗ ℂ[t, t⁻¹] ⊕ ℂK of a Lie superalgebra with an invariant form.
"""

from fractions import Fraction
from typing import Dict, Tuple

from vsa.lie_superalgebra import LieSuperalgebraSpec
from vsa.scalars_linear import format_scalar, parse_scalar
from vsa.state_spaces.mode_algebra_base import ModeAlgebra, Op
from vsa.state_spaces.monomial import Generator


class AffineAlgebra(ModeAlgebra):
    """
    Class representing V_ĝ(k, 0) with generators x(−1)1 of weight 1.

    Parameters
    ----------
    lie : LieSuperalgebraSpec
        The finite-dimensional Lie superalgebra 𝔤 with its even supersymmetric invariant form.
    level : int, Fraction or str
        The scalar k by which K acts.

    Notes
    -----
    [x(m), y(n)] = [x, y](m + n) + m·δ_{m+n,0}·(x, y)·k, and x(n)1 = 0 for n ≥ 0.

    Examples
    --------
    >>> from vsa.lie_superalgebra import one_dimensional
    >>> V = AffineAlgebra(one_dimensional(), 1)
    >>> V.apply_generator_mode("x", 1, V.parse_state("x(-1).1")).format()
    '1'

    """

    def __init__(self, lie: LieSuperalgebraSpec, level: object = 1) -> None:
        self.lie = lie
        self.level = parse_scalar(level)
        generators = [Generator(i, p, Fraction(1)) for i, p in lie.basis]
        super().__init__(f"affine({lie.name},k={format_scalar(self.level)})", generators, 1)

    @property
    def signature(self) -> Tuple:
        return ("affine", self.lie.signature, self.level)

    def bracket(self, x: Op, y: Op) -> Tuple[Dict[Op, Fraction], Fraction]:
        (i, m), (j, n) = x, y
        ops = {(k, m + n): c for k, c in self.lie.bracket(i, j).items()}
        central = m * self.lie.pair(i, j) * self.level if m + n == 0 else Fraction(0)
        return ops, central
