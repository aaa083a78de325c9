"""
This module defines the Neveu–Schwarz vertex superalgebra Ṽ_NS(c, 0) = V_NS(c, 0)/⟨G(−1/2)1⟩.
"""

from fractions import Fraction
from typing import Dict, Tuple

from vsa.scalars_linear import Parity, format_scalar, parse_scalar
from vsa.state_spaces.mode_algebra_base import ModeAlgebra, Op
from vsa.state_spaces.monomial import Generator

L, G = 0, 1


class NeveuSchwarzAlgebra(ModeAlgebra):
    """
    Class representing the N=1 super-Virasoro vacuum algebra of central charge c.

    Parameters
    ----------
    central_charge : int, Fraction or str
        The scalar c by which C acts.

    Notes
    -----
    The brackets are
        - [L(m), L(n)] = (m − n)L(m + n) + (m³ − m)/12·δ_{m+n,0}·c
        - [L(m), G(r)] = (m/2 − r)G(m + r)
        - [G(r), G(s)] = 2L(r + s) + (1/3)(r² − 1/4)·δ_{r+s,0}·c
    with L(n)1 = 0 for n ≥ −1 and G(r)1 = 0 for r ≥ −1/2. The generators ω = L(−2)1 and
    γ = G(−3/2)1 have weights 2 and 3/2, so ω_(n) = L(n − 1) and γ_(n) = G(n − 1/2).

    Examples
    --------
    >>> V = NeveuSchwarzAlgebra("1/2")
    >>> V.apply_generator_mode("L", 2, V.parse_state("L(-2).1")).format()
    '1/4*1'

    """

    def __init__(self, central_charge: object) -> None:
        self.central_charge = parse_scalar(central_charge)
        generators = [Generator("L", Parity.EVEN, Fraction(2)), Generator("G", Parity.ODD, Fraction(3, 2))]
        super().__init__(f"ns({format_scalar(self.central_charge)})", generators, 2)

    @property
    def signature(self) -> Tuple:
        return ("ns", self.central_charge)

    def bracket(self, x: Op, y: Op) -> Tuple[Dict[Op, Fraction], Fraction]:
        (i, m), (j, n) = x, y
        c = self.central_charge
        central = Fraction(0)
        if i == L and j == L:
            ops = {(L, m + n): m - n}
            if m + n == 0:
                central = (m**3 - m) / 12 * c
        elif i == L and j == G:
            ops = {(G, m + n): m / 2 - n}
        elif i == G and j == L:
            ops = {(G, m + n): -(n / 2 - m)}
        else:
            ops = {(L, m + n): Fraction(2)}
            if m + n == 0:
                central = (m**2 - Fraction(1, 4)) / 3 * c
        return {op: coefficient for op, coefficient in ops.items() if coefficient != 0}, central
