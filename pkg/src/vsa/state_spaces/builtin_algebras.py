"""
This module builds the standard algebras: the Heisenberg algebra, the odd abelian pair,
Heisenberg doubles, free differential algebras, affine sl₂ and osp(1|2), and Neveu–Schwarz.
"""

from typing import Iterable, Tuple

from vsa.lie_superalgebra import abelian_odd_pair, heisenberg_double, one_dimensional, osp12, sl2
from vsa.scalars_linear import Parity
from vsa.state_spaces.affine_algebra import AffineAlgebra
from vsa.state_spaces.free_differential_algebra import FreeDifferentialAlgebra
from vsa.state_spaces.neveu_schwarz_algebra import NeveuSchwarzAlgebra


def heisenberg(level: object = 1) -> AffineAlgebra:
    """The rank-one Heisenberg algebra, generator x with (x, x) = 1."""
    return AffineAlgebra(one_dimensional("x"), level)


def odd_pair(level: object = 1) -> AffineAlgebra:
    """Affine algebra of the odd abelian pair ψ₁, ψ₂ (free fermions)."""
    return AffineAlgebra(abelian_odd_pair(), level)


def heisenberg_double_algebra(h: Iterable[Tuple[str, Parity]], level: object = 1) -> AffineAlgebra:
    """V_H̃(k, 0) for the Heisenberg double H = 𝔥 ⊕ 𝔥̄."""
    return AffineAlgebra(heisenberg_double(h), level)


def superspace(even: int, odd: int) -> list:
    """
    Generator list of a (p|q)-dimensional superspace: e or e1..ep, then f or f1..fq.

    >>> [i for i, _ in superspace(1, 1)]
    ['e', 'f']
    >>> [i for i, _ in superspace(2, 0)]
    ['e1', 'e2']
    """

    def names(prefix: str, count: int):
        return [prefix] if count == 1 else [f"{prefix}{i}" for i in range(1, count + 1)]

    return [(i, Parity.EVEN) for i in names("e", even)] + [(i, Parity.ODD) for i in names("f", odd)]


def free_differential(even: int, odd: int) -> FreeDifferentialAlgebra:
    """F(𝔥) on a (p|q)-dimensional superspace of degree-1 generators."""
    return FreeDifferentialAlgebra(superspace(even, odd), name=f"freediff-({even}|{odd})")


def affine_sl2(level: object = 1) -> AffineAlgebra:
    return AffineAlgebra(sl2(), level)


def affine_osp12(level: object = 1) -> AffineAlgebra:
    return AffineAlgebra(osp12(), level)


def neveu_schwarz(central_charge: object) -> NeveuSchwarzAlgebra:
    return NeveuSchwarzAlgebra(central_charge)
