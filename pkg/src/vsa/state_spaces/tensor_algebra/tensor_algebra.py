"""
This module defines the tensor product V ⊗ U of two vertex superalgebras,
(V ⊗ U)_n = ⊕_{i+j=n} V_i ⊗ U_j, with Y(u ⊗ u′, z)(v ⊗ v′) = (−1)^{|u′||v|} Y(u, z)v ⊗ Y(u′, z)v′.
"""

import math
from fractions import Fraction
from typing import List, Tuple

from vsa.errors import AmbientMismatchError
from vsa.scalars_linear import ceil_fraction, floor_fraction, in_lattice, koszul_sign, lattice_points
from vsa.state_spaces.algebra_base import VertexAlgebra
from vsa.state_spaces.monomial import Generator, Mode, TensorMonomial
from vsa.state_spaces.state_vector import StateVector, Terms, add_terms


class TensorAlgebra(VertexAlgebra):
    """
    Class representing the tensor product of two vertex superalgebras.

    Parameters
    ----------
    left : VertexAlgebra
        The first factor V.
    right : VertexAlgebra
        The second factor U. Generator ids clashing with V's receive a "'" suffix.

    Notes
    -----
    Generators of V act as a ⊗ 1, generators of U as 1 ⊗ a with the sign (−1)^{|a||u|} when
    passing u ∈ V. 𝒟 = 𝒟 ⊗ 1 + 1 ⊗ 𝒟 and T is the lcm of the factors' lattice denominators.

    Examples
    --------
    >>> from vsa.state_spaces import heisenberg, neveu_schwarz
    >>> VU = TensorAlgebra(heisenberg(), neveu_schwarz("1/2"))
    >>> [row.dim for row in VU.graded_dimension(2)]
    [1, 0, 1, 1, 3]

    """

    def __init__(self, left: VertexAlgebra, right: VertexAlgebra) -> None:
        self.left = left
        self.right = right
        taken = {g.id for g in left.generators}
        renamed = []
        for generator in right.generators:
            identifier = generator.id
            while identifier in taken:
                identifier += "'"
            taken.add(identifier)
            renamed.append(Generator(identifier, generator.parity, generator.degree))
        self._split = len(left.generators)
        super().__init__(
            f"tensor({left.name},{right.name})",
            list(left.generators) + renamed,
            math.lcm(left.T, right.T),
        )

    @property
    def signature(self) -> Tuple:
        return ("tensor", self.left.signature, self.right.signature)

    @property
    def vacuum_key(self) -> TensorMonomial:
        return TensorMonomial.of(self.left.vacuum_key, self.right.vacuum_key)

    def _enumerate(self, weight: Fraction) -> List[TensorMonomial]:
        basis = []
        for i in lattice_points(weight, self.left.T):
            j = weight - i
            if not in_lattice(j, self.right.T):
                continue
            for u in self.left.enumerate_basis(i):
                for v in self.right.enumerate_basis(j):
                    basis.append(TensorMonomial.of(u, v))
        return basis

    def filtration_level(self, key: TensorMonomial) -> Fraction:
        return self.left.filtration_level(key.left) + self.right.filtration_level(key.right)

    def _pair(self, left_terms: Terms, right_terms: Terms, scale: object = 1) -> Terms:
        return {
            TensorMonomial.of(u, v): scale * a * b for u, a in left_terms.items() for v, b in right_terms.items()
        }

    def _apply_generator(self, generator: int, index: Fraction, key: TensorMonomial) -> Terms:
        if generator < self._split:
            return self._pair(self.left._apply_generator(generator, index, key.left), {key.right: Fraction(1)})
        sign = koszul_sign(self.generators[generator].parity, key.left.parity)
        acted = self.right._apply_generator(generator - self._split, index, key.right)
        return self._pair({key.left: Fraction(1)}, acted, sign)

    def _product(self, left: TensorMonomial, n: int, right: TensorMonomial) -> Terms:
        sign = koszul_sign(left.right.parity, right.left.parity)
        lowest = ceil_fraction(n - left.right.weight - right.right.weight)
        highest = floor_fraction(left.left.weight + right.left.weight - 1)
        result: Terms = {}
        for p in range(lowest, highest + 1):
            first = self.left.product_terms(left.left, p, right.left)
            if not first:
                continue
            second = self.right.product_terms(left.right, n - 1 - p, right.right)
            if second:
                add_terms(result, self._pair(first, second), sign)
        return result

    def _translate(self, key: TensorMonomial) -> Terms:
        result = self._pair(self.left._translate(key.left), {key.right: Fraction(1)})
        add_terms(result, self._pair({key.left: Fraction(1)}, self.right._translate(key.right)))
        return result

    def key_modes(self, key: TensorMonomial) -> List[Mode]:
        right = [Mode(self._split + m.generator, m.depth) for m in self.right.key_modes(key.right)]
        return self.left.key_modes(key.left) + right


def tensor_state(u: StateVector, v: StateVector, algebra: TensorAlgebra) -> StateVector:
    """
    Returns u ⊗ v in the tensor algebra; bilinear, parities and weights add.

    Error
    ------
    AmbientMismatchError
        u or v does not belong to the matching factor.
    """
    if u.algebra != algebra.left or v.algebra != algebra.right:
        raise AmbientMismatchError("Tensor factors do not match the states' algebras")
    return StateVector(algebra, algebra._pair(u.terms, v.terms))
