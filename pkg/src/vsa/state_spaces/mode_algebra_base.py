"""
This module defines the straightening engine shared by vacuum modules of mode Lie superalgebras
(affine and Neveu–Schwarz): PBW normal ordering, the iterate formula for n-th products and the
translation operator.
"""

import logging
from abc import abstractmethod
from fractions import Fraction
from typing import Dict, Tuple

from vsa.scalars_linear import Parity, binomial, floor_fraction, koszul_sign
from vsa.state_spaces.algebra_base import MonomialAlgebra
from vsa.state_spaces.monomial import Mode, MonomialState, mode_key
from vsa.state_spaces.state_vector import Terms, add_terms, scale_terms

logger = logging.getLogger(__name__)

Op = Tuple[int, Fraction]
"""A mode a(n) as (generator index, physical index n)."""


class ModeAlgebra(MonomialAlgebra):
    """
    Abstract base class of vacuum modules V = U(𝔏)·1 over a mode Lie superalgebra 𝔏.

    Modes a(n) with n ≤ −deg a create, modes with n > −deg a annihilate the vacuum. Central
    elements act by scalars, so bracket returns the central contribution already evaluated.

    Notes
    -----
    Straightening X·Y·w for creation modes out of order uses XY = [X, Y] + (−1)^{|X||Y|} YX,
    and X·X·w = ½[X, X]·w for an odd X.
    """

    def __init__(self, name, generators, T) -> None:
        super().__init__(name, generators, T)
        self._op_cache: Dict[Tuple[int, Fraction, MonomialState], Terms] = {}

    @abstractmethod
    def bracket(self, x: Op, y: Op) -> Tuple[Dict[Op, Fraction], Fraction]:
        """
        Returns ([x, y] as {op: c}, central scalar) for two modes.
        """

    def _enumerate(self, weight: Fraction):
        from vsa.state_spaces.monomial import enumerate_monomials

        return enumerate_monomials(self.generators, weight)

    def kills_vacuum(self, generator: int, index: Fraction) -> bool:
        return index > -self.generators[generator].degree

    def _precedes(self, first: Mode, second: Mode) -> bool:
        if mode_key(first) < mode_key(second):
            return True
        return first == second and self.generators[first.generator].parity is Parity.EVEN

    def _apply_generator(self, generator: int, index: Fraction, key: MonomialState) -> Terms:
        cache_key = (generator, index, key)
        cached = self._op_cache.get(cache_key)
        if cached is None:
            cached = self._straighten(generator, index, key)
            self._op_cache[cache_key] = cached
        return cached

    def _apply_bracket(self, ops: Dict[Op, Fraction], central: Fraction, key: MonomialState, scale: Fraction) -> Terms:
        result: Terms = {}
        for (generator, index), coefficient in ops.items():
            add_terms(result, self._apply_generator(generator, index, key), scale * coefficient)
        if central:
            add_terms(result, {key: Fraction(1)}, scale * central)
        return result

    def _straighten(self, generator: int, index: Fraction, key: MonomialState) -> Terms:
        creation = not self.kills_vacuum(generator, index)
        if key.is_vacuum:
            if not creation:
                return {}
            return {self.monomial((Mode(generator, -index),)): Fraction(1)}

        first = key.modes[0]
        rest = self.monomial(key.modes[1:])
        parity = self.generators[generator].parity
        if creation:
            mode = Mode(generator, -index)
            if self._precedes(mode, first):
                return {self.monomial((mode,) + key.modes): Fraction(1)}
            if mode == first:
                ops, central = self.bracket((generator, index), (generator, index))
                return self._apply_bracket(ops, central, rest, Fraction(1, 2))

        ops, central = self.bracket((generator, index), (first.generator, -first.depth))
        result = self._apply_bracket(ops, central, rest, Fraction(1))
        sign = koszul_sign(parity, self.generators[first.generator].parity)
        for word, coefficient in self._apply_generator(generator, index, rest).items():
            add_terms(result, self._apply_generator(first.generator, -first.depth, word), sign * coefficient)
        return result

    def _product(self, left: MonomialState, n: int, right: MonomialState) -> Terms:
        """
        Iterate formula for u = a_(−m) b, m ≥ 1:
            (a_(−m) b)_(n) v = Σ_j (−1)^j C(−m, j) [ a_(−m−j)(b_(n+j) v)
                               − (−1)^m (−1)^{|a||b|} b_(n−m−j)(a_(j) v) ].
        """
        if left.is_vacuum:
            return {right: Fraction(1)} if n == -1 else {}
        first = left.modes[0]
        rest = self.monomial(left.modes[1:])
        a = first.generator
        degree = self.generators[a].degree
        m = int(first.depth - degree + 1)
        result: Terms = {}

        for j in range(0, floor_fraction(rest.weight + right.weight - n - 1) + 1):
            coefficient = (-1) ** j * binomial(-m, j)
            inner = self.product_terms(rest, n + j, right)
            if inner:
                add_terms(result, self.apply_terms(a, self.vertex_mode_index(a, -m - j), inner), coefficient)

        sign = (-1) ** m * koszul_sign(self.generators[a].parity, rest.parity)
        for j in range(0, floor_fraction(degree + right.weight - 1) + 1):
            coefficient = (-1) ** j * binomial(-m, j)
            acted = self._apply_generator(a, self.vertex_mode_index(a, j), right)
            for word, value in acted.items():
                add_terms(result, self.product_terms(rest, n - m - j, word), -sign * coefficient * value)
        return result

    def _translate(self, key: MonomialState) -> Terms:
        """
        [𝒟, a(n)] = (1 − deg a − n)·a(n − 1), and 𝒟1 = 0.
        """
        result: Terms = {}
        for position, mode in enumerate(key.modes):
            tail = self.monomial(key.modes[position + 1 :])
            coefficient = mode.depth - self.generators[mode.generator].degree + 1
            terms = scale_terms(self._apply_generator(mode.generator, -(mode.depth + 1), tail), coefficient)
            for prior in reversed(key.modes[:position]):
                terms = self.apply_terms(prior.generator, -prior.depth, terms)
            add_terms(result, terms)
        return result
