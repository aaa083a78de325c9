"""
This module defines the PBW basis labels shared by all backends: generators, creation modes,
normal-ordered monomial states and tensor monomials.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, NamedTuple, Sequence, Tuple

from vsa.scalars_linear import Parity


@dataclass(frozen=True)
class Generator:
    """
    A strong generator a of weight deg a; its creation modes a(−n) have depth n ∈ deg a + ℕ.

    Parameters
    ----------
    id : str
        Identifier used in state expressions.
    parity : Parity
        ℤ₂ degree of the generator.
    degree : Fraction
        Weight of the generator state a(−deg a)1.
    """

    id: str
    parity: Parity
    degree: Fraction = Fraction(1)

    def admits_depth(self, depth: Fraction) -> bool:
        """Tells whether a(−depth) is a creation mode."""
        return depth >= self.degree and (depth - self.degree).denominator == 1

    def admits_index(self, index: Fraction) -> bool:
        """Tells whether a(index) lies in the mode lattice deg a + ℤ."""
        return (index + self.degree).denominator == 1


class Mode(NamedTuple):
    """
    A creation mode a(−depth); its weight equals its depth.
    """

    generator: int
    depth: Fraction


def mode_key(mode: Mode) -> Tuple[Fraction, int]:
    """
    Canonical order: deepest first, ties by generator index.

    >>> mode_key(Mode(0, Fraction(2))) < mode_key(Mode(1, Fraction(1)))
    True
    """
    return -mode.depth, mode.generator


@dataclass(frozen=True)
class MonomialState:
    """
    Normal-ordered monomial a¹(−n₁)···aʳ(−n_r)1 with its parity and weight.

    Parameters
    ----------
    modes : tuple of Mode
        Creation modes in canonical order, leftmost applied last.
    parity : Parity
        Sum of the factor parities.
    weight : Fraction
        Sum of the factor depths.
    """

    modes: Tuple[Mode, ...]
    parity: Parity
    weight: Fraction

    @property
    def is_vacuum(self) -> bool:
        return not self.modes


@dataclass(frozen=True)
class TensorMonomial:
    """
    Basis label u ⊗ u′ of a tensor product algebra.
    """

    left: object
    right: object
    parity: Parity
    weight: Fraction

    @classmethod
    def of(cls, left, right) -> "TensorMonomial":
        return cls(left, right, left.parity + right.parity, left.weight + right.weight)

    @property
    def is_vacuum(self) -> bool:
        return self.left.is_vacuum and self.right.is_vacuum


def make_monomial(generators: Sequence[Generator], modes: Sequence[Mode]) -> MonomialState:
    parity = Parity.EVEN
    weight = Fraction(0)
    for mode in modes:
        parity = parity + generators[mode.generator].parity
        weight += mode.depth
    return MonomialState(tuple(modes), parity, weight)


def is_canonical(generators: Sequence[Generator], modes: Sequence[Mode]) -> bool:
    """
    Tells whether a mode sequence is in canonical order with no repeated odd mode.
    """
    for first, second in zip(modes, modes[1:]):
        if mode_key(first) > mode_key(second):
            return False
        if first == second and generators[first.generator].parity is Parity.ODD:
            return False
    return True


def enumerate_monomials(generators: Sequence[Generator], weight: Fraction) -> List[MonomialState]:
    """
    Lists all canonical monomials of the given weight, in lexicographic order of mode keys.

    Parameters
    ----------
    generators : sequence of Generator
        The strong generators.
    weight : Fraction
        The exact weight.

    Returns
    -------
    monomials : list of MonomialState
        Even modes may repeat, odd modes appear at most once.

    Examples
    --------
    >>> x = Generator("x", Parity.EVEN)
    >>> len(enumerate_monomials([x], Fraction(4)))
    5

    """
    weight = Fraction(weight)
    modes = []
    for index, generator in enumerate(generators):
        depth = generator.degree
        while depth <= weight:
            modes.append(Mode(index, depth))
            depth += 1
    modes.sort(key=mode_key)
    results: List[MonomialState] = []

    def extend(start: int, remaining: Fraction, prefix: List[Mode]) -> None:
        if remaining == 0:
            results.append(make_monomial(generators, prefix))
            return
        for position in range(start, len(modes)):
            mode = modes[position]
            if mode.depth > remaining:
                continue
            odd = generators[mode.generator].parity is Parity.ODD
            prefix.append(mode)
            extend(position + 1 if odd else position, remaining - mode.depth, prefix)
            prefix.pop()

    extend(0, weight, [])
    return results
