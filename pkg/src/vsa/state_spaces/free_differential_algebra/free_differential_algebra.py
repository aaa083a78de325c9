"""
This module defines F(𝔥), the free commutative differential superalgebra on a graded superspace 𝔥,
viewed as a commutative vertex superalgebra with Y(a, z)b = (e^{z∂}a)b.
"""

from fractions import Fraction
from math import factorial
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from vsa.errors import StructureError
from vsa.scalars_linear import Parity, format_scalar, lcm_of_denominators, parse_scalar
from vsa.state_spaces.algebra_base import MonomialAlgebra
from vsa.state_spaces.monomial import Generator, Mode, MonomialState, enumerate_monomials, mode_key
from vsa.state_spaces.state_vector import Terms, add_terms

GeneratorLike = Union[Tuple[str, Parity], Tuple[str, Parity, object], Generator]


def _as_generator(entry: GeneratorLike) -> Generator:
    if isinstance(entry, Generator):
        return entry
    if len(entry) == 2:
        identifier, parity = entry
        degree = 1
    else:
        identifier, parity, degree = entry
    degree = parse_scalar(degree)
    if degree <= 0:
        raise StructureError(f"Generator {identifier!r} needs a positive degree")
    return Generator(str(identifier), Parity.parse(parity), degree)


class FreeDifferentialAlgebra(MonomialAlgebra):
    """
    Class representing F(𝔥) = S(𝔥 ⊗ t⁻¹ℂ[t⁻¹]) with the derivation ∂.

    Parameters
    ----------
    generators : iterable of (id, Parity) or (id, Parity, degree)
        Basis of 𝔥. A generator h of degree d has creation modes h(−n), n ∈ d + ℕ, of weight n;
        degree 1 gives the familiar h(−1), h(−2), ....

    Notes
    -----
    Monomials multiply supercommutatively, with a Koszul sign for each transposition of odd
    factors. The derivation is ∂h(−n) = (n − d + 1)·h(−n − 1), so ∂h(−n) = n·h(−n − 1) in degree 1.
    Products are u_(n)v = (∂^j u / j!)·v with j = −n − 1 for n ≤ −1, and 0 for n ≥ 0.

    Examples
    --------
    >>> V = FreeDifferentialAlgebra([("h", Parity.EVEN)])
    >>> V.translation(V.parse_state("h(-1).1")).format()
    'h(-2).1'

    """

    def __init__(self, generators: Iterable[GeneratorLike], name: Optional[str] = None) -> None:
        generators = [_as_generator(entry) for entry in generators]
        T = lcm_of_denominators(g.degree for g in generators)
        if name is None:
            label = ",".join(f"{g.id}:{g.parity.label}:{format_scalar(g.degree)}" for g in generators)
            name = f"freediff({label})"
        super().__init__(name, generators, T)

    @property
    def signature(self) -> Tuple:
        return ("freediff", self.generators)

    def _enumerate(self, weight: Fraction) -> List[MonomialState]:
        return enumerate_monomials(self.generators, weight)

    def sort_modes(self, modes: Sequence[Mode]) -> Tuple[Optional[Tuple[Mode, ...]], int]:
        """
        Sorts modes canonically and returns (sorted modes, Koszul sign), or (None, 0) when an odd
        mode repeats.
        """
        modes = list(modes)
        sign = 1
        for i in range(1, len(modes)):
            j = i
            while j > 0 and mode_key(modes[j - 1]) > mode_key(modes[j]):
                if self.generators[modes[j].generator].parity is Parity.ODD and (
                    self.generators[modes[j - 1].generator].parity is Parity.ODD
                ):
                    sign = -sign
                modes[j - 1], modes[j] = modes[j], modes[j - 1]
                j -= 1
        for first, second in zip(modes, modes[1:]):
            if first == second and self.generators[first.generator].parity is Parity.ODD:
                return None, 0
        return tuple(modes), sign

    def multiply_modes(self, modes: Sequence[Mode]) -> Terms:
        ordered, sign = self.sort_modes(modes)
        if ordered is None:
            return {}
        return {self.monomial(ordered): Fraction(sign)}

    def multiply(self, left: MonomialState, right: MonomialState) -> Terms:
        """The supercommutative product of two monomials."""
        return self.multiply_modes(left.modes + right.modes)

    def _apply_generator(self, generator: int, index: Fraction, key: MonomialState) -> Terms:
        if index > -self.generators[generator].degree:
            return {}
        return self.multiply_modes((Mode(generator, -index),) + key.modes)

    def _derive(self, key: MonomialState) -> Terms:
        result: Terms = {}
        for position, mode in enumerate(key.modes):
            coefficient = mode.depth - self.generators[mode.generator].degree + 1
            modes = list(key.modes)
            modes[position] = Mode(mode.generator, mode.depth + 1)
            add_terms(result, self.multiply_modes(modes), coefficient)
        return result

    def _translate(self, key: MonomialState) -> Terms:
        return self._derive(key)

    def _product(self, left: MonomialState, n: int, right: MonomialState) -> Terms:
        if n >= 0:
            return {}
        order = -n - 1
        derived: Terms = {left: Fraction(1)}
        for _ in range(order):
            derived = self.translate_terms(derived)
        result: Terms = {}
        for key, value in derived.items():
            add_terms(result, self.multiply(key, right), value / factorial(order))
        return result
