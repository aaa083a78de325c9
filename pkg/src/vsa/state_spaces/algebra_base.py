"""
This module defines an abstract base class for vertex superalgebras presented by a PBW basis.
Concrete backends supply the basis enumeration, the generator modes, the n-th products and
the translation operator; the base class adds caching, lattice checks and the StateVector API.
"""

import logging
from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Dict, Hashable, List, NamedTuple, Sequence, Tuple, Union

from vsa.errors import AmbientMismatchError, LatticeError, StructureError
from vsa.scalars_linear import Parity, check_mode_index, check_weight, format_scalar, lattice_points, parse_scalar
from vsa.state_spaces.monomial import Generator, Mode, MonomialState, make_monomial
from vsa.state_spaces.state_vector import StateVector, Terms, add_terms

logger = logging.getLogger(__name__)


class DimensionRow(NamedTuple):
    """One row of a graded dimension table."""

    weight: Fraction
    dim: int
    even: int
    odd: int

    def to_json(self) -> dict:
        return {"weight": format_scalar(self.weight), "dim": self.dim, "even": self.even, "odd": self.odd}


class VertexAlgebra(ABC):
    """
    Abstract base class representing a vertex superalgebra V = ⊕_{n ∈ (1/T)ℕ} V_n.

    A vertex superalgebra is a ℤ₂-graded space with a vacuum 1 and a state-field map
    Y(v, z) = Σ_{n ∈ ℤ} v_n z^{−n−1} such that:
        - u_n v = 0 for n ≫ 0,
        - Y(1, z) = id and Y(v, z)1 = v + (v_{−2}1)z + ···,
        - u_s V_n ⊆ V_{n+m−s−1} for u ∈ V_m,
        - the Jacobi (Borcherds) identity holds.

    Parameters
    ----------
    name : str
        Identifier used in reports.
    generators : sequence of Generator
        The strong generators, in the order used by generator indices.
    T : int
        The weight lattice denominator.
    """

    def __init__(self, name: str, generators: Sequence[Generator], T: int) -> None:
        self.name = name
        self.generators: Tuple[Generator, ...] = tuple(generators)
        self.T = int(T)
        ids = [g.id for g in self.generators]
        if len(set(ids)) != len(ids):
            raise StructureError(f"Repeated generator ids in {name}: {ids}")
        assert self.T >= 1, "The weight lattice denominator is positive"
        self._basis_cache: Dict[Fraction, List[Hashable]] = {}
        self._position_cache: Dict[Hashable, Tuple[Fraction, int]] = {}
        self._product_cache: Dict[Tuple[Hashable, int, Hashable], Terms] = {}

    @property
    @abstractmethod
    def signature(self) -> Tuple:
        """
        Hashable description identifying the presentation; equal signatures mean equal algebras.
        """

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VertexAlgebra):
            return NotImplemented
        return self is other or self.signature == other.signature

    def __hash__(self) -> int:
        return hash(self.signature)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.name!r})"

    @property
    @abstractmethod
    def vacuum_key(self) -> Hashable:
        """The basis label of the vacuum."""

    @abstractmethod
    def _enumerate(self, weight: Fraction) -> List[Hashable]:
        """All canonical basis labels of the exact weight, deterministic order."""

    @abstractmethod
    def _apply_generator(self, generator: int, index: Fraction, key: Hashable) -> Terms:
        """The generator mode a(index) applied to a basis state."""

    @abstractmethod
    def _product(self, left: Hashable, n: int, right: Hashable) -> Terms:
        """u_n v on basis states; callers go through product_terms for caching."""

    @abstractmethod
    def _translate(self, key: Hashable) -> Terms:
        """𝒟 on a basis state."""

    # basis -----------------------------------------------------------------

    def check_weight(self, weight: object) -> Fraction:
        return check_weight(weight, self.T)

    def enumerate_basis(self, weight: object) -> List[Hashable]:
        """
        Returns the canonical basis monomials of weight exactly n.

        Error
        ------
        LatticeError
            The weight is not in (1/T)·ℕ.
        """
        weight = self.check_weight(weight)
        if weight not in self._basis_cache:
            basis = self._enumerate(weight)
            self._basis_cache[weight] = basis
            for index, key in enumerate(basis):
                self._position_cache[key] = (weight, index)
            logger.debug("%s: %d basis states at weight %s", self.name, len(basis), format_scalar(weight))
        return list(self._basis_cache[weight])

    def basis_up_to(self, up_to: object) -> List[Hashable]:
        """All basis labels of weight ≤ up_to, by weight then canonical order."""
        up_to = parse_scalar(up_to)
        if up_to < 0:
            return []
        return [key for weight in lattice_points(up_to, self.T) for key in self.enumerate_basis(weight)]

    def basis_position(self, key: Hashable) -> Tuple[Fraction, int]:
        if key not in self._position_cache:
            self.enumerate_basis(key.weight)
        return self._position_cache[key]

    def graded_dimension(self, up_to: object) -> List[DimensionRow]:
        """
        Returns the dimensions, with even and odd parts, of all V_n with n ≤ up_to.

        Examples
        --------
        >>> from vsa.state_spaces import heisenberg
        >>> [row.dim for row in heisenberg().graded_dimension(8)]
        [1, 1, 2, 3, 5, 7, 11, 15, 22]

        """
        up_to = parse_scalar(up_to)
        rows = []
        for weight in lattice_points(up_to, self.T):
            basis = self.enumerate_basis(weight)
            odd = sum(1 for key in basis if key.parity is Parity.ODD)
            rows.append(DimensionRow(weight, len(basis), len(basis) - odd, odd))
        return rows

    @abstractmethod
    def filtration_level(self, key: Hashable) -> Fraction:
        """Sum of generator degrees of a basis monomial."""

    # generators ------------------------------------------------------------

    def generator_index(self, generator: Union[int, str]) -> int:
        if isinstance(generator, int):
            if not 0 <= generator < len(self.generators):
                raise StructureError(f"Generator index {generator} out of range for {self.name}")
            return generator
        for index, candidate in enumerate(self.generators):
            if candidate.id == generator:
                return index
        raise StructureError(f"Unknown generator {generator!r} in {self.name}")

    def generator_state(self, generator: Union[int, str]) -> StateVector:
        """The state a(−deg a)1 whose field has modes a_(k) = a(k − deg a + 1)."""
        index = self.generator_index(generator)
        return self.apply_generator_mode(index, -self.generators[index].degree, self.vacuum())

    def vertex_mode_index(self, generator: int, k: int) -> Fraction:
        """Physical index of the vertex mode a_(k)."""
        return Fraction(k) - self.generators[generator].degree + 1

    # state vectors ---------------------------------------------------------

    def vacuum(self) -> StateVector:
        return StateVector(self, {self.vacuum_key: 1})

    def zero(self) -> StateVector:
        return StateVector(self)

    def basis_vector(self, key: Hashable) -> StateVector:
        return StateVector(self, {key: 1})

    def vector(self, terms: Terms) -> StateVector:
        return StateVector(self, terms)

    def _own(self, *states: StateVector) -> None:
        for state in states:
            if not isinstance(state, StateVector) or state.algebra != self:
                raise AmbientMismatchError(f"State does not belong to {self.name}")

    def apply_terms(self, generator: int, index: Fraction, terms: Terms) -> Terms:
        result: Terms = {}
        for key, value in terms.items():
            add_terms(result, self._apply_generator(generator, index, key), value)
        return result

    def apply_generator_mode(self, generator: Union[int, str], n: object, v: StateVector) -> StateVector:
        """
        Applies the generator mode a(n) to a state.

        Parameters
        ----------
        generator : int or str
            Generator index or id.
        n : int, Fraction or str
            The mode index in the generator's lattice deg a + ℤ.
        v : StateVector
            The state acted on.

        Error
        ------
        LatticeError
            The index is not in the generator's mode lattice.
        """
        self._own(v)
        index = self.generator_index(generator)
        n = parse_scalar(n)
        if not self.generators[index].admits_index(n):
            raise LatticeError(f"Mode {self.generators[index].id}({format_scalar(n)}) is off its lattice")
        return StateVector(self, self.apply_terms(index, n, v.terms))

    def product_terms(self, left: Hashable, n: int, right: Hashable) -> Terms:
        """u_n v on basis labels, memoized."""
        if left.weight + right.weight - n - 1 < 0:
            return {}
        cache_key = (left, n, right)
        cached = self._product_cache.get(cache_key)
        if cached is None:
            cached = self._product(left, n, right)
            self._product_cache[cache_key] = cached
        return cached

    def nth_product(self, u: StateVector, n: object, v: StateVector) -> StateVector:
        """
        Returns u_n v, bilinear in u and v.

        Error
        ------
        AmbientMismatchError
            u or v belongs to another algebra.
        LatticeError
            n is not an integer.
        """
        self._own(u, v)
        n = check_mode_index(n)
        result: Terms = {}
        for left, a in u.terms.items():
            for right, b in v.terms.items():
                add_terms(result, self.product_terms(left, n, right), a * b)
        return StateVector(self, result)

    def translate_terms(self, terms: Terms) -> Terms:
        result: Terms = {}
        for key, value in terms.items():
            add_terms(result, self._translate(key), value)
        return result

    def translation(self, v: StateVector) -> StateVector:
        """Returns 𝒟v = v_{−2}1."""
        self._own(v)
        return StateVector(self, self.translate_terms(v.terms))

    # labels ----------------------------------------------------------------

    def key_modes(self, key: Hashable) -> List[Mode]:
        """The creation modes of a basis label, numbered by this algebra's generator table."""
        return list(key.modes)

    def format_key(self, key: Hashable) -> str:
        if key.is_vacuum:
            return "1"
        modes = self.key_modes(key)
        return "".join(f"{self.generators[m.generator].id}({format_scalar(-m.depth)})" for m in modes) + ".1"

    def parse_state(self, text: str) -> StateVector:
        """
        Parses a state expression such as "x(-1)x(-2).1 - 1/2*1".
        """
        from vsa.state_spaces.state_parser import parse_state

        return parse_state(self, text)


class MonomialAlgebra(VertexAlgebra):
    """
    Shared behaviour of backends whose basis labels are MonomialStates over one generator table.
    """

    @property
    def vacuum_key(self) -> MonomialState:
        return MonomialState((), Parity.EVEN, Fraction(0))

    def monomial(self, modes) -> MonomialState:
        return make_monomial(self.generators, modes)

    def filtration_level(self, key: MonomialState) -> Fraction:
        return sum((self.generators[m.generator].degree for m in key.modes), Fraction(0))


def enumerate_basis(algebra: VertexAlgebra, weight: object) -> List[Hashable]:
    """Canonical basis monomials of V of weight exactly n."""
    return algebra.enumerate_basis(weight)


def graded_dimension(algebra: VertexAlgebra, up_to: object) -> List[DimensionRow]:
    """Dimension table of V up to the given weight."""
    return algebra.graded_dimension(up_to)
