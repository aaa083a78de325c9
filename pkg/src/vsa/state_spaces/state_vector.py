"""
This module defines StateVector, a finite rational combination of basis monomials of one algebra,
and the sparse term helpers the backends use internally.
"""

from fractions import Fraction
from typing import TYPE_CHECKING, Dict, Hashable, Iterator, List, Mapping, Optional, Tuple

from vsa.errors import AmbientMismatchError
from vsa.scalars_linear import Parity, format_scalar

if TYPE_CHECKING:
    from vsa.state_spaces.algebra_base import VertexAlgebra

Terms = Dict[Hashable, Fraction]


def add_terms(accumulator: Terms, terms: Mapping[Hashable, Fraction], scale: object = 1) -> Terms:
    """
    Adds scale·terms into accumulator in place, dropping cancelled keys.
    """
    if not scale:
        return accumulator
    for key, value in terms.items():
        total = accumulator.get(key, Fraction(0)) + scale * value
        if total:
            accumulator[key] = total
        else:
            accumulator.pop(key, None)
    return accumulator


def scale_terms(terms: Mapping[Hashable, Fraction], scale: object) -> Terms:
    if not scale:
        return {}
    return {key: scale * value for key, value in terms.items()}


class StateVector:
    """
    Class representing an element of a vertex superalgebra in its PBW basis.

    Parameters
    ----------
    algebra : VertexAlgebra
        The ambient algebra.
    terms : mapping
        Map from basis monomial to coefficient. Zero coefficients are dropped.

    Examples
    --------
    >>> from vsa.state_spaces import heisenberg
    >>> V = heisenberg()
    >>> x = V.parse_state("x(-1).1")
    >>> (x + x - x) == x
    True
    >>> (x - x).is_zero
    True

    """

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: "VertexAlgebra", terms: Optional[Mapping[Hashable, object]] = None) -> None:
        self.algebra = algebra
        self.terms: Terms = {}
        for key, value in (terms or {}).items():
            value = Fraction(value)
            if value != 0:
                self.terms[key] = value
        assert all(v != 0 for v in self.terms.values()), "StateVector stores no zero coefficients"

    def _check_ambient(self, other: "StateVector") -> None:
        if not isinstance(other, StateVector) or other.algebra != self.algebra:
            raise AmbientMismatchError("States belong to different algebras")

    def __add__(self, other: "StateVector") -> "StateVector":
        self._check_ambient(other)
        return StateVector(self.algebra, add_terms(dict(self.terms), other.terms))

    def __sub__(self, other: "StateVector") -> "StateVector":
        self._check_ambient(other)
        return StateVector(self.algebra, add_terms(dict(self.terms), other.terms, -1))

    def __neg__(self) -> "StateVector":
        return StateVector(self.algebra, scale_terms(self.terms, -1))

    def __mul__(self, scalar: object) -> "StateVector":
        return StateVector(self.algebra, scale_terms(self.terms, Fraction(scalar)))

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, StateVector):
            return NotImplemented
        return self.algebra == other.algebra and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[Tuple[Hashable, Fraction]]:
        return iter(self.sorted_items())

    def __repr__(self) -> str:
        return f"StateVector({self.format()!r})"

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def parity(self) -> Optional[Parity]:
        """The common parity of all terms, None when mixed or zero."""
        parities = {key.parity for key in self.terms}
        return parities.pop() if len(parities) == 1 else None

    @property
    def weight(self) -> Optional[Fraction]:
        """The common weight of all terms, None when mixed or zero."""
        weights = {key.weight for key in self.terms}
        return weights.pop() if len(weights) == 1 else None

    @property
    def max_weight(self) -> Fraction:
        return max((key.weight for key in self.terms), default=Fraction(0))

    def homogeneous_components(self) -> Dict[Tuple[Fraction, Parity], "StateVector"]:
        """
        Splits the vector by (weight, parity).
        """
        components: Dict[Tuple[Fraction, Parity], Terms] = {}
        for key, value in self.terms.items():
            components.setdefault((key.weight, key.parity), {})[key] = value
        return {label: StateVector(self.algebra, terms) for label, terms in sorted(components.items())}

    def coefficient(self, key: Hashable) -> Fraction:
        return self.terms.get(key, Fraction(0))

    def sorted_items(self) -> List[Tuple[Hashable, Fraction]]:
        return sorted(self.terms.items(), key=lambda item: self.algebra.basis_position(item[0]))

    def format(self) -> str:
        """
        Renders the vector in the state-expression grammar, e.g. "x(-1)x(-1).1 - 1/2*1".
        """
        if not self.terms:
            return "0"
        pieces = []
        for key, value in self.sorted_items():
            label = self.algebra.format_key(key)
            magnitude = abs(value)
            body = label if magnitude == 1 else f"{format_scalar(magnitude)}*{label}"
            sign = "-" if value < 0 else "+"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def to_json(self) -> Dict[str, str]:
        return {self.algebra.format_key(key): format_scalar(value) for key, value in self.sorted_items()}
