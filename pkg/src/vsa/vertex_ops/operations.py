"""
This module exposes the vertex operations on states: generator modes, n-th products u_n v, the
translation operator 𝒟 and truncated fields Y(u, z)v.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, Optional, Tuple, Union

from vsa.errors import AmbientMismatchError
from vsa.scalars_linear import ceil_fraction, floor_fraction, format_scalar, parse_scalar
from vsa.state_spaces import StateVector


def _same_ambient(*states: StateVector) -> None:
    algebra = states[0].algebra
    for state in states[1:]:
        if state.algebra != algebra:
            raise AmbientMismatchError(f"{algebra.name} and {state.algebra.name} differ")


def apply_generator_mode(a: Union[int, str], n: object, v: StateVector) -> StateVector:
    """
    Applies a(n) to v by PBW straightening; creation modes multiply, annihilation modes are
    commuted to the vacuum and killed there.

    Examples
    --------
    >>> from vsa.state_spaces import heisenberg
    >>> V = heisenberg()
    >>> apply_generator_mode("x", 0, V.vacuum()).is_zero
    True

    """
    return v.algebra.apply_generator_mode(a, n, v)


def nth_product(u: StateVector, n: object, v: StateVector) -> StateVector:
    """
    Returns u_n v.

    Parameters
    ----------
    u, v : StateVector
        States of the same algebra.
    n : int or str
        The product index, an integer.

    Returns
    -------
    product : StateVector
        Homogeneous of weight wt u + wt v − n − 1 for homogeneous inputs.

    Error
    ------
    AmbientMismatchError
        u and v belong to different algebras.

    Examples
    --------
    >>> from vsa.state_spaces import heisenberg
    >>> V = heisenberg()
    >>> x = V.parse_state("x(-1).1")
    >>> nth_product(x, 1, x).format()
    '1'
    >>> nth_product(x, -1, V.vacuum()) == x
    True

    """
    _same_ambient(u, v)
    return u.algebra.nth_product(u, n, v)


def translation(v: StateVector) -> StateVector:
    """
    Returns 𝒟v = v_{−2}1.

    Examples
    --------
    >>> from vsa.state_spaces import heisenberg
    >>> V = heisenberg()
    >>> translation(V.parse_state("x(-1).1")).format()
    'x(-2).1'
    >>> translation(V.vacuum()).is_zero
    True

    """
    return v.algebra.translation(v)


def mode_range(left_weight: Fraction, right_weight: Fraction, weight_cutoff: Fraction) -> range:
    """
    Integer indices s with 0 ≤ wt(u_s v) = wt u + wt v − s − 1 ≤ cutoff.

    >>> list(mode_range(Fraction(1), Fraction(1), Fraction(2)))
    [-1, 0, 1]
    """
    top = left_weight + right_weight - 1
    return range(ceil_fraction(top - weight_cutoff), floor_fraction(top) + 1)


@dataclass(frozen=True)
class TruncatedField:
    """
    The coefficients u_s v of Y(u, z)v whose weight is at most the cutoff.

    Parameters
    ----------
    coefficients : dict
        Map from index s to the nonzero state u_s v.
    weight_cutoff : Fraction
        Every coefficient of weight ≤ cutoff is present; absent indices in the window are zero.
    index_window : tuple of int
        The (lowest, highest) indices inspected.
    """

    coefficients: Dict[int, StateVector] = field(default_factory=dict)
    weight_cutoff: Fraction = Fraction(0)
    index_window: Tuple[int, int] = (0, -1)

    def coefficient(self, s: int) -> Optional[StateVector]:
        """u_s v, or None when it vanishes."""
        return self.coefficients.get(s)

    @property
    def indices(self):
        return sorted(self.coefficients)

    def to_json(self) -> dict:
        return {
            "weight_cutoff": format_scalar(self.weight_cutoff),
            "index_window": list(self.index_window),
            "coefficients": {str(s): self.coefficients[s].to_json() for s in sorted(self.coefficients)},
        }


def _components(state: StateVector) -> Iterable[StateVector]:
    return state.homogeneous_components().values()


def vertex_operator(u: StateVector, v: StateVector, weight_cutoff: object) -> TruncatedField:
    """
    Returns the truncation of Y(u, z)v to coefficients of weight ≤ weight_cutoff.

    Examples
    --------
    >>> from vsa.state_spaces import heisenberg
    >>> V = heisenberg()
    >>> x = V.parse_state("x(-1).1")
    >>> field = vertex_operator(x, x, 2)
    >>> field.indices
    [-1, 1]
    >>> field.coefficients[-1].format()
    'x(-1)x(-1).1'

    """
    _same_ambient(u, v)
    cutoff = parse_scalar(weight_cutoff)
    algebra = u.algebra
    coefficients: Dict[int, StateVector] = {}
    lowest, highest = None, None
    for left in _components(u):
        for right in _components(v):
            window = mode_range(left.weight, right.weight, cutoff)
            if len(window):
                lowest = window.start if lowest is None else min(lowest, window.start)
                highest = window.stop - 1 if highest is None else max(highest, window.stop - 1)
            for s in window:
                product = algebra.nth_product(left, s, right)
                if product.is_zero:
                    continue
                coefficients[s] = coefficients[s] + product if s in coefficients else product
    coefficients = {s: state for s, state in coefficients.items() if not state.is_zero}
    window = (lowest, highest) if lowest is not None else (0, -1)
    return TruncatedField(coefficients, cutoff, window)
