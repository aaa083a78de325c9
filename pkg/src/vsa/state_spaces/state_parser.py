"""
This module parses the state-expression grammar used on the command line:

    expr  := term (('+' | '-') term)*
    term  := [coeff '*'] mono | coeff
    mono  := '1' | mode+ '.1'
    mode  := id '(' index ')'
    coeff := p | p/q

Modes are applied right to left to the vacuum, so non-canonical input is straightened.
"""

import re
from fractions import Fraction
from typing import TYPE_CHECKING, List, Tuple

from vsa.errors import StructureError
from vsa.scalars_linear import parse_scalar
from vsa.state_spaces.state_vector import StateVector, Terms, add_terms

if TYPE_CHECKING:
    from vsa.state_spaces.algebra_base import VertexAlgebra

_MODE = re.compile(r"([^\W\d][\w]*'*)\(\s*([+-]?\d+(?:/\d+)?)\s*\)")
_COEFFICIENT = re.compile(r"^(\d+(?:/\d+)?)\s*\*\s*(.+)$")
_NUMBER = re.compile(r"^\d+(?:/\d+)?$")


def _split_terms(text: str) -> List[Tuple[int, str]]:
    terms, depth, sign, current = [], 0, 1, ""
    for position, char in enumerate(text):
        if char == "(":
            depth += 1
        elif char == ")":
            depth -= 1
        if char in "+-" and depth == 0:
            if current.strip():
                terms.append((sign, current.strip()))
            elif position != 0 and current.strip() == "" and terms:
                raise StructureError(f"Dangling operator in {text!r}")
            sign, current = (1 if char == "+" else -1), ""
            continue
        current += char
    if current.strip():
        terms.append((sign, current.strip()))
    if depth != 0 or not terms:
        raise StructureError(f"Malformed state expression {text!r}")
    return terms


def parse_state(algebra: "VertexAlgebra", text: str) -> StateVector:
    """
    Parses a state expression in the given algebra.

    Parameters
    ----------
    algebra : VertexAlgebra
        The ambient algebra, whose generator ids the expression uses.
    text : str
        For example "x(-1)x(-2).1", "1/2*L(-2).1 - 1" or "0".

    Returns
    -------
    state : StateVector
        The straightened state.

    Error
    ------
    StructureError
        The expression does not follow the grammar or names unknown generators.
    LatticeError
        A mode index is off its generator's lattice.

    Examples
    --------
    >>> from vsa.state_spaces import neveu_schwarz
    >>> parse_state(neveu_schwarz(1), "G(-3/2)L(-2).1").format()
    '-1/2*G(-7/2).1 + L(-2)G(-3/2).1'

    """
    text = text.strip()
    if text == "0":
        return algebra.zero()
    result: Terms = {}
    for sign, term in _split_terms(text):
        coefficient = Fraction(sign)
        match = _COEFFICIENT.match(term)
        if match:
            coefficient *= parse_scalar(match.group(1))
            term = match.group(2).strip()
        elif _NUMBER.match(term):
            coefficient *= parse_scalar(term)
            term = "1"
        add_terms(result, _parse_monomial(algebra, term).terms, coefficient)
    return StateVector(algebra, result)


def _parse_monomial(algebra: "VertexAlgebra", term: str) -> StateVector:
    if term == "1":
        return algebra.vacuum()
    if not term.endswith(".1"):
        raise StructureError(f"Monomial {term!r} must end with '.1'")
    body = term[:-2].replace(" ", "")
    modes = []
    position = 0
    while position < len(body):
        match = _MODE.match(body, position)
        if match is None:
            raise StructureError(f"Cannot read a mode at {body[position:]!r}")
        modes.append((match.group(1), parse_scalar(match.group(2))))
        position = match.end()
    state = algebra.vacuum()
    for identifier, index in reversed(modes):
        state = algebra.apply_generator_mode(identifier, index, state)
    return state
