"""
This module defines the exact scalar layer: rational parsing and formatting, the ℤ₂ parity,
weights in the (1/T)·ℕ lattice and the generalized binomial coefficient.
"""

import math
import re
from enum import IntEnum
from fractions import Fraction
from typing import Iterable, Iterator, Union

from vsa.errors import LatticeError, StructureError

Scalar = Fraction
"""Every coefficient, form value and structure constant is a Fraction."""

ScalarLike = Union[Fraction, int, str]

_RATIONAL = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_scalar(value: ScalarLike) -> Fraction:
    """
    Converts an integer, a Fraction or a "p/q" string into an exact rational.

    Parameters
    ----------
    value : int, Fraction or str
        The value to convert. Strings must read "p" or "p/q".

    Returns
    -------
    scalar : Fraction
        The value in lowest terms with a positive denominator.

    Error
    ------
    StructureError
        The value is a float, a decimal string, or otherwise not an exact rational.

    Examples
    --------
    >>> parse_scalar("6/4")
    Fraction(3, 2)
    >>> parse_scalar(-2)
    Fraction(-2, 1)

    """
    if isinstance(value, bool):
        raise StructureError(f"Booleans are not scalars: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        match = _RATIONAL.match(value)
        if match is None:
            raise StructureError(f"Not an exact rational 'p/q': {value!r}")
        numerator, denominator = match.group(1), match.group(2) or "1"
        if int(denominator) == 0:
            raise StructureError(f"Zero denominator in {value!r}")
        return Fraction(int(numerator), int(denominator))
    raise StructureError(f"Floating point and {type(value).__name__} values are rejected: {value!r}")


def format_scalar(value: Fraction) -> str:
    """
    Serializes a rational as "p/q", or "p" when q = 1.

    Examples
    --------
    >>> format_scalar(Fraction(7, 2))
    '7/2'
    >>> format_scalar(Fraction(-4, 2))
    '-2'

    """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class Parity(IntEnum):
    """
    The ℤ₂ degree of a homogeneous element, V = V₀̄ ⊕ V₁̄.

    Examples
    --------
    >>> Parity.ODD + Parity.ODD
    <Parity.EVEN: 0>
    >>> Parity.ODD.sign
    -1

    """

    EVEN = 0
    ODD = 1

    def __add__(self, other: int) -> "Parity":
        return Parity((int(self) + int(other)) % 2)

    __radd__ = __add__

    @property
    def sign(self) -> int:
        """(−1)^{|v|}, the eigenvalue of the canonical automorphism."""
        return -1 if self is Parity.ODD else 1

    @property
    def label(self) -> str:
        return "odd" if self is Parity.ODD else "even"

    @classmethod
    def parse(cls, value: Union[str, int, "Parity"]) -> "Parity":
        """
        Reads "even"/"odd", 0/1 or a Parity.

        Error
        ------
        StructureError
            The value names no parity.
        """
        if isinstance(value, Parity):
            return value
        if isinstance(value, str):
            lowered = value.strip().lower()
            if lowered in ("even", "0"):
                return cls.EVEN
            if lowered in ("odd", "1"):
                return cls.ODD
        elif isinstance(value, int) and value in (0, 1):
            return cls(value)
        raise StructureError(f"Unknown parity {value!r}")


def koszul_sign(first: int, second: int) -> int:
    """
    Returns (−1)^{|a||b|}, the sign of swapping two homogeneous elements.

    >>> koszul_sign(Parity.ODD, Parity.ODD)
    -1
    >>> koszul_sign(Parity.EVEN, Parity.ODD)
    1
    """
    return -1 if (int(first) & int(second)) else 1


def in_lattice(value: Fraction, lattice_denominator: int) -> bool:
    """
    Tells whether value lies in (1/T)·ℤ.

    >>> in_lattice(Fraction(3, 2), 2)
    True
    >>> in_lattice(Fraction(1, 3), 2)
    False
    """
    return (Fraction(value) * lattice_denominator).denominator == 1


def check_weight(value: ScalarLike, lattice_denominator: int) -> Fraction:
    """
    Parses a weight and checks that it lies in (1/T)·ℕ.

    Error
    ------
    LatticeError
        The weight is negative or not a multiple of 1/T.
    """
    weight = parse_scalar(value)
    if weight < 0:
        raise LatticeError(f"Weight {format_scalar(weight)} is negative")
    if not in_lattice(weight, lattice_denominator):
        raise LatticeError(f"Weight {format_scalar(weight)} is not in (1/{lattice_denominator})·ℕ")
    return weight


def check_mode_index(value: ScalarLike) -> int:
    """
    Parses an n-th product index, which is always an integer.

    Error
    ------
    LatticeError
        The index is not an integer.
    """
    index = parse_scalar(value)
    if index.denominator != 1:
        raise LatticeError(f"Mode index {format_scalar(index)} is not an integer")
    return index.numerator


def lattice_points(up_to: Fraction, lattice_denominator: int) -> Iterator[Fraction]:
    """
    Yields 0, 1/T, 2/T, ... up to and including up_to.

    >>> [format_scalar(w) for w in lattice_points(Fraction(3, 2), 2)]
    ['0', '1/2', '1', '3/2']
    """
    steps = math.floor(Fraction(up_to) * lattice_denominator)
    for step in range(steps + 1):
        yield Fraction(step, lattice_denominator)


def lcm_of_denominators(values: Iterable[Fraction]) -> int:
    """
    Returns the least common multiple of the denominators, 1 for an empty input.

    >>> lcm_of_denominators([Fraction(3, 2), Fraction(2, 3), Fraction(1)])
    6
    """
    return math.lcm(1, *(Fraction(v).denominator for v in values))


def binomial(upper: ScalarLike, lower: int) -> Fraction:
    """
    Generalized binomial coefficient C(x, j) = x(x−1)···(x−j+1)/j! for any rational x.

    Parameters
    ----------
    upper : int, Fraction or str
        The upper argument x; negative values are allowed.
    lower : int
        The lower argument j; negative values give 0.

    Returns
    -------
    coefficient : Fraction
        The exact coefficient.

    Examples
    --------
    >>> binomial(-2, 3)
    Fraction(-4, 1)
    >>> binomial(5, 2)
    Fraction(10, 1)
    >>> binomial(3, 5)
    Fraction(0, 1)

    """
    if lower < 0:
        return Fraction(0)
    x = parse_scalar(upper)
    result = Fraction(1)
    for i in range(lower):
        result = result * (x - i) / (i + 1)
    return result


def floor_fraction(value: Fraction) -> int:
    return math.floor(Fraction(value))


def ceil_fraction(value: Fraction) -> int:
    return math.ceil(Fraction(value))
