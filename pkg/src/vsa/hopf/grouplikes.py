"""
This module finds the grouplike elements of a cocommutative Hopf algebra over ℚ as the
characters of its commutative dual algebra.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional

import numpy as np
import sympy

from vsa.errors import PreconditionError
from vsa.hopf.hopf_algebra import Element, HopfSpec, is_cocommutative

logger = logging.getLogger(__name__)

DECIDED = "Decided"
UNDECIDED = "Undecided"


@dataclass
class GrouplikeSearch:
    """
    Outcome of find_grouplikes.

    Parameters
    ----------
    status : str
        "Decided" when the dual algebra splits over ℚ, "Undecided" otherwise.
    grouplikes : list of Element
        All grouplike elements, sorted descending lexicographically; empty when Undecided.
    """

    hopf: HopfSpec
    status: str
    grouplikes: List[Element] = field(default_factory=list)

    @property
    def is_group_basis(self) -> bool:
        """The grouplikes form a basis, exhibiting H as a group algebra."""
        return self.status == DECIDED and len(self.grouplikes) == self.hopf.dimension

    def to_json(self) -> dict:
        payload = {"hopf": self.hopf.name, "status": self.status}
        if self.status == DECIDED:
            payload["grouplikes"] = [self.hopf.format_element(g) for g in self.grouplikes]
            payload["group_basis"] = self.is_group_basis
        return payload


def _to_sympy(matrix: np.ndarray) -> sympy.Matrix:
    return sympy.Matrix(matrix.shape[0], matrix.shape[1], lambda r, c: sympy.Rational(matrix[r, c].numerator, matrix[r, c].denominator))


def _rational_roots(matrix: sympy.Matrix) -> Optional[List[sympy.Rational]]:
    """The distinct eigenvalues when the characteristic polynomial splits over ℚ, else None."""
    if matrix.rows == 0:
        return []
    variable = sympy.Symbol("t")
    polynomial = matrix.charpoly(variable)
    roots = sympy.roots(polynomial, filter="Q")
    if sum(roots.values()) != matrix.rows:
        return None
    return sorted(roots)


def find_grouplikes(H: HopfSpec) -> GrouplikeSearch:
    """
    Returns every g ∈ H with Δg = g ⊗ g and ε(g) = 1, when the dual algebra splits over ℚ.

    Parameters
    ----------
    H : HopfSpec
        A cocommutative Hopf algebra.

    Returns
    -------
    search : GrouplikeSearch
        Decided with all grouplikes, or Undecided when some character needs an extension of ℚ.

    Error
    ------
    PreconditionError
        H is not cocommutative, so its dual algebra is not commutative.

    Notes
    -----
    The dual basis satisfies e^j e^k = Σ_i Δ_i^{jk} e^i, so the characters χ of H* are the
    joint eigenvalue tuples (χ(e^0), ..., χ(e^{n−1})) of the commuting operators
    M_j = (Δ_i^{jk})_{i,k} transposed, and g = Σ χ(e^i) e_i. The joint generalized eigenspaces
    are split one operator at a time, with rational roots found by sympy.

    Examples
    --------
    >>> from vsa.hopf import cyclic_group, function_algebra, group_algebra
    >>> search = find_grouplikes(group_algebra(cyclic_group(2)))
    >>> [search.hopf.format_element(g) for g in search.grouplikes]
    [{'1': '1'}, {'g': '1'}]
    >>> find_grouplikes(function_algebra(cyclic_group(3))).status
    'Undecided'

    """
    cocommutative, witness = is_cocommutative(H)
    if not cocommutative:
        raise PreconditionError(f"{H.name} is not cocommutative (Δ ≠ Δ^op at {witness}); check is_cocommutative first")
    n = H.dimension
    operators = [_to_sympy(np.ascontiguousarray(H.comult[:, j, :].T)) for j in range(n)]
    # pieces: (basis of a joint generalized eigenspace as columns, eigenvalues found so far)
    pieces = [(sympy.eye(n), [])]
    for operator in operators:
        refined = []
        for basis, eigenvalues in pieces:
            restricted = (basis.T * basis).inv() * basis.T * operator * basis
            roots = _rational_roots(restricted)
            if roots is None:
                logger.info("%s: the dual algebra does not split over Q", H.name)
                return GrouplikeSearch(H, UNDECIDED)
            for root in roots:
                shifted = (restricted - root * sympy.eye(restricted.rows)) ** restricted.rows
                kernel = shifted.nullspace()
                if kernel:
                    refined.append((basis * sympy.Matrix.hstack(*kernel), eigenvalues + [root]))
        pieces = refined
    grouplikes = []
    for _, eigenvalues in pieces:
        vector = np.array([Fraction(int(value.p), int(value.q)) for value in eigenvalues], dtype=object)
        assert np.all(H.coproduct(vector) == np.multiply.outer(vector, vector)) and H.counit_of(vector) == 1
        grouplikes.append(vector)
    grouplikes.sort(key=lambda g: tuple(g), reverse=True)
    logger.info("%s: %d grouplike elements", H.name, len(grouplikes))
    return GrouplikeSearch(H, DECIDED, grouplikes)
