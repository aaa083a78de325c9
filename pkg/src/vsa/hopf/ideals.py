"""
This module checks subspaces of a Hopf algebra for being bialgebra or Hopf ideals, and builds
the Hopf ideals ℚ[G]·ℚ[N]⁺ attached to normal subgroups.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, List, Sequence

import numpy as np

from vsa.errors import PreconditionError, StructureError
from vsa.hopf.hopf_algebra import Element, HopfSpec, zeros
from vsa.scalars_linear import EchelonBasis, dense_to_sparse
from vsa.violations import Violation, sorted_violations

BIALGEBRA = "bialgebra"
HOPF = "hopf"


@dataclass(frozen=True, eq=False)
class IdealCandidate:
    """
    A subspace I ⊆ H kept as a reduced echelon basis.

    Parameters
    ----------
    hopf : HopfSpec
        The ambient Hopf algebra.
    span : tuple of Element
        Echelonized basis vectors.
    """

    hopf: HopfSpec
    span: tuple

    @classmethod
    def of(cls, hopf: HopfSpec, vectors: Sequence[Sequence[object]] = ()) -> "IdealCandidate":
        """
        Echelonizes the span of the given coefficient vectors.

        Error
        ------
        StructureError
            A vector does not have dim H coordinates.
        """
        echelon = EchelonBasis()
        for vector in vectors:
            if len(vector) != hopf.dimension:
                raise StructureError(f"Vector of length {len(vector)} in a {hopf.dimension}-dimensional Hopf algebra")
            echelon.add(dense_to_sparse(vector))
        span = []
        for row in sorted(echelon.vectors, key=lambda r: sorted(r.items())):
            dense = zeros(hopf.dimension)
            for index, value in row.items():
                dense[index] = value
            span.append(dense)
        return cls(hopf, tuple(span))

    @property
    def dimension(self) -> int:
        return len(self.span)

    def echelon(self) -> EchelonBasis:
        return EchelonBasis(dense_to_sparse(v) for v in self.span)

    def contains(self, a: Element) -> bool:
        return self.echelon().contains(dense_to_sparse(a))

    def to_json(self) -> dict:
        return {"hopf": self.hopf.name, "dimension": self.dimension, "span": [self.hopf.format_element(v) for v in self.span]}


def _coideal_space(I: IdealCandidate) -> EchelonBasis:
    """The span of H ⊗ I + I ⊗ H, coordinates (j, k) over e_j ⊗ e_k."""
    H = I.hopf
    space = EchelonBasis()
    for w in I.span:
        for a in range(H.dimension):
            ea = H.basis_element(a)
            space.add(_tensor_sparse(np.multiply.outer(ea, w)))
            space.add(_tensor_sparse(np.multiply.outer(w, ea)))
    return space


def _tensor_sparse(t: np.ndarray) -> dict:
    return {index: Fraction(value) for index, value in np.ndenumerate(t) if value != 0}


def verify_ideal(I: IdealCandidate, mode: str = HOPF) -> List[Violation]:
    """
    Checks IH ⊆ I, HI ⊆ I, Δ(I) ⊆ H ⊗ I + I ⊗ H and ε(I) = 0, plus S(I) ⊆ I in hopf mode.

    Parameters
    ----------
    I : IdealCandidate
        The subspace to check.
    mode : str
        "bialgebra" or "hopf".

    Returns
    -------
    violations : list of Violation
        Named ideal-left, ideal-right, coideal, counit and antipode, each with the offending
        basis vector of I.

    Examples
    --------
    >>> from vsa.hopf import cyclic_group, group_algebra
    >>> H = group_algebra(cyclic_group(2))
    >>> verify_ideal(IdealCandidate.of(H, [[1, -1]]), "hopf")
    []
    >>> [v.check for v in verify_ideal(IdealCandidate.of(H, [[0, 1]]), "bialgebra")]
    ['counit', 'ideal-left', 'ideal-right']

    """
    if mode not in (BIALGEBRA, HOPF):
        raise StructureError(f"Unknown ideal mode {mode!r}")
    H = I.hopf
    echelon = I.echelon()
    coideal = _coideal_space(I)
    violations = []
    for number, w in enumerate(I.span):
        label = str(number)
        for a in range(H.dimension):
            ea = H.basis_element(a)
            if not echelon.contains(dense_to_sparse(H.product(ea, w))):
                violations.append(Violation("ideal-left", (H.basis[a], label), H.format_element(w)))
            if not echelon.contains(dense_to_sparse(H.product(w, ea))):
                violations.append(Violation("ideal-right", (label, H.basis[a]), H.format_element(w)))
        if not coideal.contains(_tensor_sparse(H.coproduct(w))):
            violations.append(Violation("coideal", (label,), H.format_element(w)))
        if H.counit_of(w) != 0:
            violations.append(Violation("counit", (label,), H.format_element(w)))
        if mode == HOPF and not echelon.contains(dense_to_sparse(H.antipode_of(w))):
            violations.append(Violation("antipode", (label,), H.format_element(w)))
    return sorted_violations(violations)


def normal_subgroup_ideal(H: HopfSpec, subgroup: FrozenSet[int]) -> IdealCandidate:
    """
    The Hopf ideal ℚ[G]·ℚ[N]⁺ = span{g(n − 1)} of a group algebra, of dimension |G| − |G/N|.

    Error
    ------
    PreconditionError
        H is not presented as a group algebra, or N is not a normal subgroup.
    """
    G = H.group
    if G is None:
        raise PreconditionError(f"{H.name} is not presented as a group algebra")
    if not G.is_normal(frozenset(subgroup)) or G.identity not in subgroup:
        raise PreconditionError(f"{sorted(subgroup)} is not a normal subgroup of {G.name}")
    vectors = []
    for g in range(G.order):
        for n in sorted(subgroup):
            vector = zeros(H.dimension)
            vector[G.multiply(g, n)] += 1
            vector[g] -= 1
            vectors.append(vector)
    return IdealCandidate.of(H, vectors)
