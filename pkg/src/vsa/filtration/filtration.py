"""
This module implements the increasing filtration E_p(V) spanned by generator monomials whose
generator degrees sum to at most p, and the associated graded algebra gr_E(V).
"""

import itertools
import logging
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from vsa.errors import StructureError
from vsa.scalars_linear import Parity, floor_fraction, format_scalar, koszul_sign, parse_scalar
from vsa.state_spaces import StateVector, VertexAlgebra
from vsa.vertex_ops.operations import _same_ambient
from vsa.violations import Violation, sorted_violations

logger = logging.getLogger(__name__)

BiDegree = Tuple[Fraction, Fraction, Parity]
"""(filtration level, weight, parity) of a graded piece."""


def filtration_level(v: StateVector) -> Fraction:
    """
    Returns the least p with v ∈ E_p(V).

    Parameters
    ----------
    v : StateVector
        A nonzero state.

    Returns
    -------
    level : Fraction
        The largest generator-degree sum among the monomials of v; depths do not matter.

    Error
    ------
    StructureError
        The zero vector lies in every E_p and has no level.

    Examples
    --------
    >>> from vsa.state_spaces import neveu_schwarz
    >>> V = neveu_schwarz(1)
    >>> filtration_level(V.parse_state("L(-2)G(-3/2).1"))
    Fraction(7, 2)
    >>> filtration_level(V.vacuum())
    Fraction(0, 1)

    """
    if v.is_zero:
        raise StructureError("The zero vector has no filtration level")
    return max(v.algebra.filtration_level(key) for key in v.terms)


def project(v: StateVector, level: Fraction) -> StateVector:
    """
    Keeps the monomials of exact level p, i.e. the image of v ∈ E_p in E_p / E_{p−1/T}.
    """
    algebra = v.algebra
    return algebra.vector({key: value for key, value in v.terms.items() if algebra.filtration_level(key) == level})


@dataclass(frozen=True)
class GrElement:
    """
    The class of a state in E_p(V) / E_{p−1/T}(V).

    Parameters
    ----------
    representative : StateVector
        Holds only monomials of exact level p, one canonical representative per class.
    level : Fraction
        The filtration degree p.
    """

    representative: StateVector
    level: Fraction

    def __post_init__(self) -> None:
        algebra = self.representative.algebra
        assert all(algebra.filtration_level(key) == self.level for key in self.representative.terms)

    @classmethod
    def of(cls, v: StateVector, level: Optional[object] = None) -> "GrElement":
        """
        The class of v at its own level, or at the given level p ≥ level(v).
        """
        if level is None:
            level = filtration_level(v) if not v.is_zero else Fraction(0)
        level = parse_scalar(level)
        return cls(project(v, level), level)

    @property
    def algebra(self) -> VertexAlgebra:
        return self.representative.algebra

    @property
    def is_zero(self) -> bool:
        return self.representative.is_zero

    def format(self) -> str:
        return f"[{self.representative.format()}]_{format_scalar(self.level)}"


def gr_product(u: GrElement, n: object, v: GrElement) -> GrElement:
    """
    Returns (u + E_{p−1/T})_n (v + E_{q−1/T}) = u_n v + E_{p+q−1/T}.

    Examples
    --------
    >>> from vsa.state_spaces import heisenberg
    >>> V = heisenberg()
    >>> x = GrElement.of(V.parse_state("x(-1).1"))
    >>> gr_product(x, -1, x).format()
    '[x(-1)x(-1).1]_2'
    >>> gr_product(x, 1, x).is_zero
    True

    """
    _same_ambient(u.representative, v.representative)
    product = u.algebra.nth_product(u.representative, n, v.representative)
    return GrElement.of(product, u.level + v.level)


def _gr_basis(algebra: VertexAlgebra, up_to_level: Fraction, up_to_weight: Fraction) -> List:
    return [key for key in algebra.basis_up_to(up_to_weight) if algebra.filtration_level(key) <= up_to_level]


def check_gr_commutative(
    algebra: VertexAlgebra, up_to_level: object, up_to_weight: Optional[object] = None
) -> List[Violation]:
    """
    Checks that gr_E(V) is a commutative vertex superalgebra on all basis pairs within the bounds.

    Parameters
    ----------
    algebra : VertexAlgebra
        The algebra V.
    up_to_level : Fraction
        Filtration levels of the inputs are at most this bound.
    up_to_weight : Fraction, optional
        Weights of the inputs are at most this bound; defaults to the level bound.

    Returns
    -------
    violations : list of Violation
        "gr-annihilation" when a product with n ≥ 0 survives the projection, and
        "gr-commutativity" when gr(u)_{−1}gr(v) ≠ (−1)^{|u||v|} gr(v)_{−1}gr(u).
    """
    up_to_level = parse_scalar(up_to_level)
    up_to_weight = up_to_level if up_to_weight is None else parse_scalar(up_to_weight)
    basis = _gr_basis(algebra, up_to_level, up_to_weight)
    logger.info("%s: gr commutativity on %d basis states", algebra.name, len(basis))
    violations = []
    for left, right in itertools.product(basis, repeat=2):
        u = GrElement.of(algebra.basis_vector(left))
        v = GrElement.of(algebra.basis_vector(right))
        labels = (algebra.format_key(left), algebra.format_key(right))
        for n in range(0, floor_fraction(left.weight + right.weight - 1) + 1):
            product = gr_product(u, n, v)
            if not product.is_zero:
                violations.append(Violation("gr-annihilation", labels + (n,), product.representative.to_json()))
        forward = gr_product(u, -1, v).representative
        backward = gr_product(v, -1, u).representative
        difference = forward - koszul_sign(left.parity, right.parity) * backward
        if not difference.is_zero:
            violations.append(Violation("gr-commutativity", labels, difference.to_json()))
    return sorted_violations(violations)


def gr_dimensions(algebra: VertexAlgebra, up_to: object) -> Dict[BiDegree, int]:
    """
    Dimensions of the pieces of gr_E(V) of weight ≤ up_to, by (level, weight, parity).

    Examples
    --------
    >>> from vsa.state_spaces import heisenberg
    >>> dims = gr_dimensions(heisenberg(), 3)
    >>> dims[(Fraction(2), Fraction(3), Parity.EVEN)]
    1

    """
    counts: Counter = Counter()
    for key in algebra.basis_up_to(up_to):
        counts[(algebra.filtration_level(key), key.weight, key.parity)] += 1
    return dict(sorted(counts.items()))


def convolve_gr_dimensions(left: Dict[BiDegree, int], right: Dict[BiDegree, int], up_to: object) -> Dict[BiDegree, int]:
    """
    The bi-degree dimensions predicted for V ⊗ U from those of V and U, using
    E_n(V ⊗ U) = Σ_{i+j=n} E_i(V) ⊗ E_j(U) and additivity of weight and parity.
    """
    up_to = parse_scalar(up_to)
    counts: Counter = Counter()
    for (p, m, a), x in left.items():
        for (q, n, b), y in right.items():
            if m + n <= up_to:
                counts[(p + q, m + n, a + b)] += x * y
    return dict(sorted(counts.items()))


def dimensions_to_json(dimensions: Dict[BiDegree, int]) -> List[dict]:
    return [
        {"level": format_scalar(p), "weight": format_scalar(w), "parity": parity.label, "dim": dim}
        for (p, w, parity), dim in sorted(dimensions.items())
    ]
