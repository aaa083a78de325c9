"""
This module certifies Y(z)-injectivity on graded truncations: the coefficient matrix of
u ⊗ v ↦ (u_s v)_s on V_{≤N} ⊗ V_{≤N} has full column rank.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Hashable, List, Optional, Sequence, Tuple

from vsa.defaults import CLOSURE_ITERATION_CAP, default_max_window
from vsa.errors import ClosureError
from vsa.filtration import GrElement, gr_product
from vsa.scalars_linear import EchelonBasis, SparseMatrix, floor_fraction, format_scalar, kernel_basis, parse_scalar, rank
from vsa.state_spaces import StateVector, VertexAlgebra
from vsa.vertex_ops.operations import _same_ambient, mode_range

logger = logging.getLogger(__name__)

INJECTIVE = "Injective"
UNDETERMINED = "Undetermined"

Product = Callable[[StateVector, int, StateVector], StateVector]


@dataclass
class InjectivityCertificate:
    """
    Outcome of a truncated Y(z)-injectivity test.

    Parameters
    ----------
    algebra : str
        Name of V.
    domain_cutoff : Fraction
        The truncation N.
    mode_window : tuple of int
        The (lowest, highest) mode indices s present in the widest matrix built.
    window_extra : int
        Outputs up to weight 2N + window_extra were captured.
    domain_dim, rank : int
        Number of columns and rank of that matrix.
    status : str
        "Injective" iff rank = domain_dim, else "Undetermined"; non-injectivity is never claimed.
    kernel_candidates : list of dict
        Kernel basis of the widest matrix, as combinations of domain pairs; empty when Injective.
    commutative : bool, optional
        For subalgebras: whether every product with n ≥ 0 vanishes on the closure.
    """

    algebra: str
    domain_cutoff: Fraction
    mode_window: Tuple[int, int]
    window_extra: int
    domain_dim: int
    rank: int
    status: str
    kernel_candidates: List[Dict[str, Fraction]] = field(default_factory=list)
    commutative: Optional[bool] = None

    def __post_init__(self) -> None:
        assert (self.status == INJECTIVE) == (self.rank == self.domain_dim)

    @property
    def injective(self) -> bool:
        return self.status == INJECTIVE

    def to_json(self) -> dict:
        payload = {
            "algebra": self.algebra,
            "domain_cutoff": format_scalar(self.domain_cutoff),
            "mode_window": list(self.mode_window),
            "window_extra": self.window_extra,
            "domain_dim": self.domain_dim,
            "rank": self.rank,
            "status": self.status,
        }
        if self.kernel_candidates:
            payload["kernel_candidates"] = [
                {label: format_scalar(value) for label, value in candidate.items()} for candidate in self.kernel_candidates
            ]
        if self.commutative is not None:
            payload["commutative"] = self.commutative
        return payload


@dataclass(frozen=True)
class YZSystem:
    """The assembled matrix with its column labels and mode window."""

    matrix: SparseMatrix
    columns: Tuple[Tuple[StateVector, StateVector], ...]
    mode_window: Tuple[int, int]


def _vertex_product(u: StateVector, n: int, v: StateVector) -> StateVector:
    return u.algebra.nth_product(u, n, v)


def _graded_product(u: StateVector, n: int, v: StateVector) -> StateVector:
    return gr_product(GrElement.of(u), n, GrElement.of(v)).representative


def _assemble(
    algebra: VertexAlgebra, domain: Sequence[StateVector], N: Fraction, window_extra: int, product: Product
) -> YZSystem:
    cutoff = 2 * N + window_extra
    columns = tuple((u, v) for u in domain for v in domain)
    column_entries: List[Dict[Tuple[int, Hashable], Fraction]] = []
    lowest, highest = None, None
    for u, v in columns:
        entries: Dict[Tuple[int, Hashable], Fraction] = {}
        for uc in u.homogeneous_components().values():
            for vc in v.homogeneous_components().values():
                window = mode_range(uc.weight, vc.weight, cutoff)
                if len(window):
                    lowest = window.start if lowest is None else min(lowest, window.start)
                    highest = window.stop - 1 if highest is None else max(highest, window.stop - 1)
                for s in window:
                    for key, value in product(uc, s, vc).terms.items():
                        total = entries.get((s, key), Fraction(0)) + value
                        if total:
                            entries[(s, key)] = total
                        else:
                            entries.pop((s, key), None)
        column_entries.append(entries)
    row_labels = sorted(
        {label for entries in column_entries for label in entries},
        key=lambda label: (label[0], algebra.basis_position(label[1])),
    )
    row_index = {label: index for index, label in enumerate(row_labels)}
    matrix = SparseMatrix.from_columns(
        len(row_labels), [{row_index[label]: value for label, value in entries.items()} for entries in column_entries]
    )
    window = (lowest, highest) if lowest is not None else (0, -1)
    logger.debug("%s: Y(z) matrix %d×%d at N=%s, extra %d", algebra.name, matrix.rows, matrix.cols, format_scalar(N), window_extra)
    return YZSystem(matrix, columns, window)


def _basis_domain(algebra: VertexAlgebra, N: Fraction) -> List[StateVector]:
    return [algebra.basis_vector(key) for key in algebra.basis_up_to(N)]


def build_yz_matrix(algebra: VertexAlgebra, N: object, window_extra: int = 0) -> SparseMatrix:
    """
    Returns the coefficient matrix of Y(z) on V_{≤N} ⊗ V_{≤N}.

    Parameters
    ----------
    algebra : VertexAlgebra
        The algebra V.
    N : Fraction
        The domain cutoff, in V's weight lattice.
    window_extra : int
        Rows capture every output u_s v of weight ≤ 2N + window_extra.

    Returns
    -------
    matrix : SparseMatrix
        Columns are pairs (u, v) of basis states, lexicographic in canonical order; rows are
        (s, target basis state) sorted by s then canonical order; entries are coefficients of u_s v.

    Error
    ------
    LatticeError
        N is not in V's weight lattice.

    Examples
    --------
    >>> from vsa.state_spaces import heisenberg
    >>> m = build_yz_matrix(heisenberg(), 1)
    >>> m.cols, rank(m)
    (4, 4)

    """
    N = algebra.check_weight(N)
    return _assemble(algebra, _basis_domain(algebra, N), N, window_extra, _vertex_product).matrix


def build_gr_yz_matrix(algebra: VertexAlgebra, N: object, window_extra: int = 0) -> SparseMatrix:
    """
    The same matrix for gr_E(V), with products taken by gr_product on the PBW basis.
    """
    N = algebra.check_weight(N)
    return _assemble(algebra, _basis_domain(algebra, N), N, window_extra, _graded_product).matrix


def _labelled_kernel(system: YZSystem) -> List[Dict[str, Fraction]]:
    candidates = []
    for vector in kernel_basis(system.matrix):
        candidates.append(
            {f"{u.format()} ⊗ {v.format()}": value for (u, v), value in zip(system.columns, vector) if value}
        )
    return candidates


def _search(
    algebra: VertexAlgebra, domain: Sequence[StateVector], N: Fraction, max_window: Optional[int]
) -> InjectivityCertificate:
    if max_window is None:
        max_window = default_max_window(N, algebra.T)
    system, found = None, 0
    for extra in range(0, max_window + 1):
        system = _assemble(algebra, domain, N, extra, _vertex_product)
        found = rank(system.matrix)
        logger.info("%s: N=%s extra=%d rank %d of %d", algebra.name, format_scalar(N), extra, found, system.matrix.cols)
        if found == system.matrix.cols:
            return InjectivityCertificate(algebra.name, N, system.mode_window, extra, found, found, INJECTIVE)
    return InjectivityCertificate(
        algebra.name,
        N,
        system.mode_window,
        max_window,
        system.matrix.cols,
        found,
        UNDETERMINED,
        _labelled_kernel(system),
    )


def certify(algebra: VertexAlgebra, N: object, max_window: Optional[int] = None) -> InjectivityCertificate:
    """
    Widens the row window from 0 to max_window until the Y(z) matrix on V_{≤N} ⊗ V_{≤N} has full
    column rank.

    Parameters
    ----------
    algebra : VertexAlgebra
        The algebra V.
    N : Fraction
        The domain cutoff.
    max_window : int, optional
        The widest window_extra tried; defaults to 2·N·T.

    Returns
    -------
    certificate : InjectivityCertificate
        Injective at the first full-rank window, otherwise Undetermined with the kernel of the
        widest matrix.

    Examples
    --------
    >>> from vsa.state_spaces import neveu_schwarz
    >>> certify(neveu_schwarz("1/2"), "5/2").status
    'Injective'

    """
    N = algebra.check_weight(N)
    return _search(algebra, _basis_domain(algebra, N), N, max_window)


def subalgebra_closure(
    generators: Sequence[StateVector], N: object, iteration_cap: int = CLOSURE_ITERATION_CAP
) -> List[StateVector]:
    """
    Returns a basis, by weight, of the weight ≤ N part of the vertex subalgebra generated by the
    given states and the vacuum, closing under all n-th products.

    Error
    ------
    ClosureError
        No fixed point was reached within iteration_cap rounds.
    """
    _same_ambient(*generators)
    algebra = generators[0].algebra
    N = parse_scalar(N)
    spaces: Dict[Fraction, EchelonBasis] = {}
    found: List[StateVector] = []

    def absorb(state: StateVector) -> None:
        for (weight, _), component in state.homogeneous_components().items():
            if weight > N:
                continue
            if spaces.setdefault(weight, EchelonBasis()).add(component.terms):
                found.append(component)

    absorb(algebra.vacuum())
    for generator in generators:
        absorb(generator)
    start = 0
    for round_number in range(1, iteration_cap + 1):
        size = len(found)
        for i in range(size):
            for j in range(size):
                if i < start and j < start:
                    continue
                u, v = found[i], found[j]
                for n in mode_range(u.weight, v.weight, N):
                    product = algebra.nth_product(u, n, v)
                    if not product.is_zero:
                        absorb(product)
        logger.debug("%s: closure round %d added %d states", algebra.name, round_number, len(found) - size)
        if len(found) == size:
            basis = []
            for weight in sorted(spaces):
                basis += [algebra.vector(vector) for vector in spaces[weight].vectors]
            logger.info("%s: subalgebra closure of dimension %d up to %s", algebra.name, len(basis), format_scalar(N))
            return basis
        start = size
    raise ClosureError(f"Closure in {algebra.name} did not stabilize within {iteration_cap} rounds")


def _is_commutative(basis: Sequence[StateVector]) -> bool:
    for u in basis:
        for v in basis:
            for n in range(0, floor_fraction(u.max_weight + v.max_weight - 1) + 1):
                if not u.algebra.nth_product(u, n, v).is_zero:
                    return False
    return True


def certify_subalgebra(
    generators: Sequence[StateVector],
    N: object,
    max_window: Optional[int] = None,
    iteration_cap: int = CLOSURE_ITERATION_CAP,
) -> InjectivityCertificate:
    """
    Certifies Y(z)-injectivity on the weight ≤ N part of the subalgebra generated by the states.

    Parameters
    ----------
    generators : sequence of StateVector
        Homogeneous states of one algebra.
    N : Fraction
        The domain cutoff.
    max_window : int, optional
        The widest window_extra tried; defaults to 2·N·T.
    iteration_cap : int
        Closure rounds before ClosureError.

    Returns
    -------
    certificate : InjectivityCertificate
        As for certify, with commutative set to whether all n ≥ 0 products vanish on the closure.

    Examples
    --------
    >>> from vsa.state_spaces import heisenberg_double_algebra
    >>> from vsa.scalars_linear import Parity
    >>> V = heisenberg_double_algebra([("h", Parity.EVEN)])
    >>> certificate = certify_subalgebra([V.parse_state("h(-1).1")], 2)
    >>> certificate.status, certificate.commutative
    ('Injective', True)

    """
    algebra = generators[0].algebra
    N = algebra.check_weight(N)
    domain = subalgebra_closure(generators, N, iteration_cap)
    certificate = _search(algebra, domain, N, max_window)
    certificate.commutative = _is_commutative(domain)
    return certificate
