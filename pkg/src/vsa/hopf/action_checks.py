"""
This module checks Hopf actions on truncated vertex superalgebras: the module vertex superalgebra
axioms, the action kernel, fixed points, τ-equivariance on V ⊗ V and the cocommutativity
verdict that a faithful action on a Y(z)-injective algebra forces.
"""

import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Hashable, List, Optional, Sequence, Tuple

import numpy as np

from vsa.errors import PreconditionError, StructureError
from vsa.hopf.action_spec import ActionSpec
from vsa.hopf.builtin_hopf import sweedler_hopf
from vsa.hopf.grouplikes import find_grouplikes
from vsa.hopf.hopf_algebra import HopfSpec, is_cocommutative
from vsa.hopf.ideals import IdealCandidate, normal_subgroup_ideal
from vsa.scalars_linear import EchelonBasis, Parity, format_scalar, lattice_points, parse_scalar, solve_nullspace
from vsa.state_spaces import StateVector, VertexAlgebra, free_differential
from vsa.state_spaces.state_vector import add_terms
from vsa.vertex_ops.operations import mode_range
from vsa.violations import Violation, sorted_violations

logger = logging.getLogger(__name__)

CONSISTENT = "ConsistentWithGroupAlgebra"
OBSTRUCTED = "Obstructed"

ModeWindow = Optional[Tuple[int, int]]
TensorTerms = Dict[Tuple[Hashable, Hashable], Fraction]


def _bound(A: ActionSpec, weight_cutoff: Optional[object]) -> Fraction:
    return A.cutoff if weight_cutoff is None else min(A.cutoff, parse_scalar(weight_cutoff))


def _modes(left: Fraction, right: Fraction, cutoff: Fraction, mode_window: ModeWindow) -> range:
    modes = mode_range(left, right, cutoff)
    if mode_window is None:
        return modes
    return range(max(modes.start, mode_window[0]), min(modes.stop, mode_window[1] + 1))


def _images(A: ActionSpec, keys: Sequence[Hashable]) -> List[Dict[Hashable, StateVector]]:
    """images[j][key] = e_j·key."""
    V = A.algebra
    return [{key: A.act(j, V.basis_vector(key)) for key in keys} for j in range(A.hopf.dimension)]


def _coproduct_terms(H: HopfSpec, i: int) -> List[Tuple[int, int, Fraction]]:
    return [(j, k, H.comult[i, j, k]) for j in range(H.dimension) for k in range(H.dimension) if H.comult[i, j, k] != 0]


def _representation(A: ActionSpec, cutoff: Fraction) -> List[Violation]:
    """ρ(1) = id and ρ(e_i)ρ(e_j) = ρ(e_i e_j) on each V_n."""
    H = A.hopf
    violations = []
    for w in A.weights(cutoff):
        size = len(A.algebra.enumerate_basis(w))
        if not size:
            continue
        identity = np.identity(size, dtype=object) * Fraction(1)
        if np.any(A.element_matrix(H.unit, w) - identity != 0):
            violations.append(Violation("representation", ("1", format_scalar(w))))
        for i, j in itertools.product(range(H.dimension), repeat=2):
            if np.any(A.matrix(i, w).dot(A.matrix(j, w)) - A.element_matrix(H.mult[i, j], w) != 0):
                violations.append(Violation("representation", (H.basis[i], H.basis[j], format_scalar(w))))
    return violations


def verify_action(A: ActionSpec, weight_cutoff: Optional[object] = None, mode_window: ModeWindow = None) -> List[Violation]:
    """
    Checks that V_{≤cutoff} is an H-module vertex superalgebra.

    Parameters
    ----------
    A : ActionSpec
        The action to check.
    weight_cutoff : Fraction, optional
        Defaults to the declared cutoff of the action.
    mode_window : tuple of int, optional
        (lowest, highest) mode index checked in the vertex condition; by default all modes
        whose output weight lies in [0, cutoff].

    Returns
    -------
    violations : list of Violation
        representation: ρ is not an algebra map, parity: a matrix mixes parities,
        vacuum: h1 ≠ ε(h)1, module-vertex: h(u_n v) ≠ Σ (h₁u)_n(h₂v),
        translation: h𝒟v ≠ 𝒟hv.

    Examples
    --------
    >>> from vsa.hopf import sigma_action
    >>> from vsa.state_spaces import neveu_schwarz
    >>> verify_action(sigma_action(neveu_schwarz("1/2"), 2))
    []

    """
    H, V = A.hopf, A.algebra
    cutoff = _bound(A, weight_cutoff)
    weights = A.weights(cutoff)
    violations = _representation(A, cutoff)

    for w in weights:
        keys = V.enumerate_basis(w)
        for i in range(H.dimension):
            block = A.matrix(i, w)
            mixed = any(block[r, c] != 0 and keys[r].parity is not keys[c].parity for r in range(len(keys)) for c in range(len(keys)))
            if mixed:
                violations.append(Violation("parity", (H.basis[i], format_scalar(w))))

    vacuum = V.vacuum()
    for i in range(H.dimension):
        difference = A.act(i, vacuum) - vacuum * H.counit[i]
        if not difference.is_zero:
            violations.append(Violation("vacuum", (H.basis[i],), difference.to_json()))

    keys = V.basis_up_to(cutoff)
    images = _images(A, keys)
    for i in range(H.dimension):
        coproduct = _coproduct_terms(H, i)
        for left in keys:
            for right in keys:
                u, v = V.basis_vector(left), V.basis_vector(right)
                for n in _modes(left.weight, right.weight, cutoff, mode_window):
                    lhs = A.act(i, V.nth_product(u, n, v))
                    rhs = V.zero()
                    for j, k, c in coproduct:
                        rhs = rhs + V.nth_product(images[j][left], n, images[k][right]) * c
                    difference = lhs - rhs
                    if not difference.is_zero:
                        violations.append(
                            Violation("module-vertex", (H.basis[i], V.format_key(left), V.format_key(right), n), difference.to_json())
                        )
        for key in keys:
            if key.weight + 1 > cutoff:
                continue
            difference = A.act(i, V.translation(V.basis_vector(key))) - V.translation(images[i][key])
            if not difference.is_zero:
                violations.append(Violation("translation", (H.basis[i], V.format_key(key)), difference.to_json()))
    logger.info("%s: %d action violations up to weight %s", A.name, len(violations), format_scalar(cutoff))
    return sorted_violations(violations)


def action_kernel(A: ActionSpec, weight_cutoff: Optional[object] = None) -> IdealCandidate:
    """
    Returns K = {h ∈ H : h·v = 0 for every v ∈ V_{≤cutoff}} by an exact null space solve.

    Examples
    --------
    >>> from vsa.hopf import cyclic_group, group_algebra, trivial_action
    >>> from vsa.state_spaces import heisenberg
    >>> K = action_kernel(trivial_action(group_algebra(cyclic_group(2)), heisenberg(), 2))
    >>> [K.hopf.format_element(v) for v in K.span]
    [{'1': '1', 'g': '-1'}]

    """
    H = A.hopf
    blocks = []
    for w in A.weights(_bound(A, weight_cutoff)):
        size = len(A.algebra.enumerate_basis(w))
        if size:
            blocks.append(np.column_stack([A.matrix(i, w).reshape(size * size) for i in range(H.dimension)]))
    kernel = solve_nullspace(blocks, H.dimension)
    logger.debug("%s: action kernel of dimension %d", A.name, len(kernel))
    return IdealCandidate.of(H, kernel)


def _fixed_coordinates(A: ActionSpec, weight: Fraction) -> List[List[Fraction]]:
    size = len(A.algebra.enumerate_basis(weight))
    if not size:
        return []
    identity = np.identity(size, dtype=object) * Fraction(1)
    blocks = [A.matrix(i, weight) - A.hopf.counit[i] * identity for i in range(A.hopf.dimension)]
    return solve_nullspace(blocks, size)


def fixed_points(A: ActionSpec, n: object) -> List[StateVector]:
    """
    Returns an echelon basis of (V^H)_n = {v ∈ V_n : h·v = ε(h)v for all h}.

    Error
    ------
    StructureError
        n is off the weight lattice or above the cutoff of the action.

    Examples
    --------
    >>> from vsa.hopf import sigma_action
    >>> from vsa.state_spaces import neveu_schwarz
    >>> A = sigma_action(neveu_schwarz("1/2"), 4)
    >>> len(fixed_points(A, "3/2")), len(fixed_points(A, 4))
    (0, 3)

    """
    V = A.algebra
    weight = V.check_weight(n)
    if weight > A.cutoff:
        raise StructureError(f"{A.name} is declared only up to weight {format_scalar(A.cutoff)}")
    keys = V.enumerate_basis(weight)
    vectors = []
    for coordinates in _fixed_coordinates(A, weight):
        vector = V.vector({key: value for key, value in zip(keys, coordinates) if value != 0})
        vectors.append(vector)
    return vectors


def _coordinates(v: StateVector) -> Dict[int, Fraction]:
    return {v.algebra.basis_position(key)[1]: value for key, value in v.terms.items()}


def check_fixed_point_closure(A: ActionSpec, up_to: Optional[object] = None, mode_window: ModeWindow = None) -> List[Violation]:
    """
    Checks that V^H is closed under all n-th products and that h(u_n w) = u_n(h·w) for fixed u.

    Returns
    -------
    violations : list of Violation
        fixed-point-closure with the two fixed vectors and n, fixed-point-commutation with
        the fixed vector, the basis state w, h and n.
    """
    V, H = A.algebra, A.hopf
    cutoff = _bound(A, up_to)
    fixed = {w: fixed_points(A, w) for w in A.weights(cutoff)}
    spaces = {w: EchelonBasis(_coordinates(v) for v in vectors) for w, vectors in fixed.items()}
    keys = V.basis_up_to(cutoff)
    images = _images(A, keys)
    violations: List[Violation] = []
    for a, left in fixed.items():
        for u in left:
            for b, right in fixed.items():
                for v in right:
                    for n in _modes(a, b, cutoff, mode_window):
                        product = V.nth_product(u, n, v)
                        if not product.is_zero and not spaces[a + b - n - 1].contains(_coordinates(product)):
                            violations.append(Violation("fixed-point-closure", (u.format(), v.format(), n), product.to_json()))
            for key in keys:
                for n in _modes(a, key.weight, cutoff, mode_window):
                    product = V.nth_product(u, n, V.basis_vector(key))
                    for i in range(H.dimension):
                        difference = A.act(i, product) - V.nth_product(u, n, images[i][key])
                        if not difference.is_zero:
                            violations.append(
                                Violation("fixed-point-commutation", (u.format(), V.format_key(key), H.basis[i], n), difference.to_json())
                            )
    return sorted_violations(violations)


def _act_tensor(A: ActionSpec, images: List[Dict[Hashable, StateVector]], i: int, left: Hashable, right: Hashable) -> TensorTerms:
    """e_i·(u ⊗ v) = Σ Δ_i^{jk} (e_j u) ⊗ (e_k v); H acts by even operators."""
    result: TensorTerms = {}
    for j, k, c in _coproduct_terms(A.hopf, i):
        for a, x in images[j][left].terms.items():
            for b, y in images[k][right].terms.items():
                add_terms(result, {(a, b): x * y}, c)
    return result


def _flip(tensor: TensorTerms) -> TensorTerms:
    """τ(u ⊗ v) = (−1)^{|u||v|} v ⊗ u on basis tensors."""
    result: TensorTerms = {}
    for (a, b), value in tensor.items():
        sign = -1 if a.parity is Parity.ODD and b.parity is Parity.ODD else 1
        add_terms(result, {(b, a): value}, sign)
    return result


def check_tau_equivariance(A: ActionSpec, weight_cutoff: Optional[object] = None) -> List[Violation]:
    """
    Compares τ(h·(u ⊗ v)) with h·τ(u ⊗ v) for every Hopf basis element and basis pair.

    Returns
    -------
    violations : list of Violation
        tau-equivariance with (h, u, v) and the nonzero difference; empty for every action of a
        cocommutative Hopf algebra.
    """
    V = A.algebra
    keys = V.basis_up_to(_bound(A, weight_cutoff))
    images = _images(A, keys)
    violations = []
    for i in range(A.hopf.dimension):
        for left in keys:
            for right in keys:
                difference = _flip(_act_tensor(A, images, i, left, right))
                sign = -1 if left.parity is Parity.ODD and right.parity is Parity.ODD else 1
                add_terms(difference, _act_tensor(A, images, i, right, left), -sign)
                if difference:
                    payload = {f"{V.format_key(a)} ⊗ {V.format_key(b)}": format_scalar(value) for (a, b), value in sorted(difference.items(), key=lambda item: (V.format_key(item[0][0]), V.format_key(item[0][1])))}
                    violations.append(Violation("tau-equivariance", (A.hopf.basis[i], V.format_key(left), V.format_key(right)), payload))
    return sorted_violations(violations)


@dataclass
class ActionVerdict:
    """
    Outcome of cocommutativity_from_action.

    Parameters
    ----------
    verdict : str
        ConsistentWithGroupAlgebra or Obstructed.
    witness : str, optional
        The Hopf basis element whose Δ − Δ^op acts nonzero, or which is not cocommutative.
    grouplikes : list of dict
        The grouplike basis when the dual algebra splits over ℚ.
    """

    verdict: str
    witness: Optional[str] = None
    grouplikes: List[Dict[str, str]] = field(default_factory=list)

    def to_json(self) -> dict:
        payload = {"verdict": self.verdict}
        if self.witness is not None:
            payload["witness"] = self.witness
        if self.grouplikes:
            payload["grouplikes"] = self.grouplikes
        return payload


def cocommutativity_from_action(A: ActionSpec, weight_cutoff: Optional[object] = None) -> ActionVerdict:
    """
    Evaluates (Δ − τ∘Δ)(h) as an operator on V_{≤cutoff} ⊗ V_{≤cutoff} for each basis element.

    A faithful action on a Y(z)-injective vertex superalgebra forces H to be cocommutative, hence
    a group algebra over an algebraically closed field.

    Error
    ------
    PreconditionError
        The action kernel is nonzero at the cutoff; the kernel is a bialgebra ideal to quotient out.

    Examples
    --------
    >>> from vsa.hopf import sigma_action
    >>> from vsa.state_spaces import neveu_schwarz
    >>> cocommutativity_from_action(sigma_action(neveu_schwarz("1/2"), 2)).verdict
    'ConsistentWithGroupAlgebra'

    """
    H = A.hopf
    cutoff = _bound(A, weight_cutoff)
    kernel = action_kernel(A, cutoff)
    if kernel.dimension:
        raise PreconditionError(
            f"{A.name} has an action kernel of dimension {kernel.dimension} up to weight {format_scalar(cutoff)}; "
            "the kernel is a bialgebra ideal of H, pass to the quotient first"
        )
    matrices = [A.full_matrix(i, cutoff) for i in range(H.dimension)]
    for i in range(H.dimension):
        antisymmetric = H.comult[i] - H.comult[i].T
        cells = list(zip(*np.nonzero(antisymmetric != 0)))
        if not cells:
            continue
        operator = sum(antisymmetric[j, k] * np.kron(matrices[j], matrices[k]) for j, k in cells)
        if np.any(operator != 0):
            logger.info("%s: Δ − Δ^op acts nonzero at %s", A.name, H.basis[i])
            return ActionVerdict(OBSTRUCTED, H.basis[i])
    cocommutative, witness = is_cocommutative(H)
    if not cocommutative:
        return ActionVerdict(OBSTRUCTED, witness)
    search = find_grouplikes(H)
    grouplikes = [H.format_element(g) for g in search.grouplikes] if search.is_group_basis else []
    return ActionVerdict(CONSISTENT, grouplikes=grouplikes)


@dataclass
class InnerFaithfulness:
    """
    Outcome of inner_faithfulness.

    Parameters
    ----------
    method : str
        "normal-subgroups" for group algebras, whose Hopf ideals ℚ[G]·ℚ[N]⁺ are enumerated,
        or "faithful-at-truncation" otherwise, which only asks for a zero action kernel.
    inner_faithful : bool
        No enumerated nonzero Hopf ideal annihilates V_{≤cutoff}.
    annihilating : list of list of str
        The normal subgroups whose ideals annihilate.
    kernel_dimension : int
        Dimension of the action kernel.
    """

    method: str
    inner_faithful: bool
    annihilating: List[List[str]] = field(default_factory=list)
    kernel_dimension: int = 0

    def to_json(self) -> dict:
        return {
            "method": self.method,
            "inner_faithful": self.inner_faithful,
            "annihilating": self.annihilating,
            "kernel_dimension": self.kernel_dimension,
        }


def inner_faithfulness(A: ActionSpec, weight_cutoff: Optional[object] = None) -> InnerFaithfulness:
    """
    Tells whether some nonzero Hopf ideal of H annihilates V_{≤cutoff}.

    Examples
    --------
    >>> from vsa.hopf import cyclic_group, direct_product, group_algebra, pullback_action, permutation_action
    >>> from vsa.state_spaces import free_differential
    >>> swap = permutation_action(group_algebra(cyclic_group(2)), free_differential(2, 0), 1, {"1": (0, 1), "g": (1, 0)})
    >>> H = group_algebra(direct_product(cyclic_group(2, "a"), cyclic_group(2, "b")))
    >>> result = inner_faithfulness(pullback_action(swap, H, {"1": "1", "b": "1", "a": "g", "ab": "g"}))
    >>> result.inner_faithful, result.annihilating
    (False, [['1', 'b']])

    """
    H = A.hopf
    kernel = action_kernel(A, weight_cutoff)
    if H.group is None:
        return InnerFaithfulness("faithful-at-truncation", kernel.dimension == 0, kernel_dimension=kernel.dimension)
    G = H.group
    annihilated = kernel.echelon()
    annihilating = []
    for subgroup in G.normal_subgroups():
        if len(subgroup) == 1:
            continue
        ideal = normal_subgroup_ideal(H, subgroup)
        if all(annihilated.contains({index: value for index, value in enumerate(v) if value != 0}) for v in ideal.span):
            annihilating.append([G.label(x) for x in sorted(subgroup)])
    return InnerFaithfulness("normal-subgroups", not annihilating, annihilating, kernel.dimension)


@dataclass
class SweedlerSearch:
    """
    Outcome of search_sweedler_actions: how many candidates were tried, how many satisfy every
    axiom, how many are faithful, and the names of those that are both.
    """

    candidates: int
    valid: int
    faithful: int
    valid_and_faithful: List[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "candidates": self.candidates,
            "valid": self.valid,
            "faithful": self.faithful,
            "valid_and_faithful": self.valid_and_faithful,
        }


def _parity_blocks(V: VertexAlgebra, cutoff: Fraction) -> List[Tuple[Fraction, int, int]]:
    """(weight, row, column) positions allowed in an even weight-preserving matrix."""
    positions = []
    for w in lattice_points(cutoff, V.T):
        keys = V.enumerate_basis(w)
        for r, c in itertools.product(range(len(keys)), repeat=2):
            if keys[r].parity is keys[c].parity:
                positions.append((w, r, c))
    return positions


def _fill(V: VertexAlgebra, cutoff: Fraction, positions, values) -> Dict[Fraction, np.ndarray]:
    blocks = {w: np.full((len(V.enumerate_basis(w)),) * 2, Fraction(0), dtype=object) for w in lattice_points(cutoff, V.T)}
    for (w, r, c), value in zip(positions, values):
        blocks[w][r, c] = Fraction(value)
    return blocks


def search_sweedler_actions(
    algebra: Optional[VertexAlgebra] = None, cutoff: object = 1, entries: Sequence[int] = (-1, 0, 1)
) -> SweedlerSearch:
    """
    Tries every action of the Sweedler algebra on V_{≤cutoff} whose images of g and x are even
    weight-preserving matrices with the given entries, ρ(gx) = ρ(g)ρ(x).

    Notes
    -----
    By default V is freediff-(1|1) at cutoff 1, where the parity blocks are 1 × 1 and the family
    has 729 members. Candidates failing the representation relations are rejected before the
    vertex conditions are evaluated.

    Examples
    --------
    >>> search_sweedler_actions().valid_and_faithful
    []

    """
    V = algebra if algebra is not None else free_differential(1, 1)
    cutoff = V.check_weight(cutoff)
    H = sweedler_hopf()
    positions = _parity_blocks(V, cutoff)
    identity = {w: np.identity(len(V.enumerate_basis(w)), dtype=object) * Fraction(1) for w in lattice_points(cutoff, V.T)}
    candidates = valid = faithful = 0
    found = []
    for g_values in itertools.product(entries, repeat=len(positions)):
        g = _fill(V, cutoff, positions, g_values)
        for x_values in itertools.product(entries, repeat=len(positions)):
            candidates += 1
            x = _fill(V, cutoff, positions, x_values)
            gx = {w: g[w].dot(x[w]) if g[w].size else g[w] for w in g}
            name = f"sweedler[g={list(g_values)},x={list(x_values)}]"
            A = ActionSpec(name, H, V, cutoff, {0: identity, 1: g, 2: x, 3: gx})
            is_faithful = action_kernel(A).dimension == 0
            faithful += is_faithful
            if _representation(A, cutoff):
                continue
            if verify_action(A):
                continue
            valid += 1
            if is_faithful:
                found.append(name)
    logger.info("Sweedler search on %s: %d candidates, %d valid, %d faithful", V.name, candidates, valid, faithful)
    return SweedlerSearch(candidates, valid, faithful, found)

