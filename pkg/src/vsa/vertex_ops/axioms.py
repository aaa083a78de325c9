"""
This module checks the vertex superalgebra axioms coefficientwise: the Borcherds (Jacobi)
identity, skew symmetry, the translation property and the vacuum axioms.
"""

import itertools
import logging
from fractions import Fraction
from math import factorial
from typing import Iterable, List, Optional, Sequence

import numpy as np

from vsa.defaults import WINDOW_RADIUS
from vsa.scalars_linear import binomial, ceil_fraction, floor_fraction, koszul_sign, parse_scalar
from vsa.state_spaces import StateVector, VertexAlgebra
from vsa.vertex_ops.operations import _same_ambient, mode_range
from vsa.violations import Violation, sorted_violations

logger = logging.getLogger(__name__)


def _sign(exponent: int) -> int:
    return -1 if exponent % 2 else 1


def _components(state: StateVector) -> List[StateVector]:
    return list(state.homogeneous_components().values())


def _borcherds_difference(u: StateVector, v: StateVector, w: StateVector, a: int, b: int, c: int) -> StateVector:
    algebra = u.algebra
    nth = algebra.nth_product
    wu, wv, ww = u.weight, v.weight, w.weight
    difference = algebra.zero()

    for j in range(0, floor_fraction(wu + wv - 1 - a) + 1):
        coefficient = binomial(b, j)
        if coefficient:
            inner = nth(u, a + j, v)
            if not inner.is_zero:
                difference = difference + coefficient * nth(inner, b + c - j, w)

    for j in range(0, floor_fraction(wv + ww - 1 - c) + 1):
        coefficient = _sign(j) * binomial(a, j)
        if coefficient:
            inner = nth(v, c + j, w)
            if not inner.is_zero:
                difference = difference - coefficient * nth(u, a + b - j, inner)

    swap = _sign(a) * koszul_sign(u.parity, v.parity)
    for j in range(0, floor_fraction(wu + ww - 1 - b) + 1):
        coefficient = _sign(j) * binomial(a, j)
        if coefficient:
            inner = nth(u, b + j, w)
            if not inner.is_zero:
                difference = difference + swap * coefficient * nth(v, a + c - j, inner)
    return difference


def check_borcherds(
    u: StateVector,
    v: StateVector,
    w: StateVector,
    a_range: Iterable[int],
    b_range: Iterable[int],
    c_range: Iterable[int],
) -> List[Violation]:
    """
    Evaluates the Borcherds identity for every index triple (a, b, c) in the ranges.

    Parameters
    ----------
    u, v, w : StateVector
        States of one algebra; each is split into homogeneous components.
    a_range, b_range, c_range : iterable of int
        Mode indices to test.

    Returns
    -------
    violations : list of Violation
        One per triple where
            Σ_j C(b, j)(u_{a+j}v)_{b+c−j}w
            ≠ Σ_j (−1)^j C(a, j)(u_{a+b−j}v_{c+j}w − (−1)^{a+|u||v|} v_{a+c−j}u_{b+j}w),
        with the difference of the two sides.

    Examples
    --------
    >>> from vsa.state_spaces import heisenberg
    >>> V = heisenberg()
    >>> x = V.parse_state("x(-1).1")
    >>> check_borcherds(V.vacuum(), x, x, range(-2, 3), range(-2, 3), range(-2, 3))
    []

    """
    _same_ambient(u, v, w)
    a_range, b_range, c_range = list(a_range), list(b_range), list(c_range)
    violations = []
    for a, b, c in itertools.product(a_range, b_range, c_range):
        total = u.algebra.zero()
        for uc in _components(u):
            for vc in _components(v):
                for wc in _components(w):
                    if uc.weight + vc.weight + wc.weight - a - b - c - 2 < 0:
                        continue
                    total = total + _borcherds_difference(uc, vc, wc, a, b, c)
        if not total.is_zero:
            violations.append(
                Violation("borcherds", (u.format(), v.format(), w.format(), a, b, c), total.to_json())
            )
    return violations


def check_skew_symmetry(u: StateVector, v: StateVector, weight_cutoff: object) -> List[Violation]:
    """
    Compares Y(u, z)v with (−1)^{|u||v|} e^{z𝒟} Y(v, −z)u coefficientwise up to the cutoff, i.e.
    u_n v = (−1)^{|u||v|} Σ_i (−1)^{n+i+1} 𝒟^{(i)}(v_{n+i}u).

    Examples
    --------
    >>> from vsa.state_spaces import neveu_schwarz
    >>> V = neveu_schwarz(1)
    >>> gamma = V.parse_state("G(-3/2).1")
    >>> check_skew_symmetry(gamma, gamma, 4)
    []

    """
    _same_ambient(u, v)
    cutoff = parse_scalar(weight_cutoff)
    algebra = u.algebra
    violations = []
    for uc in _components(u):
        for vc in _components(v):
            sign = koszul_sign(uc.parity, vc.parity)
            for n in mode_range(uc.weight, vc.weight, cutoff):
                left = algebra.nth_product(uc, n, vc)
                right = algebra.zero()
                for i in range(0, floor_fraction(uc.weight + vc.weight - 1 - n) + 1):
                    term = algebra.nth_product(vc, n + i, uc)
                    for _ in range(i):
                        term = algebra.translation(term)
                    right = right + Fraction(sign * _sign(n + i + 1), factorial(i)) * term
                difference = left - right
                if not difference.is_zero:
                    violations.append(Violation("skew-symmetry", (uc.format(), vc.format(), n), difference.to_json()))
    return sorted_violations(violations)


def check_translation(v: StateVector, weight_cutoff: object) -> List[Violation]:
    """
    Compares Y(𝒟v, z)w with d/dz Y(v, z)w, i.e. (𝒟v)_k w = −k·v_{k−1}w, for every basis state w
    and coefficient of weight ≤ cutoff.

    Examples
    --------
    >>> from vsa.state_spaces import heisenberg
    >>> V = heisenberg()
    >>> check_translation(V.parse_state("x(-1).1"), 3)
    []

    """
    cutoff = parse_scalar(weight_cutoff)
    algebra = v.algebra
    violations = []
    for key in algebra.basis_up_to(cutoff):
        w = algebra.basis_vector(key)
        for vc in _components(v):
            dvc = algebra.translation(vc)
            top = vc.weight + key.weight
            for k in range(ceil_fraction(top - cutoff), floor_fraction(top) + 1):
                difference = algebra.nth_product(dvc, k, w) + k * algebra.nth_product(vc, k - 1, w)
                if not difference.is_zero:
                    violations.append(
                        Violation("translation", (vc.format(), algebra.format_key(key), k), difference.to_json())
                    )
    return sorted_violations(violations)


def check_vacuum(algebra: VertexAlgebra, up_to: object) -> List[Violation]:
    """
    Checks 1_n v = δ_{n,−1}v, u_n 1 = 0 for n ≥ 0, u_{−1}1 = u and 𝒟u = u_{−2}1 on all basis
    states up to the weight bound.
    """
    up_to = parse_scalar(up_to)
    one = algebra.vacuum()
    violations = []
    for key in algebra.basis_up_to(up_to):
        u = algebra.basis_vector(key)
        label = algebra.format_key(key)
        for n in range(-3, floor_fraction(key.weight) + 2):
            expected = u if n == -1 else algebra.zero()
            difference = algebra.nth_product(one, n, u) - expected
            if not difference.is_zero:
                violations.append(Violation("vacuum-identity", (label, n), difference.to_json()))
        for n in range(0, floor_fraction(key.weight) + 1):
            product = algebra.nth_product(u, n, one)
            if not product.is_zero:
                violations.append(Violation("vacuum-creation", (label, n), product.to_json()))
        difference = algebra.nth_product(u, -1, one) - u
        if not difference.is_zero:
            violations.append(Violation("vacuum-creation", (label, -1), difference.to_json()))
        difference = algebra.nth_product(u, -2, one) - algebra.translation(u)
        if not difference.is_zero:
            violations.append(Violation("translation-vacuum", (label,), difference.to_json()))
    return sorted_violations(violations)


def _basis_states(algebra: VertexAlgebra, max_weight: Fraction) -> List[StateVector]:
    return [algebra.basis_vector(key) for key in algebra.basis_up_to(max_weight)]


def sweep_borcherds(
    algebra: VertexAlgebra,
    max_weight: object,
    radius: int = WINDOW_RADIUS,
    sample: Optional[int] = None,
    seed: Optional[int] = None,
) -> List[Violation]:
    """
    Runs check_borcherds on basis triples of weight ≤ max_weight with a, b, c ∈ [−radius, radius].

    When sample is given, that many triples are drawn with numpy's seeded generator instead.
    """
    states = _basis_states(algebra, parse_scalar(max_weight))
    triples: Sequence = list(itertools.product(states, repeat=3))
    if sample is not None and sample < len(triples):
        rng = np.random.default_rng(seed)
        chosen = sorted(rng.choice(len(triples), size=sample, replace=False).tolist())
        triples = [triples[i] for i in chosen]
    window = range(-radius, radius + 1)
    logger.info("%s: Borcherds sweep over %d triples, radius %d", algebra.name, len(triples), radius)
    violations = []
    for u, v, w in triples:
        violations.extend(check_borcherds(u, v, w, window, window, window))
    return sorted_violations(violations)


def sweep_skew_symmetry(algebra: VertexAlgebra, max_weight: object, weight_cutoff: Optional[object] = None) -> List[Violation]:
    """check_skew_symmetry on all basis pairs of weight ≤ max_weight; the cutoff defaults to 2·max_weight."""
    max_weight = parse_scalar(max_weight)
    cutoff = 2 * max_weight if weight_cutoff is None else parse_scalar(weight_cutoff)
    states = _basis_states(algebra, max_weight)
    violations = []
    for u, v in itertools.product(states, repeat=2):
        violations.extend(check_skew_symmetry(u, v, cutoff))
    return sorted_violations(violations)


def sweep_translation(algebra: VertexAlgebra, max_weight: object, weight_cutoff: Optional[object] = None) -> List[Violation]:
    """check_translation on all basis states of weight ≤ max_weight; the cutoff defaults to 2·max_weight."""
    max_weight = parse_scalar(max_weight)
    cutoff = 2 * max_weight if weight_cutoff is None else parse_scalar(weight_cutoff)
    violations = []
    for v in _basis_states(algebra, max_weight):
        violations.extend(check_translation(v, cutoff))
    return sorted_violations(violations)
