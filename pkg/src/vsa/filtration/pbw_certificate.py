"""
This module certifies a PBW basis on a truncation: gr_E(V) ≅ F(𝔥) as commutative vertex
superalgebras, with the generator correspondence extended multiplicatively.
"""

import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Hashable, List, Sequence, Tuple

from vsa.errors import PreconditionError
from vsa.filtration.filtration import GrElement, dimensions_to_json, filtration_level, gr_dimensions, gr_product, project
from vsa.scalars_linear import EchelonBasis, Parity, SparseMatrix, format_scalar, parse_scalar, rank
from vsa.state_spaces import FreeDifferentialAlgebra, StateVector, VertexAlgebra
from vsa.vertex_ops.operations import mode_range
from vsa.violations import Violation, sorted_violations

logger = logging.getLogger(__name__)

CHECKS = ("dimensions", "bijective", "multiplicative", "derivation")


@dataclass
class PBWCertificate:
    """
    Per-check verdicts of the comparison gr_E(V) ≅ F(𝔥) up to a weight bound.

    Parameters
    ----------
    algebra : str
        Name of V.
    target : str
        Name of F(𝔥).
    up_to : Fraction
        The weight bound.
    checks : dict
        Check name → passed.
    violations : list of Violation
        Witnesses of the failed checks.
    """

    algebra: str
    target: str
    up_to: Fraction
    checks: Dict[str, bool] = field(default_factory=dict)
    violations: List[Violation] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict:
        return {
            "algebra": self.algebra,
            "target": self.target,
            "up_to": format_scalar(self.up_to),
            "checks": {name: ("pass" if ok else "fail") for name, ok in self.checks.items()},
            "passed": self.passed,
        }


def _check_correspondence(algebra: VertexAlgebra, target: FreeDifferentialAlgebra) -> None:
    if len(algebra.generators) != len(target.generators):
        raise PreconditionError(
            f"{algebra.name} has {len(algebra.generators)} strong generators, 𝔥 has {len(target.generators)}"
        )
    for mine, theirs in zip(algebra.generators, target.generators):
        if mine.parity is not theirs.parity:
            raise PreconditionError(f"Generator {mine.id} is {mine.parity.label}, its image {theirs.id} is not")
        if mine.degree != theirs.degree:
            raise PreconditionError(
                f"Generator {mine.id} has degree {format_scalar(mine.degree)}, "
                f"its image {theirs.id} has {format_scalar(theirs.degree)}"
            )


class _Correspondence:
    """
    The linear map φ sending a PBW monomial a¹(−n₁)···aʳ(−n_r)1 of V to the same word in F(𝔥).
    """

    def __init__(self, algebra: VertexAlgebra, target: FreeDifferentialAlgebra) -> None:
        self.algebra = algebra
        self.target = target
        self._images: Dict[Hashable, StateVector] = {}

    def image_of_key(self, key: Hashable) -> StateVector:
        if key not in self._images:
            state = self.target.vacuum()
            for mode in reversed(self.algebra.key_modes(key)):
                state = self.target.apply_generator_mode(mode.generator, -mode.depth, state)
            self._images[key] = state
        return self._images[key]

    def __call__(self, v: StateVector) -> StateVector:
        result = self.target.zero()
        for key, value in v.terms.items():
            result = result + value * self.image_of_key(key)
        return result


def _word_filtration(algebra: VertexAlgebra, up_to: Fraction) -> Tuple[Dict[Tuple[Fraction, Fraction, Parity], int], List[Violation]]:
    """
    Measures E_p(V) as the span of all generator words of degree ≤ p, in every order, and
    returns the ranks of E_p / E_{p−1/T} together with the levels where that span differs in
    dimension from V's declared filtration.
    """
    words: Dict[Tuple[Fraction, Parity], List[Tuple[Fraction, StateVector]]] = {}
    declared: Dict[Tuple[Fraction, Parity], List[Fraction]] = {}
    mismatches: List[Violation] = []
    for key in algebra.basis_up_to(up_to):
        modes = algebra.key_modes(key)
        degree = sum((algebra.generators[m.generator].degree for m in modes), Fraction(0))
        declared.setdefault((key.weight, key.parity), []).append(algebra.filtration_level(key))
        for order in sorted(set(itertools.permutations(modes))):
            state = algebra.vacuum()
            for mode in reversed(order):
                state = algebra.apply_generator_mode(mode.generator, -mode.depth, state)
            words.setdefault((key.weight, key.parity), []).append((degree, state))
            if not state.is_zero and filtration_level(state) > degree:
                word = "".join(f"{algebra.generators[m.generator].id}({format_scalar(-m.depth)})" for m in order) + ".1"
                mismatches.append(
                    Violation("pbw-dimensions", (word,), state.to_json(), message=f"lies outside E_{format_scalar(degree)}")
                )

    counts: Dict[Tuple[Fraction, Fraction, Parity], int] = {}
    for (w, parity), levels in sorted(declared.items()):
        block = sorted(words.get((w, parity), []), key=lambda item: item[0])
        echelon = EchelonBasis()
        previous, position = 0, 0
        for p in sorted(set(levels) | {degree for degree, _ in block}):
            while position < len(block) and block[position][0] <= p:
                echelon.add(block[position][1].terms)
                position += 1
            if echelon.dimension > previous:
                counts[(p, w, parity)] = echelon.dimension - previous
            previous = echelon.dimension
            expected = sum(1 for level in levels if level <= p)
            if echelon.dimension != expected:
                mismatches.append(
                    Violation(
                        "pbw-dimensions",
                        (format_scalar(p), format_scalar(w), parity.label),
                        {"words": echelon.dimension, "declared": expected},
                    )
                )
    return counts, mismatches


def _bidegree_blocks(algebra: VertexAlgebra, up_to: Fraction) -> Dict[Tuple[Fraction, Fraction, Parity], List]:
    blocks: Dict[Tuple[Fraction, Fraction, Parity], List] = {}
    for key in algebra.basis_up_to(up_to):
        blocks.setdefault((algebra.filtration_level(key), key.weight, key.parity), []).append(key)
    return blocks


def pbw_certificate(
    algebra: VertexAlgebra, h: Sequence[Tuple[str, object, object]], up_to: object
) -> PBWCertificate:
    """
    Compares gr_E(V) with F(𝔥) up to a weight bound.

    Parameters
    ----------
    algebra : VertexAlgebra
        The algebra V.
    h : sequence of (id, parity, degree)
        Basis of 𝔥; the i-th entry is the image of V's i-th strong generator.
    up_to : Fraction
        The weight bound.

    Returns
    -------
    certificate : PBWCertificate
        Verdicts for
            - dimensions: the ranks of E_p / E_{p−1/T}, with E_p spanned by generator words of
              degree ≤ p in every order, agree with V's declared levels and with F(𝔥) in each
              (level, weight, parity),
            - bijective: φ has full rank on each bi-degree piece,
            - multiplicative: φ(gr(u)_n gr(v)) = φ(u)_n φ(v) for basis pairs and all n in range,
            - derivation: φ(gr(𝒟a)) = ∂φ(a).

    Error
    ------
    PreconditionError
        The correspondence does not preserve parity and degree.

    Examples
    --------
    >>> from vsa.state_spaces import neveu_schwarz
    >>> certificate = pbw_certificate(neveu_schwarz(1), [("x", "even", 2), ("y", "odd", "3/2")], 3)
    >>> certificate.passed
    True

    """
    up_to = parse_scalar(up_to)
    target = FreeDifferentialAlgebra(h, name=f"F({','.join(str(entry[0]) for entry in h)})")
    _check_correspondence(algebra, target)
    phi = _Correspondence(algebra, target)
    certificate = PBWCertificate(algebra.name, target.name, up_to)
    violations: List[Violation] = []

    ours, mismatches = _word_filtration(algebra, up_to)
    theirs = gr_dimensions(target, up_to)
    violations.extend(mismatches)
    dimensions_match = not mismatches
    for p, w, parity in sorted(set(ours) | set(theirs)):
        mine, expected = ours.get((p, w, parity), 0), theirs.get((p, w, parity), 0)
        if mine != expected:
            dimensions_match = False
            violations.append(
                Violation("pbw-dimensions", (format_scalar(p), format_scalar(w), parity.label), {"V": mine, "F": expected})
            )
    certificate.checks["dimensions"] = dimensions_match

    target_blocks = _bidegree_blocks(target, up_to)
    bijective = True
    for (p, w, parity), keys in sorted(_bidegree_blocks(algebra, up_to).items()):
        columns = target_blocks.get((p, w, parity), [])
        positions = {key: index for index, key in enumerate(columns)}
        entries = {}
        for row, key in enumerate(keys):
            for image_key, value in phi.image_of_key(key).terms.items():
                if image_key not in positions:
                    bijective = False
                    continue
                entries[(row, positions[image_key])] = value
        found = rank(SparseMatrix.from_entries(len(keys), len(columns), entries))
        if found != len(keys) or found != len(columns):
            bijective = False
            violations.append(
                Violation("pbw-bijective", (format_scalar(p), format_scalar(w), parity.label), {"rank": found})
            )
    certificate.checks["bijective"] = bijective

    multiplicative = True
    basis = algebra.basis_up_to(up_to)
    for left, right in itertools.product(basis, repeat=2):
        if left.weight + right.weight > up_to:
            continue
        u = GrElement.of(algebra.basis_vector(left))
        v = GrElement.of(algebra.basis_vector(right))
        for n in mode_range(left.weight, right.weight, up_to):
            ours_product = phi(gr_product(u, n, v).representative)
            theirs_product = target.nth_product(phi.image_of_key(left), n, phi.image_of_key(right))
            difference = ours_product - theirs_product
            if not difference.is_zero:
                multiplicative = False
                violations.append(
                    Violation(
                        "pbw-multiplicative", (algebra.format_key(left), n, algebra.format_key(right)), difference.to_json()
                    )
                )
    certificate.checks["multiplicative"] = multiplicative

    derivation = True
    for key in basis:
        if key.weight + 1 > up_to:
            continue
        level = algebra.filtration_level(key)
        ours_derived = phi(project(algebra.translation(algebra.basis_vector(key)), level))
        difference = ours_derived - target.translation(phi.image_of_key(key))
        if not difference.is_zero:
            derivation = False
            violations.append(Violation("pbw-derivation", (algebra.format_key(key),), difference.to_json()))
    certificate.checks["derivation"] = derivation

    certificate.violations = sorted_violations(violations)
    logger.info("%s ≅ %s up to %s: %s", algebra.name, target.name, format_scalar(up_to), certificate.checks)
    return certificate


def dimension_table(algebra: VertexAlgebra, up_to: object) -> List[dict]:
    """The bi-degree dimensions of gr_E(V), ready for a report."""
    return dimensions_to_json(gr_dimensions(algebra, parse_scalar(up_to)))
