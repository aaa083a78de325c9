"""
This module defines finite-dimensional Hopf algebras over ℚ given by structure constants, with
the exact axiom checker and the cocommutativity test.
"""

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Mapping, NamedTuple, Optional, Sequence, Union

import numpy as np

from vsa.errors import StructureError
from vsa.scalars_linear import format_scalar, parse_scalar
from vsa.violations import Violation, sorted_violations

Element = np.ndarray
"""A coefficient vector over the Hopf basis, numpy object array of Fractions."""


def zeros(*shape: int) -> np.ndarray:
    return np.full(shape, Fraction(0), dtype=object)


def as_fractions(values: Sequence) -> np.ndarray:
    array = np.asarray(values, dtype=object)
    return np.vectorize(parse_scalar, otypes=[object])(array) if array.size else array


class HopfSpec:
    """
    Class representing a Hopf algebra (H, μ, η, Δ, ε, S) by structure constants.

    Parameters
    ----------
    name : str
        Identifier used in reports.
    basis : sequence of str
        Labels of the basis e_0, ..., e_{n−1}.
    mult : array (n, n, n)
        e_i e_j = Σ_k mult[i, j, k] e_k.
    unit : array (n,)
        Coefficients of 1_H.
    comult : array (n, n, n)
        Δ(e_i) = Σ_{j,k} comult[i, j, k] e_j ⊗ e_k.
    counit : array (n,)
        ε(e_i).
    antipode : array (n, n)
        S(e_i) = Σ_j antipode[i, j] e_j.
    group : GroupTable, optional
        The group when H = ℚ[G] in its group basis.

    Error
    ------
    StructureError
        The arrays do not have the shapes required by the basis.
    """

    def __init__(self, name: str, basis: Sequence[str], mult, unit, comult, counit, antipode, group=None) -> None:
        self.name = name
        self.basis = tuple(str(label) for label in basis)
        n = len(self.basis)
        if n == 0 or len(set(self.basis)) != n:
            raise StructureError(f"{name}: basis labels must be nonempty and distinct")
        self.mult = as_fractions(mult)
        self.unit = as_fractions(unit)
        self.comult = as_fractions(comult)
        self.counit = as_fractions(counit)
        self.antipode = as_fractions(antipode)
        expected = {
            "mult": (self.mult, (n, n, n)),
            "unit": (self.unit, (n,)),
            "comult": (self.comult, (n, n, n)),
            "counit": (self.counit, (n,)),
            "antipode": (self.antipode, (n, n)),
        }
        for label, (array, shape) in expected.items():
            if array.shape != shape:
                raise StructureError(f"{name}: {label} has shape {array.shape}, expected {shape}")
        self.group = group

    def __repr__(self) -> str:
        return f"HopfSpec({self.name!r}, dim={self.dimension})"

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def index(self, label: Union[int, str]) -> int:
        if isinstance(label, int):
            if not 0 <= label < self.dimension:
                raise StructureError(f"Basis index {label} out of range for {self.name}")
            return label
        try:
            return self.basis.index(label)
        except ValueError:
            raise StructureError(f"Unknown basis element {label!r} of {self.name}") from None

    # elements ---------------------------------------------------------------

    def basis_element(self, label: Union[int, str]) -> Element:
        vector = zeros(self.dimension)
        vector[self.index(label)] = Fraction(1)
        return vector

    def element(self, coefficients: Mapping[str, object]) -> Element:
        vector = zeros(self.dimension)
        for label, value in coefficients.items():
            vector[self.index(label)] += parse_scalar(value)
        return vector

    def product(self, a: Element, b: Element) -> Element:
        """ab = Σ a_i b_j mult[i, j, :]."""
        return np.tensordot(np.tensordot(a, self.mult, axes=(0, 0)), b, axes=(0, 0))

    def coproduct(self, a: Element) -> np.ndarray:
        """Δ(a) as an n × n coefficient matrix over e_j ⊗ e_k."""
        return np.tensordot(a, self.comult, axes=(0, 0))

    def tensor_product(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        """The product of two elements of H ⊗ H."""
        first = np.tensordot(x, self.mult, axes=([0], [0]))
        second = np.tensordot(first, y, axes=([1], [0]))
        return np.tensordot(second, self.mult, axes=([0, 2], [0, 1]))

    def counit_of(self, a: Element) -> Fraction:
        return Fraction(np.dot(a, self.counit))

    def antipode_of(self, a: Element) -> Element:
        return np.tensordot(a, self.antipode, axes=(0, 0))

    def format_element(self, a: Element) -> Dict[str, str]:
        return {label: format_scalar(value) for label, value in zip(self.basis, a) if value != 0}

    def format_tensor(self, t: np.ndarray) -> Dict[str, str]:
        return {
            f"{self.basis[j]}⊗{self.basis[k]}": format_scalar(t[j, k])
            for j in range(self.dimension)
            for k in range(self.dimension)
            if t[j, k] != 0
        }

    # serialization ----------------------------------------------------------

    def to_json(self) -> dict:
        n = self.dimension
        mult: Dict[str, List[dict]] = {}
        for i in range(n):
            for j in range(n):
                entries = [{"k": k, "c": format_scalar(self.mult[i, j, k])} for k in range(n) if self.mult[i, j, k] != 0]
                if entries:
                    mult[f"{i},{j}"] = entries
        comult: Dict[str, List[dict]] = {}
        for i in range(n):
            entries = [
                {"j": j, "k": k, "c": format_scalar(self.comult[i, j, k])}
                for j in range(n)
                for k in range(n)
                if self.comult[i, j, k] != 0
            ]
            if entries:
                comult[str(i)] = entries
        return {
            "name": self.name,
            "basis": list(self.basis),
            "mult": mult,
            "unit": [format_scalar(v) for v in self.unit],
            "comult": comult,
            "counit": [format_scalar(v) for v in self.counit],
            "antipode": [[format_scalar(v) for v in row] for row in self.antipode],
        }

    def to_json_string(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, payload: Mapping) -> "HopfSpec":
        """
        Reads the JSON form {"basis", "mult", "unit", "comult", "counit", "antipode"}.

        Error
        ------
        StructureError
            A field is missing or an index is out of range.
        """
        try:
            basis = list(payload["basis"])
            n = len(basis)
            mult = zeros(n, n, n)
            for pair, entries in payload["mult"].items():
                i, j = (int(part) for part in pair.split(","))
                for entry in entries:
                    mult[i, j, int(entry["k"])] += parse_scalar(entry["c"])
            comult = zeros(n, n, n)
            for i, entries in payload["comult"].items():
                for entry in entries:
                    comult[int(i), int(entry["j"]), int(entry["k"])] += parse_scalar(entry["c"])
            return cls(
                payload.get("name", "hopf"),
                basis,
                mult,
                list(payload["unit"]),
                comult,
                list(payload["counit"]),
                [list(row) for row in payload["antipode"]],
            )
        except (KeyError, IndexError, TypeError, AttributeError, ValueError) as error:
            if isinstance(error, StructureError):
                raise
            raise StructureError(f"Malformed Hopf algebra JSON: {error}") from error


def _nonzero_cells(difference: np.ndarray, depth: int):
    """Yields (index tuple over the first depth axes, sub-array) for every nonzero cell."""
    for index in np.ndindex(*difference.shape[:depth]):
        cell = difference[index]
        if np.any(np.asarray(cell, dtype=object) != 0):
            yield index, cell


def verify_hopf(H: HopfSpec) -> List[Violation]:
    """
    Checks every Hopf algebra axiom on all basis tuples.

    Parameters
    ----------
    H : HopfSpec
        The structure constants to check.

    Returns
    -------
    violations : list of Violation
        Named associativity, unit, coassociativity, counit, comultiplicative, counit-multiplicative
        and antipode; empty iff H is a Hopf algebra.

    Examples
    --------
    >>> from vsa.hopf import sweedler_hopf
    >>> verify_hopf(sweedler_hopf())
    []

    """
    n = H.dimension
    identity = np.identity(n, dtype=object) * Fraction(1)
    violations: List[Violation] = []

    def label(index) -> tuple:
        return tuple(H.basis[i] for i in index)

    left = np.tensordot(H.mult, H.mult, axes=([2], [0]))
    right = np.tensordot(H.mult, H.mult, axes=([1], [2])).transpose(0, 2, 3, 1)
    for index, cell in _nonzero_cells(left - right, 3):
        violations.append(Violation("associativity", label(index), H.format_element(cell)))

    for side, action in (("left", np.tensordot(H.unit, H.mult, axes=(0, 0))), ("right", np.tensordot(H.mult, H.unit, axes=(1, 0)))):
        for index, cell in _nonzero_cells(action - identity, 1):
            violations.append(Violation("unit", (side,) + label(index), H.format_element(cell)))

    left = np.tensordot(H.comult, H.comult, axes=([1], [0])).transpose(0, 2, 3, 1)
    right = np.tensordot(H.comult, H.comult, axes=([2], [0]))
    for index, cell in _nonzero_cells(left - right, 1):
        violations.append(Violation("coassociativity", label(index)))

    for side, action in (("left", np.tensordot(H.comult, H.counit, axes=([1], [0]))), ("right", np.tensordot(H.comult, H.counit, axes=([2], [0])))):
        for index, cell in _nonzero_cells(action - identity, 1):
            violations.append(Violation("counit", (side,) + label(index), H.format_element(cell)))

    for i in range(n):
        for j in range(n):
            ei, ej = H.basis_element(i), H.basis_element(j)
            difference = H.coproduct(H.product(ei, ej)) - H.tensor_product(H.coproduct(ei), H.coproduct(ej))
            if np.any(difference != 0):
                violations.append(Violation("comultiplicative", label((i, j)), H.format_tensor(difference)))
            if H.counit_of(H.product(ei, ej)) != H.counit[i] * H.counit[j]:
                violations.append(Violation("counit-multiplicative", label((i, j))))
    if np.any(H.coproduct(H.unit) - np.multiply.outer(H.unit, H.unit) != 0):
        violations.append(Violation("comultiplicative", ("1",)))
    if H.counit_of(H.unit) != 1:
        violations.append(Violation("counit-multiplicative", ("1",)))

    for i in range(n):
        coproduct = H.coproduct(H.basis_element(i))
        expected = H.counit[i] * H.unit
        left = np.tensordot(np.tensordot(coproduct, H.antipode, axes=([0], [0])), H.mult, axes=([1, 0], [0, 1]))
        right = np.tensordot(np.tensordot(coproduct, H.antipode, axes=([1], [0])), H.mult, axes=([0, 1], [0, 1]))
        for side, value in (("left", left), ("right", right)):
            if np.any(value - expected != 0):
                violations.append(Violation("antipode", (side, H.basis[i]), H.format_element(value - expected)))
    return sorted_violations(violations)


class Cocommutativity(NamedTuple):
    """Outcome of is_cocommutative; witness is the first basis element with Δ ≠ Δ^op."""

    cocommutative: bool
    witness: Optional[str] = None


def is_cocommutative(H: HopfSpec) -> Cocommutativity:
    """
    Compares Δ(e_i) with its flip for every basis element.

    Examples
    --------
    >>> from vsa.hopf import sweedler_hopf
    >>> is_cocommutative(sweedler_hopf())
    Cocommutativity(cocommutative=False, witness='x')

    """
    for i in range(H.dimension):
        if np.any(H.comult[i] != H.comult[i].T):
            return Cocommutativity(False, H.basis[i])
    return Cocommutativity(True)
