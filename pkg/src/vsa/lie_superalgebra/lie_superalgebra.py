"""
This module defines finite-dimensional Lie superalgebras given by structure constants together
with an even bilinear form, their axiom validation and the Heisenberg double construction.
"""

import json
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from vsa.errors import StructureError
from vsa.scalars_linear import Parity, format_scalar, koszul_sign, parse_scalar, rank, SparseMatrix
from vsa.violations import Violation, sorted_violations

Combination = Dict[int, Fraction]


class LieSuperalgebraSpec:
    """
    Class representing a Lie superalgebra 𝔤 = 𝔤₀̄ ⊕ 𝔤₁̄ with a bilinear form ( , ).

    Parameters
    ----------
    name : str
        Identifier used in reports.
    basis : sequence of (str, Parity)
        Ordered basis with generator ids and parities.
    brackets : mapping
        Map from (i, j) to {k: c}, meaning [x_i, x_j] = Σ c x_k. Only i ≤ j is stored; an
        entry given with i > j is moved to (j, i) through super-antisymmetry.
    form : mapping
        Map from (i, j) to (x_i, x_j). Unlisted entries are zero.
    T : int
        Lattice denominator recorded with the JSON schema.

    Error
    ------
    StructureError
        An index is out of range, a pair is given in both orders, or ids repeat.

    Examples
    --------
    >>> x = LieSuperalgebraSpec("heisenberg", [("x", Parity.EVEN)], {}, {(0, 0): 1})
    >>> x.dimension, x.pair(0, 0)
    (1, Fraction(1, 1))

    """

    def __init__(
        self,
        name: str,
        basis: Sequence[Tuple[str, Parity]],
        brackets: Optional[Mapping[Tuple[int, int], Mapping[int, object]]] = None,
        form: Optional[Mapping[Tuple[int, int], object]] = None,
        T: int = 1,
    ) -> None:
        self.name = name
        self.basis: Tuple[Tuple[str, Parity], ...] = tuple((str(i), Parity.parse(p)) for i, p in basis)
        self.T = int(T)
        ids = [i for i, _ in self.basis]
        if len(set(ids)) != len(ids):
            raise StructureError(f"Repeated generator ids in {name}: {ids}")
        n = len(self.basis)

        self._brackets: Dict[Tuple[int, int], Combination] = {}
        for (i, j), combination in (brackets or {}).items():
            self._check_index(i, j)
            cleaned = {}
            for k, c in combination.items():
                self._check_index(k)
                c = parse_scalar(c)
                if c != 0:
                    cleaned[int(k)] = c
            if i > j:
                if (j, i) in (brackets or {}):
                    raise StructureError(f"Bracket ({i},{j}) given in both orders")
                sign = -koszul_sign(self.parity(i), self.parity(j))
                cleaned = {k: sign * c for k, c in cleaned.items()}
                i, j = j, i
            if cleaned:
                self._brackets[(int(i), int(j))] = cleaned

        self._form: Dict[Tuple[int, int], Fraction] = {}
        for (i, j), value in (form or {}).items():
            self._check_index(i, j)
            value = parse_scalar(value)
            if value != 0:
                self._form[(int(i), int(j))] = value
        assert all(0 <= k < n for c in self._brackets.values() for k in c)

    def _check_index(self, *indices: int) -> None:
        for index in indices:
            if not isinstance(index, (int, np.integer)) or not 0 <= index < len(self.basis):
                raise StructureError(f"Basis index {index!r} out of range for {self.name}")

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def ids(self) -> List[str]:
        return [i for i, _ in self.basis]

    def parity(self, i: int) -> Parity:
        return self.basis[i][1]

    def bracket(self, i: int, j: int) -> Combination:
        """
        Returns [x_i, x_j] as {k: c}, deriving the i > j entry by super-antisymmetry.
        """
        if i <= j:
            return dict(self._brackets.get((i, j), {}))
        sign = -koszul_sign(self.parity(i), self.parity(j))
        return {k: sign * c for k, c in self._brackets.get((j, i), {}).items()}

    def pair(self, i: int, j: int) -> Fraction:
        return self._form.get((i, j), Fraction(0))

    def bracket_of(self, left: Combination, right: Combination) -> Combination:
        """Bilinear extension of the bracket to combinations."""
        result: Combination = {}
        for i, a in left.items():
            for j, b in right.items():
                for k, c in self.bracket(i, j).items():
                    result[k] = result.get(k, Fraction(0)) + a * b * c
        return {k: v for k, v in result.items() if v != 0}

    def pair_of(self, left: Combination, right: Combination) -> Fraction:
        return sum((a * b * self.pair(i, j) for i, a in left.items() for j, b in right.items()), Fraction(0))

    def gram_matrix(self) -> np.ndarray:
        """
        Returns the Gram matrix ((x_i, x_j)) as a numpy object array.

        Examples
        --------
        >>> heisenberg_double([("e", Parity.EVEN)]).gram_matrix().tolist()
        [[Fraction(0, 1), Fraction(1, 1)], [Fraction(1, 1), Fraction(0, 1)]]

        """
        n = self.dimension
        gram = np.full((n, n), Fraction(0), dtype=object)
        for (i, j), value in self._form.items():
            gram[i, j] = value
        return gram

    def is_nondegenerate(self) -> bool:
        """Tells whether the Gram matrix is invertible."""
        return rank(SparseMatrix.from_entries(self.dimension, self.dimension, self._form)) == self.dimension

    @property
    def signature(self) -> str:
        return self.to_json_string()

    def to_json(self) -> dict:
        brackets = {}
        for (i, j), combination in sorted(self._brackets.items()):
            brackets[f"{i},{j}"] = [{"k": k, "c": format_scalar(c)} for k, c in sorted(combination.items())]
        return {
            "name": self.name,
            "T": self.T,
            "basis": [{"id": i, "parity": p.label} for i, p in self.basis],
            "brackets": brackets,
            "form": {f"{i},{j}": format_scalar(v) for (i, j), v in sorted(self._form.items())},
        }

    def to_json_string(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, payload: Mapping) -> "LieSuperalgebraSpec":
        """
        Reads the schema {"name", "T", "basis", "brackets", "form"}.

        Error
        ------
        StructureError
            A key is missing or a pair key is not "i,j".
        """
        try:
            basis = [(entry["id"], Parity.parse(entry["parity"])) for entry in payload["basis"]]
            brackets = {
                _pair_key(key): {int(term["k"]): term["c"] for term in terms}
                for key, terms in payload.get("brackets", {}).items()
            }
            form = {_pair_key(key): value for key, value in payload.get("form", {}).items()}
            return cls(payload.get("name", "custom"), basis, brackets, form, payload.get("T", 1))
        except (KeyError, TypeError) as error:
            raise StructureError(f"Malformed Lie superalgebra JSON: {error}") from error


def _pair_key(key: str) -> Tuple[int, int]:
    try:
        i, j = (int(part) for part in key.split(","))
    except ValueError as error:
        raise StructureError(f"Pair key must read 'i,j': {key!r}") from error
    return i, j


def validate(spec: LieSuperalgebraSpec) -> List[Violation]:
    """
    Checks the Lie superalgebra and form axioms on all basis pairs and triples.

    Parameters
    ----------
    spec : LieSuperalgebraSpec
        The presentation to validate.

    Returns
    -------
    violations : list of Violation
        Empty iff brackets respect parity, are super-antisymmetric and satisfy the super
        Jacobi identity, and the form is even, supersymmetric and invariant.

    Notes
    -----
    The axioms checked, for homogeneous x, y, z:
        - [𝔤_α, 𝔤_β] ⊆ 𝔤_{α+β}
        - [x, y] = −(−1)^{|x||y|}[y, x]
        - [x, [y, z]] = [[x, y], z] + (−1)^{|x||y|}[y, [x, z]]
        - (𝔤₀̄, 𝔤₁̄) = 0
        - (x, y) = (−1)^{|x||y|}(y, x)
        - ([x, y], z) = (x, [y, z])

    Examples
    --------
    >>> odd = LieSuperalgebraSpec("odd", [("f", Parity.ODD)], {}, {(0, 0): 1})
    >>> [v.check for v in validate(odd)]
    ['supersymmetry']

    """
    n = spec.dimension
    ids = spec.ids
    violations: List[Violation] = []

    def difference(combination: Combination) -> Dict[str, str]:
        return {ids[k]: format_scalar(c) for k, c in sorted(combination.items())}

    for i in range(n):
        for j in range(i, n):
            for k in spec.bracket(i, j):
                if spec.parity(k) != spec.parity(i) + spec.parity(j):
                    violations.append(Violation("bracket-parity", (ids[i], ids[j]), message=f"component {ids[k]}"))
        bracket = spec.bracket(i, i)
        if bracket and spec.parity(i) is Parity.EVEN:
            violations.append(Violation("super-antisymmetry", (ids[i], ids[i]), difference(bracket)))

    for i in range(n):
        for j in range(n):
            for k in range(n):
                x, y, z = {i: Fraction(1)}, {j: Fraction(1)}, {k: Fraction(1)}
                left = spec.bracket_of(x, spec.bracket_of(y, z))
                right = spec.bracket_of(spec.bracket_of(x, y), z)
                sign = koszul_sign(spec.parity(i), spec.parity(j))
                for key, value in spec.bracket_of(y, spec.bracket_of(x, z)).items():
                    right[key] = right.get(key, Fraction(0)) + sign * value
                delta = {key: left.get(key, Fraction(0)) - right.get(key, Fraction(0)) for key in set(left) | set(right)}
                delta = {key: value for key, value in delta.items() if value != 0}
                if delta:
                    violations.append(Violation("super-jacobi", (ids[i], ids[j], ids[k]), difference(delta)))

                invariant = spec.pair_of(spec.bracket(i, j), z) - spec.pair_of(x, spec.bracket(j, k))
                if invariant != 0:
                    violations.append(
                        Violation("invariance", (ids[i], ids[j], ids[k]), format_scalar(invariant))
                    )

    for i in range(n):
        for j in range(n):
            value = spec.pair(i, j)
            if value != 0 and spec.parity(i) != spec.parity(j):
                violations.append(Violation("even-form", (ids[i], ids[j]), format_scalar(value)))
            mismatch = value - koszul_sign(spec.parity(i), spec.parity(j)) * spec.pair(j, i)
            if mismatch != 0 and i <= j:
                violations.append(Violation("supersymmetry", (ids[i], ids[j]), format_scalar(mismatch)))
    return sorted_violations(violations)


def heisenberg_double(h: Iterable[Tuple[str, Parity]]) -> LieSuperalgebraSpec:
    """
    Builds the abelian Lie superalgebra H = 𝔥 ⊕ 𝔥̄ with its nondegenerate even supersymmetric form.

    Parameters
    ----------
    h : iterable of (str, Parity)
        Basis of the superspace 𝔥.

    Returns
    -------
    double : LieSuperalgebraSpec
        Basis [h_1, ..., h_r, h̄_1, ..., h̄_r] with ids "<id>_bar" for the dual copy, all
        brackets zero, (e_i, ē_j) = (ē_j, e_i) = δ_ij on even pairs and
        (f_i, f̄_j) = −(f̄_j, f_i) = δ_ij on odd pairs.

    Notes
    -----
    The embedded copy of 𝔥 is isotropic, (𝔥, 𝔥) ≡ 0.

    Examples
    --------
    >>> heisenberg_double([("f", Parity.ODD)]).gram_matrix().tolist()
    [[Fraction(0, 1), Fraction(1, 1)], [Fraction(-1, 1), Fraction(0, 1)]]
    >>> heisenberg_double([]).dimension
    0

    """
    h = [(str(i), Parity.parse(p)) for i, p in h]
    r = len(h)
    basis = h + [(f"{i}_bar", p) for i, p in h]
    form = {}
    for index, (_, parity) in enumerate(h):
        form[(index, r + index)] = 1
        form[(r + index, index)] = 1 if parity is Parity.EVEN else -1
    label = ",".join(f"{i}:{p.label}" for i, p in h)
    return LieSuperalgebraSpec(f"double({label})", basis, {}, form)


def one_dimensional(generator: str = "x", parity: Parity = Parity.EVEN, value: object = 1) -> LieSuperalgebraSpec:
    """The 1-dimensional abelian Lie superalgebra with (x, x) = value."""
    return LieSuperalgebraSpec(f"abelian({generator})", [(generator, parity)], {}, {(0, 0): value})


def abelian_odd_pair() -> LieSuperalgebraSpec:
    """
    Odd abelian ψ₁, ψ₂ with (ψ₁, ψ₂) = 1 = −(ψ₂, ψ₁).
    """
    return LieSuperalgebraSpec(
        "abelian-odd-pair",
        [("psi1", Parity.ODD), ("psi2", Parity.ODD)],
        {},
        {(0, 1): 1, (1, 0): -1},
    )


def sl2() -> LieSuperalgebraSpec:
    """
    𝔰𝔩₂ in the basis (e, h, f) with the trace form (e, f) = 1, (h, h) = 2.
    """
    return LieSuperalgebraSpec(
        "sl2",
        [("e", Parity.EVEN), ("h", Parity.EVEN), ("f", Parity.EVEN)],
        {(0, 1): {0: -2}, (0, 2): {1: 1}, (1, 2): {2: -2}},
        {(0, 2): 1, (2, 0): 1, (1, 1): 2},
    )


def osp12() -> LieSuperalgebraSpec:
    """
    𝔬𝔰𝔭(1|2) in the basis (e, h, f | x, y).

    [x, x] = 2e, [y, y] = −2f, [x, y] = h, [h, x] = x, [h, y] = −y, [e, y] = −x, [f, x] = −y,
    with (e, f) = 1, (h, h) = 2 and (x, y) = 2 = −(y, x).
    """
    return LieSuperalgebraSpec(
        "osp12",
        [("e", Parity.EVEN), ("h", Parity.EVEN), ("f", Parity.EVEN), ("x", Parity.ODD), ("y", Parity.ODD)],
        {
            (0, 1): {0: -2},
            (0, 2): {1: 1},
            (1, 2): {2: -2},
            (1, 3): {3: 1},
            (1, 4): {4: -1},
            (0, 4): {3: -1},
            (2, 3): {4: -1},
            (3, 3): {0: 2},
            (4, 4): {2: -2},
            (3, 4): {1: 1},
        },
        {(0, 2): 1, (2, 0): 1, (1, 1): 2, (3, 4): 2, (4, 3): -2},
    )
