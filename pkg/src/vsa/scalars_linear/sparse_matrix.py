"""
This module defines sparse rational matrices and the exact linear algebra every certificate rests on:
fraction-free rank, null spaces and incremental echelon bases.
"""

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Hashable, Iterable, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from vsa.defaults import DENSE_RANK_THRESHOLD
from vsa.errors import StructureError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SparseMatrix:
    """
    Class representing a rows × cols matrix over ℚ with no stored zeros.

    Parameters
    ----------
    rows : int
        Number of rows.
    cols : int
        Number of columns.
    entries : dict
        Map from (row, col) to a nonzero Fraction.

    Examples
    --------
    >>> m = SparseMatrix.from_dense([[1, 2], [2, 4], [3, 6]])
    >>> m.rows, m.cols, len(m.entries)
    (3, 2, 6)

    """

    rows: int
    cols: int
    entries: Dict[Tuple[int, int], Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise StructureError("Matrix dimensions must be nonnegative")
        for (r, c), value in self.entries.items():
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise StructureError(f"Entry ({r}, {c}) outside a {self.rows}×{self.cols} matrix")
            assert value != 0, "SparseMatrix stores no zero entries"

    @classmethod
    def from_entries(cls, rows: int, cols: int, entries: Mapping[Tuple[int, int], object]) -> "SparseMatrix":
        cleaned = {}
        for key, value in entries.items():
            value = Fraction(value)
            if value != 0:
                cleaned[key] = value
        return cls(rows, cols, cleaned)

    @classmethod
    def from_dense(cls, dense: Sequence[Sequence[object]]) -> "SparseMatrix":
        rows = len(dense)
        cols = len(dense[0]) if rows else 0
        entries = {}
        for r, row in enumerate(dense):
            if len(row) != cols:
                raise StructureError("Ragged dense matrix")
            for c, value in enumerate(row):
                entries[(r, c)] = value
        return cls.from_entries(rows, cols, entries)

    @classmethod
    def from_columns(cls, rows: int, columns: Sequence[Mapping[int, Fraction]]) -> "SparseMatrix":
        entries = {}
        for c, column in enumerate(columns):
            for r, value in column.items():
                entries[(r, c)] = value
        return cls.from_entries(rows, len(columns), entries)

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(self.cols, self.rows, {(c, r): v for (r, c), v in self.entries.items()})

    def to_dense(self) -> np.ndarray:
        """
        Returns the matrix as a numpy object array of Fractions.
        """
        dense = np.full((self.rows, self.cols), Fraction(0), dtype=object)
        for (r, c), value in self.entries.items():
            dense[r, c] = value
        return dense

    def row_dicts(self) -> List[Dict[int, Fraction]]:
        rows: List[Dict[int, Fraction]] = [dict() for _ in range(self.rows)]
        for (r, c), value in self.entries.items():
            rows[r][c] = value
        return rows

    def apply(self, vector: Sequence[object]) -> List[Fraction]:
        """
        Returns M·v exactly.
        """
        if len(vector) != self.cols:
            raise StructureError(f"Vector of length {len(vector)} against {self.cols} columns")
        result = [Fraction(0)] * self.rows
        for (r, c), value in self.entries.items():
            result[r] += value * Fraction(vector[c])
        return result


def _integer_rows(matrix: SparseMatrix) -> List[Dict[int, int]]:
    """
    Scales every row by the lcm of its denominators; row scaling does not change rank.
    """
    integer_rows = []
    for row in matrix.row_dicts():
        if not row:
            continue
        scale = math.lcm(*(value.denominator for value in row.values()))
        integer_rows.append({c: int(value * scale) for c, value in row.items()})
    return integer_rows


def _dense_bareiss_rank(rows: List[Dict[int, int]], cols: int) -> int:
    a = np.zeros((len(rows), cols), dtype=object)
    for r, row in enumerate(rows):
        for c, value in row.items():
            a[r, c] = value
    n = a.shape[0]
    rank, previous = 0, 1
    for c in range(cols):
        if rank == n:
            break
        nonzero = np.flatnonzero(a[rank:, c] != 0)
        if nonzero.size == 0:
            continue
        pivot = rank + int(nonzero[0])
        if pivot != rank:
            a[[rank, pivot]] = a[[pivot, rank]]
        for r in range(rank + 1, n):
            a[r, c + 1 :] = (a[rank, c] * a[r, c + 1 :] - a[r, c] * a[rank, c + 1 :]) // previous
            a[r, c] = 0
        previous = a[rank, c]
        rank += 1
    return rank


def _primitive(row: Dict[int, int]) -> Dict[int, int]:
    content = math.gcd(*row.values())
    if content > 1:
        return {c: v // content for c, v in row.items()}
    return row


def _sparse_fraction_free_rank(rows: List[Dict[int, int]]) -> int:
    active = list(range(len(rows)))
    rank = 0
    columns = sorted({c for row in rows for c in row})
    for c in columns:
        candidates = [r for r in active if c in rows[r]]
        if not candidates:
            continue
        pivot = candidates[0]
        active.remove(pivot)
        pivot_row, p = rows[pivot], rows[pivot][c]
        for r in candidates[1:]:
            row, q = rows[r], rows[r][c]
            combined = {k: p * v for k, v in row.items()}
            for k, v in pivot_row.items():
                value = combined.get(k, 0) - q * v
                if value:
                    combined[k] = value
                else:
                    combined.pop(k, None)
            rows[r] = _primitive(combined) if combined else combined
        rank += 1
    return rank


def rank(matrix: SparseMatrix) -> int:
    """
    Returns the exact rank of a rational matrix.

    Parameters
    ----------
    matrix : SparseMatrix
        The matrix to rank.

    Returns
    -------
    rank : int
        The rank over ℚ.

    Notes
    -----
    Rows are first scaled to integers. Small matrices are eliminated densely with Bareiss'
    fraction-free scheme, larger ones with sparse fraction-free elimination that strips row
    contents. Pivots are always the first nonzero entry in a column-major scan.

    Examples
    --------
    >>> rank(SparseMatrix.from_dense([[1, 2], [2, 4], [3, 6]]))
    1
    >>> rank(SparseMatrix(3, 5))
    0

    """
    rows = _integer_rows(matrix)
    if not rows:
        return 0
    if max(matrix.rows, matrix.cols) <= DENSE_RANK_THRESHOLD:
        return _dense_bareiss_rank(rows, matrix.cols)
    logger.debug("Sparse elimination of a %d×%d matrix", matrix.rows, matrix.cols)
    return _sparse_fraction_free_rank(rows)


class EchelonBasis:
    """
    Incrementally maintained reduced row echelon basis of a subspace.

    Vectors are sparse maps from hashable coordinates to Fractions. Every stored row has
    coefficient 1 at its pivot and 0 at every other pivot, so reduction is a single pass.

    Examples
    --------
    >>> basis = EchelonBasis()
    >>> basis.add({"a": 1, "b": 2})
    True
    >>> basis.add({"a": 2, "b": 4})
    False
    >>> basis.contains({"a": Fraction(1, 2), "b": 1})
    True

    """

    def __init__(self, vectors: Iterable[Mapping[Hashable, object]] = ()) -> None:
        self._rows: Dict[Hashable, Dict[Hashable, Fraction]] = {}
        for vector in vectors:
            self.add(vector)

    def __len__(self) -> int:
        return len(self._rows)

    @property
    def dimension(self) -> int:
        return len(self._rows)

    @property
    def vectors(self) -> List[Dict[Hashable, Fraction]]:
        return [dict(row) for row in self._rows.values()]

    @property
    def pivots(self) -> List[Hashable]:
        return list(self._rows)

    def reduce(self, vector: Mapping[Hashable, object]) -> Dict[Hashable, Fraction]:
        """
        Returns the remainder of a vector after elimination against the basis.
        """
        remainder = {k: Fraction(v) for k, v in vector.items() if v != 0}
        for pivot, row in self._rows.items():
            coefficient = remainder.get(pivot)
            if not coefficient:
                continue
            for k, v in row.items():
                value = remainder.get(k, Fraction(0)) - coefficient * v
                if value:
                    remainder[k] = value
                else:
                    remainder.pop(k, None)
        return remainder

    def contains(self, vector: Mapping[Hashable, object]) -> bool:
        return not self.reduce(vector)

    def add(self, vector: Mapping[Hashable, object]) -> bool:
        """
        Adds a vector, returning False when it already lies in the span.
        """
        remainder = self.reduce(vector)
        if not remainder:
            return False
        pivot = next(iter(remainder))
        scale = remainder[pivot]
        new_row = {k: v / scale for k, v in remainder.items()}
        for row in self._rows.values():
            coefficient = row.get(pivot)
            if not coefficient:
                continue
            for k, v in new_row.items():
                value = row.get(k, Fraction(0)) - coefficient * v
                if value:
                    row[k] = value
                else:
                    row.pop(k, None)
        self._rows[pivot] = new_row
        return True


def kernel_basis(matrix: SparseMatrix) -> List[List[Fraction]]:
    """
    Returns a basis of the exact null space {v : Mv = 0}.

    Parameters
    ----------
    matrix : SparseMatrix
        The matrix whose kernel is computed.

    Returns
    -------
    kernel : list of list of Fraction
        Column vectors of length matrix.cols; empty iff the matrix has full column rank.

    Examples
    --------
    >>> kernel_basis(SparseMatrix.from_dense([[1, 0], [0, 1]]))
    []
    >>> kernel_basis(SparseMatrix.from_dense([[1, 2], [2, 4]]))
    [[Fraction(-2, 1), Fraction(1, 1)]]

    """
    echelon: Dict[int, Dict[int, Fraction]] = {}
    for row in matrix.row_dicts():
        remainder = dict(row)
        for pivot in sorted(echelon):
            coefficient = remainder.get(pivot)
            if not coefficient:
                continue
            for k, v in echelon[pivot].items():
                value = remainder.get(k, Fraction(0)) - coefficient * v
                if value:
                    remainder[k] = value
                else:
                    remainder.pop(k, None)
        if not remainder:
            continue
        pivot = min(remainder)
        scale = remainder[pivot]
        new_row = {k: v / scale for k, v in remainder.items()}
        for other in echelon.values():
            coefficient = other.get(pivot)
            if not coefficient:
                continue
            for k, v in new_row.items():
                value = other.get(k, Fraction(0)) - coefficient * v
                if value:
                    other[k] = value
                else:
                    other.pop(k, None)
        echelon[pivot] = new_row
    free_columns = [c for c in range(matrix.cols) if c not in echelon]
    kernel = []
    for free in free_columns:
        vector = [Fraction(0)] * matrix.cols
        vector[free] = Fraction(1)
        for pivot, row in echelon.items():
            vector[pivot] = -row.get(free, Fraction(0))
        kernel.append(vector)
    return kernel


def solve_nullspace(blocks: Sequence[np.ndarray], unknowns: int) -> List[List[Fraction]]:
    """
    Returns a basis of the common null space of stacked dense coefficient blocks.

    Each block is a numpy array with `unknowns` columns.
    """
    entries = {}
    offset = 0
    for block in blocks:
        block = np.asarray(block, dtype=object)
        for (r, c), value in np.ndenumerate(block):
            if value != 0:
                entries[(offset + r, c)] = value
        offset += block.shape[0]
    return kernel_basis(SparseMatrix.from_entries(offset, unknowns, entries))


def row_echelon(vectors: Iterable[Mapping[Hashable, object]]) -> List[Dict[Hashable, Fraction]]:
    """
    Returns the reduced echelon basis of the span of the given sparse vectors.
    """
    return EchelonBasis(vectors).vectors


def in_span(vectors: Iterable[Mapping[Hashable, object]], candidate: Mapping[Hashable, object]) -> bool:
    """
    Tells whether a sparse vector lies in the span of the given vectors.
    """
    return EchelonBasis(vectors).contains(candidate)


def dense_to_sparse(vector: Sequence[object], labels: Optional[Sequence[Hashable]] = None) -> Dict[Hashable, Fraction]:
    keys = labels if labels is not None else range(len(vector))
    return {k: Fraction(v) for k, v in zip(keys, vector) if v != 0}
