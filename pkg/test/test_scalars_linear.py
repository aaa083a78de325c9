"""
This test suite includes unit tests for the exact scalars, parities and the sparse linear algebra
of the scalars_linear package.
"""

import unittest
from fractions import Fraction

import numpy as np
import sympy

from vsa.errors import LatticeError, StructureError
from vsa.scalars_linear import (
    EchelonBasis,
    Parity,
    SparseMatrix,
    binomial,
    check_mode_index,
    check_weight,
    dense_to_sparse,
    format_scalar,
    in_span,
    kernel_basis,
    koszul_sign,
    lattice_points,
    parse_scalar,
    rank,
    solve_nullspace,
)


class TestScalars(unittest.TestCase):
    def test_parse_scalar(self):
        """
        Test the parse_scalar function.

        Checks that integers, fractions and "p/q" strings become reduced Fractions.

        """
        test_cases = [
            (3, Fraction(3), "Integer Case"),
            ("-7/14", Fraction(-1, 2), "Negative String Case"),
            (" 5 / 2 ", Fraction(5, 2), "Whitespace Case"),
            (Fraction(9, 6), Fraction(3, 2), "Fraction Case"),
        ]
        for value, expected, description in test_cases:
            with self.subTest(description=description):
                self.assertEqual(parse_scalar(value), expected)

    def test_field_axioms(self):
        """
        Test the arithmetic of parsed scalars on seeded random rationals.

        Checks associativity, commutativity, distributivity, additive and multiplicative inverses,
        and that formatting then parsing returns the same value.

        """
        rng = np.random.default_rng(11)
        samples = [
            parse_scalar(f"{int(p)}/{int(q)}")
            for p, q in zip(rng.integers(-50, 51, size=60), rng.integers(1, 30, size=60))
        ]
        for a, b, c in zip(samples[0::3], samples[1::3], samples[2::3]):
            with self.subTest(a=a, b=b, c=c):
                self.assertEqual(a + (b + c), (a + b) + c)
                self.assertEqual(a * (b * c), (a * b) * c)
                self.assertEqual(a + b, b + a)
                self.assertEqual(a * b, b * a)
                self.assertEqual(a * (b + c), a * b + a * c)
                self.assertEqual(a + (-a), 0)
                self.assertEqual(a * 1 + 0, a)
                if a != 0:
                    self.assertEqual(a * (1 / a), 1)
                self.assertEqual(parse_scalar(format_scalar(a * b - c)), a * b - c)

    def test_parse_scalar_rejects_inexact_values(self):
        """
        Test the parse_scalar function with floats, booleans and malformed strings.

        Checks that a StructureError is raised instead of a lossy conversion.

        """
        for value in (0.5, True, "1/0", "one half", None):
            with self.subTest(value=value):
                with self.assertRaises(StructureError):
                    parse_scalar(value)

    def test_format_scalar(self):
        """
        Test the format_scalar function.

        Checks that formatting then parsing gives the value back and that integers print bare.

        """
        for value in (Fraction(0), Fraction(-3), Fraction(7, 2), Fraction(-1, 12)):
            with self.subTest(value=value):
                self.assertEqual(parse_scalar(format_scalar(value)), value)
        self.assertEqual(format_scalar(Fraction(4, 2)), "2")

    def test_parity(self):
        """
        Test the Parity enumeration.

        Checks addition mod 2, the sign, the label and parsing of the accepted spellings.

        """
        self.assertIs(Parity.ODD + Parity.ODD, Parity.EVEN)
        self.assertIs(Parity.EVEN + 1, Parity.ODD)
        self.assertEqual(Parity.EVEN.sign, 1)
        self.assertEqual(Parity.ODD.label, "odd")
        for value, expected in (("even", Parity.EVEN), ("ODD", Parity.ODD), (0, Parity.EVEN), ("1", Parity.ODD)):
            with self.subTest(value=value):
                self.assertIs(Parity.parse(value), expected)
        with self.assertRaises(StructureError):
            Parity.parse("neither")

    def test_koszul_sign(self):
        """
        Test the koszul_sign function.

        Checks that only two odd elements pick up a minus sign.

        """
        self.assertEqual(koszul_sign(Parity.ODD, Parity.ODD), -1)
        self.assertEqual(koszul_sign(Parity.ODD, Parity.EVEN), 1)
        self.assertEqual(koszul_sign(Parity.EVEN, Parity.EVEN), 1)

    def test_binomial(self):
        """
        Test the binomial function.

        Checks the generalized coefficient against the falling factorial for negative and
        rational upper arguments.

        """
        test_cases = [
            (5, 2, Fraction(10)),
            (-1, 4, Fraction(1)),
            (-3, 2, Fraction(6)),
            (Fraction(1, 2), 2, Fraction(-1, 8)),
            (4, 0, Fraction(1)),
            (4, -1, Fraction(0)),
        ]
        for upper, lower, expected in test_cases:
            with self.subTest(upper=upper, lower=lower):
                self.assertEqual(binomial(upper, lower), expected)

    def test_weights_and_indices(self):
        """
        Test the check_weight and check_mode_index functions.

        Checks that weights must lie in (1/T)·ℕ and that n-th product indices must be integers.

        """
        self.assertEqual(check_weight("3/2", 2), Fraction(3, 2))
        for weight, T in (("1/2", 1), ("-1", 1), ("1/3", 2)):
            with self.subTest(weight=weight, T=T):
                with self.assertRaises(LatticeError):
                    check_weight(weight, T)
        self.assertEqual(check_mode_index("-3"), -3)
        with self.assertRaises(LatticeError):
            check_mode_index("1/2")

    def test_lattice_points(self):
        """
        Test the lattice_points function.

        Checks that the points are 0, 1/T, ... up to and including the bound.

        """
        self.assertEqual(list(lattice_points(Fraction(1), 2)), [Fraction(0), Fraction(1, 2), Fraction(1)])
        self.assertEqual(list(lattice_points(Fraction(5, 4), 1)), [Fraction(0), Fraction(1)])


class TestSparseLinearAlgebra(unittest.TestCase):
    @staticmethod
    def random_matrix(rng, rows, cols, target_rank, denominators=(1,)):
        left = rng.integers(-3, 4, size=(rows, target_rank))
        right = rng.integers(-3, 4, size=(target_rank, cols))
        product = left.dot(right)
        return [
            [Fraction(int(product[r, c]), int(denominators[(r + c) % len(denominators)])) for c in range(cols)]
            for r in range(rows)
        ]

    def test_rank_against_sympy(self):
        """
        Test the rank function against sympy's exact rank.

        Checks seeded low-rank matrices on both sides of the dense/sparse threshold, with
        rational entries on the dense side.

        """
        rng = np.random.default_rng(2024)
        test_cases = [
            (5, 7, 3, (1, 2, 3), "Small Rational Case"),
            (12, 9, 9, (1, 5), "Square-ish Full Rank Case"),
            (30, 30, 11, (1,), "Medium Integer Case"),
            (70, 66, 6, (1,), "Sparse Elimination Case"),
        ]
        for rows, cols, target, denominators, description in test_cases:
            with self.subTest(description=description):
                dense = self.random_matrix(rng, rows, cols, target, denominators)
                expected = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in row] for row in dense]).rank()
                self.assertEqual(rank(SparseMatrix.from_dense(dense)), expected)

    def test_rank_of_transpose(self):
        """
        Test the rank function on a matrix and its transpose.

        Checks seeded random sparse matrices up to 200×200, including low-rank products, on both
        sides of the dense/sparse threshold.

        """
        rng = np.random.default_rng(7)
        test_cases = [
            (200, 200, 0.02, None, "Square Sparse Case"),
            (200, 150, 0.03, None, "Tall Sparse Case"),
            (120, 200, 0.03, None, "Wide Sparse Case"),
            (200, 200, 0.1, 30, "Low Rank Product Case"),
            (8, 11, 0.4, None, "Small Dense Case"),
        ]
        for rows, cols, density, inner, description in test_cases:
            with self.subTest(description=description):
                if inner is None:
                    values = rng.integers(-3, 4, size=(rows, cols)) * (rng.random((rows, cols)) < density)
                else:
                    left = rng.integers(-2, 3, size=(rows, inner)) * (rng.random((rows, inner)) < density)
                    right = rng.integers(-2, 3, size=(inner, cols)) * (rng.random((inner, cols)) < density)
                    values = left.dot(right)
                M = SparseMatrix.from_dense([[int(x) for x in row] for row in values])
                self.assertEqual(rank(M), rank(M.transpose()))
                if inner is not None:
                    self.assertLessEqual(rank(M), inner)

    def test_sparse_matrix_validation(self):
        """
        Test the SparseMatrix constructors.

        Checks that out-of-range entries and ragged rows are rejected and that zeros are dropped.

        """
        with self.assertRaises(StructureError):
            SparseMatrix(2, 2, {(2, 0): Fraction(1)})
        with self.assertRaises(StructureError):
            SparseMatrix.from_dense([[1, 2], [3]])
        m = SparseMatrix.from_entries(2, 3, {(0, 0): 0, (1, 2): "1/2"})
        self.assertEqual(m.entries, {(1, 2): Fraction(1, 2)})
        self.assertEqual(m.apply([1, 1, 4]), [Fraction(0), Fraction(2)])

    def test_kernel_basis(self):
        """
        Test the kernel_basis function.

        Checks that every returned vector is annihilated and that rank plus nullity is the
        number of columns.

        """
        rng = np.random.default_rng(7)
        test_cases = [
            (self.random_matrix(rng, 4, 6, 2), "Wide Case"),
            (self.random_matrix(rng, 6, 4, 4), "Tall Case"),
            ([[0, 0, 0]] * 3, "Zero Case"),
        ]
        for dense, description in test_cases:
            with self.subTest(description=description):
                m = SparseMatrix.from_dense(dense)
                cols = m.cols
                kernel = kernel_basis(m)
                self.assertEqual(rank(m) + len(kernel), cols)
                for vector in kernel:
                    self.assertTrue(all(value == 0 for value in m.apply(vector)))

    def test_solve_nullspace(self):
        """
        Test the solve_nullspace function.

        Checks that stacked blocks are solved jointly: x + y = 0 together with y + z = 0 leaves
        the line through (1, −1, 1).

        """
        blocks = [np.array([[1, 1, 0]], dtype=object), np.array([[0, 1, 1]], dtype=object)]
        kernel = solve_nullspace(blocks, 3)
        self.assertEqual(len(kernel), 1)
        self.assertTrue(in_span([dense_to_sparse(kernel[0])], {0: 1, 1: -1, 2: 1}))

    def test_echelon_basis(self):
        """
        Test the EchelonBasis class.

        Checks that dependent vectors are not added and membership is exact.

        """
        basis = EchelonBasis([{"u": 1, "v": 1}])
        self.assertFalse(basis.add({"u": -2, "v": -2}))
        self.assertTrue(basis.add({"v": Fraction(1, 3)}))
        self.assertEqual(basis.dimension, 2)
        self.assertTrue(basis.contains({"u": 5}))
        self.assertFalse(basis.contains({"w": 1}))
        self.assertEqual(len(basis.reduce({"u": 3, "v": 1})), 0)


if __name__ == "__main__":
    unittest.main()
