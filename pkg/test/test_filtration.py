"""
This test suite includes unit tests for the strong-generator filtration: levels and projections,
the associated graded products, its bi-degree dimensions and the PBW certificate comparing
gr_E(V) with a free differential algebra.
"""

import unittest
from fractions import Fraction

from vsa.errors import PreconditionError, StructureError
from vsa.lie_superalgebra import one_dimensional
from vsa.scalars_linear import Parity
from vsa.state_spaces import AffineAlgebra, TensorAlgebra, affine_sl2, heisenberg, neveu_schwarz, odd_pair
from vsa.vertex_ops import nth_product, translation
from vsa.filtration import (
    CHECKS,
    GrElement,
    check_gr_commutative,
    convolve_gr_dimensions,
    dimension_table,
    filtration_level,
    gr_dimensions,
    gr_product,
    pbw_certificate,
    project,
)


class FlatFiltrationAlgebra(AffineAlgebra):
    """Heisenberg algebra with every state placed in filtration level 0."""

    def filtration_level(self, key):
        return Fraction(0)


class SwappedLevelAlgebra(AffineAlgebra):
    """Heisenberg algebra with the levels of x(-2).1 and x(-1)x(-1).1 exchanged."""

    def filtration_level(self, key):
        level = super().filtration_level(key)
        return 3 - level if key.weight == 2 else level


class TestFiltration(unittest.TestCase):
    def test_filtration_level(self):
        """
        Test the filtration_level and project functions.

        Checks that the level of a state is the largest level of its monomials and that
        projecting keeps exactly the monomials of the given level.

        """
        V = heisenberg()
        v = V.parse_state("x(-1)x(-1).1 + x(-2).1")
        self.assertEqual(filtration_level(v), 2)
        self.assertEqual(project(v, Fraction(2)), V.parse_state("x(-1)x(-1).1"))
        self.assertEqual(project(v, Fraction(1)), V.parse_state("x(-2).1"))
        self.assertEqual(filtration_level(neveu_schwarz(1).parse_state("L(-2)G(-3/2).1")), Fraction(7, 2))
        with self.assertRaises(StructureError):
            filtration_level(V.zero())

    def test_levels_of_products(self):
        """
        Test the filtration_level function on products and translates of basis states.

        Checks that level(u_n v) ≤ level(u) + level(v), strictly for n ≥ 0, and that
        level(𝒟v) ≤ level(v), over all basis pairs up to weight 2 and n from −3 to 3.

        """
        test_cases = [
            (heisenberg(), "Heisenberg Case"),
            (affine_sl2(), "Affine sl2 Case"),
            (neveu_schwarz("1/2"), "Neveu-Schwarz Case"),
            (odd_pair(), "Odd Pair Case"),
        ]
        for V, description in test_cases:
            with self.subTest(description=description):
                states = [V.vector({key: 1}) for row in V.graded_dimension(2) for key in V.enumerate_basis(row.weight)]
                for u in states:
                    translate = translation(u)
                    if not translate.is_zero:
                        self.assertLessEqual(filtration_level(translate), filtration_level(u))
                    for v in states:
                        bound = filtration_level(u) + filtration_level(v)
                        for n in range(-3, 4):
                            product = nth_product(u, n, v)
                            if product.is_zero:
                                continue
                            if n >= 0:
                                self.assertLess(filtration_level(product), bound, (u.format(), n, v.format()))
                            else:
                                self.assertLessEqual(filtration_level(product), bound, (u.format(), n, v.format()))

    def test_gr_element(self):
        """
        Test the GrElement class and the gr_product function.

        Checks that the class of a state keeps its top-level part and that products of classes
        drop the lower-level terms of the straightening.

        """
        V = affine_sl2()
        e, f = GrElement.of(V.parse_state("e(-1).1")), GrElement.of(V.parse_state("f(-1).1"))
        self.assertEqual(GrElement.of(V.parse_state("e(-1)f(-1).1 + h(-2).1")).format(), "[e(-1)f(-1).1]_2")
        self.assertEqual(gr_product(e, -1, f).format(), gr_product(f, -1, e).format())
        self.assertTrue(gr_product(e, 0, f).is_zero)
        self.assertTrue(GrElement.of(V.parse_state("h(-2).1"), 2).is_zero)

    def test_gr_commutative(self):
        """
        Test the check_gr_commutative function.

        Checks that the associated graded algebra of every backend is commutative and that a
        filtration ignoring the generators is caught by its surviving n-th products.

        """
        test_cases = [
            (heisenberg(), 3, "Heisenberg Case"),
            (odd_pair(), 2, "Free Fermion Case"),
            (affine_sl2(), 2, "Affine sl2 Case"),
            (neveu_schwarz("1/2"), Fraction(7, 2), "Neveu-Schwarz Case"),
        ]
        for algebra, level, description in test_cases:
            with self.subTest(description=description):
                self.assertEqual(check_gr_commutative(algebra, level), [])
        violations = check_gr_commutative(FlatFiltrationAlgebra(one_dimensional("x")), 0, 2)
        self.assertIn("gr-annihilation", {v.check for v in violations})

    def test_gr_dimensions(self):
        """
        Test the gr_dimensions and dimension_table functions.

        Checks the bi-degree pieces of the Heisenberg algebra up to weight 2.

        """
        even = Parity.EVEN
        self.assertEqual(
            gr_dimensions(heisenberg(), 2),
            {
                (Fraction(0), Fraction(0), even): 1,
                (Fraction(1), Fraction(1), even): 1,
                (Fraction(1), Fraction(2), even): 1,
                (Fraction(2), Fraction(2), even): 1,
            },
        )
        self.assertEqual(
            dimension_table(heisenberg(), 1),
            [
                {"level": "0", "weight": "0", "parity": "even", "dim": 1},
                {"level": "1", "weight": "1", "parity": "even", "dim": 1},
            ],
        )

    def test_tensor_dimensions_convolve(self):
        """
        Test the convolve_gr_dimensions function.

        Checks that the bi-degree dimensions of V ⊗ U are the convolution of those of V and U.

        """
        V, U = heisenberg(), neveu_schwarz("1/2")
        self.assertEqual(
            gr_dimensions(TensorAlgebra(V, U), 3),
            convolve_gr_dimensions(gr_dimensions(V, 3), gr_dimensions(U, 3), 3),
        )


class TestPBWCertificate(unittest.TestCase):
    def test_certificates_pass(self):
        """
        Test the pbw_certificate function on algebras with a PBW basis.

        Checks all four verdicts for Neveu-Schwarz against F(x, y) with x even of degree 2 and
        y odd of degree 3/2, and for affine sl2 against F(e, h, f).

        """
        test_cases = [
            (neveu_schwarz("1/2"), [("x", "even", 2), ("y", "odd", "3/2")], Fraction(7, 2), "Neveu-Schwarz Case"),
            (affine_sl2(), [("e", "even", 1), ("h", "even", 1), ("f", "even", 1)], 3, "Affine sl2 Case"),
            (odd_pair(), [("a", "odd", 1), ("b", "odd", 1)], 3, "Free Fermion Case"),
        ]
        for algebra, h, up_to, description in test_cases:
            with self.subTest(description=description):
                certificate = pbw_certificate(algebra, h, up_to)
                self.assertEqual(set(certificate.checks), set(CHECKS))
                self.assertTrue(certificate.passed)
                self.assertEqual(certificate.violations, [])
                self.assertEqual(certificate.to_json()["checks"], {name: "pass" for name in CHECKS})

    def test_wrong_filtration_fails(self):
        """
        Test the pbw_certificate function with a filtration that does not count generators.

        Checks that the dimensions verdict fails with a witness, also when the declared levels
        have the right counts in every bi-degree but place the wrong states in them.

        """
        test_cases = [
            (FlatFiltrationAlgebra(one_dimensional("x")), False, ("0", "1", "even"), "Flat Case"),
            (SwappedLevelAlgebra(one_dimensional("x")), True, ("x(-2).1",), "Swapped Levels Case"),
        ]
        for algebra, same_counts, witness, description in test_cases:
            with self.subTest(description=description):
                self.assertEqual(gr_dimensions(algebra, 2) == gr_dimensions(heisenberg(), 2), same_counts)
                certificate = pbw_certificate(algebra, [("x", "even", 1)], 2)
                self.assertFalse(certificate.checks["dimensions"])
                self.assertFalse(certificate.passed)
                self.assertIn(witness, {v.indices for v in certificate.violations if v.check == "pbw-dimensions"})

    def test_correspondence_preconditions(self):
        """
        Test the pbw_certificate function with a basis of 𝔥 that does not match the generators.

        Checks that a wrong count, parity or degree raises a PreconditionError.

        """
        V = neveu_schwarz(1)
        test_cases = [
            ([("x", "even", 2)], "Count Case"),
            ([("x", "even", 2), ("y", "even", "3/2")], "Parity Case"),
            ([("x", "even", 1), ("y", "odd", "3/2")], "Degree Case"),
        ]
        for h, description in test_cases:
            with self.subTest(description=description):
                with self.assertRaises(PreconditionError):
                    pbw_certificate(V, h, 2)


if __name__ == "__main__":
    unittest.main()
