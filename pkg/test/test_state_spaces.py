"""
This test suite includes unit tests for the state spaces: graded dimensions of every backend
against independent product-formula oracles, PBW straightening, state expressions and the
StateVector arithmetic.
"""

import unittest
from fractions import Fraction

from vsa.errors import AmbientMismatchError, LatticeError, StructureError
from vsa.scalars_linear import Parity
from vsa.state_spaces import (
    FreeDifferentialAlgebra,
    TensorAlgebra,
    affine_osp12,
    affine_sl2,
    free_differential,
    heisenberg,
    neveu_schwarz,
    odd_pair,
    tensor_state,
)


def graded_series(bosons, fermions, steps):
    """
    Expands Π_b (1 − q^b)^{-1} · Π_f (1 + s·q^f) up to q^steps and returns [(even, odd), ...],
    where s marks odd parity.
    """
    even, odd = [1] + [0] * steps, [0] * (steps + 1)
    for b in bosons:
        for i in range(b, steps + 1):
            even[i] += even[i - b]
            odd[i] += odd[i - b]
    for f in fermions:
        for i in range(steps, f - 1, -1):
            even[i], odd[i] = even[i] + odd[i - f], odd[i] + even[i - f]
    return list(zip(even, odd))


def observed(algebra, up_to):
    return [(row.even, row.odd) for row in algebra.graded_dimension(up_to)]


class TestGradedDimensions(unittest.TestCase):
    def test_heisenberg_partition_numbers(self):
        """
        Test the graded_dimension method on the Heisenberg algebra.

        Checks that the dimensions up to weight 8 are the partition numbers.

        """
        dims = [row.dim for row in heisenberg().graded_dimension(8)]
        self.assertEqual(dims, [1, 1, 2, 3, 5, 7, 11, 15, 22])

    def test_against_product_formulas(self):
        """
        Test the graded_dimension method of every backend against its character.

        Checks even and odd dimensions against the expansion of the product formula of each
        algebra, computed by plain integer series multiplication.

        """
        N = 6
        test_cases = [
            (heisenberg(), 6, 1, list(range(1, N + 1)), [], "Heisenberg Case"),
            (odd_pair(), 6, 1, [], 2 * list(range(1, N + 1)), "Free Fermion Case"),
            (affine_sl2(), 4, 1, 3 * list(range(1, N + 1)), [], "Affine sl2 Case"),
            (affine_osp12(), 3, 1, 3 * list(range(1, N + 1)), 2 * list(range(1, N + 1)), "Affine osp(1|2) Case"),
            (free_differential(1, 1), 5, 1, list(range(1, N + 1)), list(range(1, N + 1)), "freediff-(1|1) Case"),
            (
                neveu_schwarz("1/2"),
                Fraction(9, 2),
                2,
                list(range(4, 10, 2)),
                list(range(3, 10, 2)),
                "Neveu-Schwarz Case",
            ),
        ]
        for algebra, up_to, T, bosons, fermions, description in test_cases:
            with self.subTest(description=description):
                steps = int(up_to * T)
                self.assertEqual(observed(algebra, up_to), graded_series(bosons, fermions, steps))

    def test_neveu_schwarz_dimensions(self):
        """
        Test the graded_dimension method on the Neveu-Schwarz algebra.

        Checks the tabulated dimensions at weights 0, 3/2, 2, 5/2, 3, 7/2 and 4, and that the
        odd states sit exactly at half-integer weights.

        """
        rows = {row.weight: row for row in neveu_schwarz("1/2").graded_dimension(4)}
        expected = {"0": 1, "3/2": 1, "2": 1, "5/2": 1, "3": 1, "7/2": 2, "4": 3}
        for weight, dim in expected.items():
            with self.subTest(weight=weight):
                self.assertEqual(rows[Fraction(weight)].dim, dim)
        for weight, row in rows.items():
            self.assertEqual(row.odd, row.dim if weight.denominator == 2 else 0)
        self.assertEqual(rows[Fraction(1, 2)].dim, 0)

    def test_tensor_dimensions_convolve(self):
        """
        Test the graded_dimension method of the TensorAlgebra class.

        Checks that dim (V ⊗ U)_n = Σ_{i+j=n} dim V_i · dim U_j with parities adding.

        """
        V, U = heisenberg(), neveu_schwarz("1/2")
        VU = TensorAlgebra(V, U)
        left = {row.weight: (row.even, row.odd) for row in V.graded_dimension(3)}
        right = {row.weight: (row.even, row.odd) for row in U.graded_dimension(3)}
        for row in VU.graded_dimension(3):
            even = sum(a[0] * b[0] + a[1] * b[1] for i, a in left.items() for j, b in right.items() if i + j == row.weight)
            odd = sum(a[0] * b[1] + a[1] * b[0] for i, a in left.items() for j, b in right.items() if i + j == row.weight)
            with self.subTest(weight=row.weight):
                self.assertEqual((row.even, row.odd), (even, odd))

    def test_weight_lattice(self):
        """
        Test the enumerate_basis method with weights off the lattice.

        Checks that half-integer weights are rejected for T = 1 and negative weights everywhere.

        """
        with self.assertRaises(LatticeError):
            heisenberg().enumerate_basis("1/2")
        with self.assertRaises(LatticeError):
            neveu_schwarz(1).enumerate_basis(-1)
        self.assertEqual(neveu_schwarz(1).enumerate_basis("1/2"), [])

    def test_graded_free_differential_algebra(self):
        """
        Test the FreeDifferentialAlgebra class with generators of degree 2 and 3/2.

        Checks that the lattice denominator is the lcm of the degree denominators and that the
        dimensions agree with the Neveu-Schwarz algebra.

        """
        F = FreeDifferentialAlgebra([("x", "even", 2), ("y", "odd", "3/2")])
        self.assertEqual(F.T, 2)
        self.assertEqual(observed(F, 4), observed(neveu_schwarz(1), 4))


class TestStraightening(unittest.TestCase):
    def test_generator_modes(self):
        """
        Test the apply_generator_mode method on every backend.

        Checks brackets and central terms evaluated on small states.

        """
        test_cases = [
            (heisenberg(2), "x", 1, "x(-1).1", "2*1", "Heisenberg Level Case"),
            (affine_sl2(), "e", 1, "f(-1).1", "1", "sl2 Central Case"),
            (affine_sl2(), "e", 0, "f(-1).1", "h(-1).1", "sl2 Bracket Case"),
            (affine_sl2(), "h", 0, "e(-1).1", "2*e(-1).1", "sl2 Weight Case"),
            (odd_pair(), "psi1", 1, "psi2(-1).1", "1", "Odd Pair Case"),
            (odd_pair(), "psi1", -1, "psi1(-1).1", "0", "Odd Square Case"),
            (neveu_schwarz("1/2"), "L", 2, "L(-2).1", "1/4*1", "Virasoro Central Case"),
            (neveu_schwarz("1/2"), "G", "3/2", "G(-3/2).1", "1/3*1", "Odd Central Case"),
            (neveu_schwarz(1), "L", 0, "G(-3/2).1", "3/2*G(-3/2).1", "Conformal Weight Case"),
            (free_differential(0, 2), "f2", -1, "f1(-1).1", "-f1(-1)f2(-1).1", "Koszul Sign Case"),
        ]
        for algebra, generator, n, state, expected, description in test_cases:
            with self.subTest(description=description):
                v = algebra.parse_state(state)
                self.assertEqual(algebra.apply_generator_mode(generator, n, v).format(), expected)

    def test_off_lattice_mode(self):
        """
        Test the apply_generator_mode method with an index off the generator's lattice.

        Checks that G(1) is rejected, because G has modes in 1/2 + ℤ.

        """
        V = neveu_schwarz(1)
        with self.assertRaises(LatticeError):
            V.apply_generator_mode("G", 1, V.vacuum())

    def test_translation(self):
        """
        Test the translation method.

        Checks 𝒟 on generator states and on a product state of the free differential algebra.

        """
        test_cases = [
            (neveu_schwarz(1), "L(-2).1", "L(-3).1", "Virasoro Case"),
            (neveu_schwarz(1), "G(-3/2).1", "G(-5/2).1", "Odd Generator Case"),
            (free_differential(1, 0), "e(-2).1", "2*e(-3).1", "Derivative Case"),
            (free_differential(1, 0), "e(-1)e(-1).1", "2*e(-2)e(-1).1", "Leibniz Case"),
            (heisenberg(), "1", "0", "Vacuum Case"),
        ]
        for algebra, state, expected, description in test_cases:
            with self.subTest(description=description):
                self.assertEqual(algebra.translation(algebra.parse_state(state)).format(), expected)


class TestStateVector(unittest.TestCase):
    def test_parse_and_format(self):
        """
        Test the parse_state and format methods.

        Checks coefficients, signs and reordering of non-canonical input.

        """
        V = heisenberg()
        test_cases = [
            ("x(-1)x(-2).1", "x(-2)x(-1).1", "Reordering Case"),
            ("1/2*x(-2).1 - 1", "-1 + 1/2*x(-2).1", "Coefficient Case"),
            ("0", "0", "Zero Case"),
            ("3", "3*1", "Scalar Case"),
            ("x(-1).1 - x(-1).1", "0", "Cancellation Case"),
        ]
        for text, expected, description in test_cases:
            with self.subTest(description=description):
                self.assertEqual(V.parse_state(text).format(), expected)

    def test_parse_errors(self):
        """
        Test the parse_state method with malformed expressions.

        Checks that grammar errors and unknown generators raise a StructureError.

        """
        V = heisenberg()
        for text in ("x(-1", "y(-1).1", "x(-1)", "x(-1).1 + + 1"):
            with self.subTest(text=text):
                with self.assertRaises(StructureError):
                    V.parse_state(text)

    def test_arithmetic(self):
        """
        Test the arithmetic of the StateVector class.

        Checks linear combinations, homogeneity data and that states of different algebras
        cannot be combined.

        """
        V = neveu_schwarz(1)
        omega, gamma = V.parse_state("L(-2).1"), V.parse_state("G(-3/2).1")
        mixed = omega * 2 + gamma
        self.assertEqual(mixed - gamma, 2 * omega)
        self.assertEqual(omega.weight, 2)
        self.assertIs(gamma.parity, Parity.ODD)
        self.assertIsNone(mixed.weight)
        self.assertIsNone(mixed.parity)
        self.assertEqual(len(mixed.homogeneous_components()), 2)
        self.assertTrue((omega - omega).is_zero)
        self.assertEqual(mixed.to_json(), {"G(-3/2).1": "1", "L(-2).1": "2"})
        with self.assertRaises(AmbientMismatchError):
            omega + heisenberg().vacuum()
        with self.assertRaises(AmbientMismatchError):
            V.nth_product(omega, 1, heisenberg().vacuum())

    def test_algebra_identity(self):
        """
        Test the equality of VertexAlgebra objects.

        Checks that algebras compare by presentation, so that states of equal algebras combine.

        """
        self.assertEqual(heisenberg(1), heisenberg("1"))
        self.assertNotEqual(heisenberg(1), heisenberg(2))
        self.assertEqual(heisenberg().parse_state("x(-1).1") + heisenberg().parse_state("x(-1).1"),
                         heisenberg().parse_state("2*x(-1).1"))
        self.assertEqual(free_differential(1, 1).name, "freediff-(1|1)")

    def test_generator_lookup(self):
        """
        Test the generator_index and generator_state methods.

        Checks lookup by id and by index and that unknown generators raise a StructureError.

        """
        V = neveu_schwarz(1)
        self.assertEqual(V.generator_index("G"), 1)
        self.assertEqual(V.generator_state("G").format(), "G(-3/2).1")
        for generator in ("T", 2, -1):
            with self.subTest(generator=generator):
                with self.assertRaises(StructureError):
                    V.generator_index(generator)


class TestTensorAlgebra(unittest.TestCase):
    def test_renamed_generators(self):
        """
        Test the initialization of the TensorAlgebra class with clashing generator ids.

        Checks that the right factor's ids are primed and usable in state expressions.

        """
        VV = TensorAlgebra(heisenberg(), heisenberg())
        self.assertEqual([g.id for g in VV.generators], ["x", "x'"])
        state = VV.parse_state("x'(-1)x(-1).1")
        self.assertEqual(state.format(), "x(-1)x'(-1).1")

    def test_tensor_state_and_products(self):
        """
        Test the tensor_state function and the n-th products of the TensorAlgebra class.

        Checks (a ⊗ 1)_n (b ⊗ 1) = (a_n b) ⊗ 1 and the sign of moving odd factors past each other.

        """
        V, F = heisenberg(), free_differential(0, 1)
        VF = TensorAlgebra(V, F)
        x = tensor_state(V.parse_state("x(-1).1"), F.vacuum(), VF)
        self.assertEqual(VF.nth_product(x, 1, x), VF.vacuum())
        FF = TensorAlgebra(F, F)
        left = tensor_state(F.vacuum(), F.parse_state("f(-1).1"), FF)
        right = tensor_state(F.parse_state("f(-1).1"), F.vacuum(), FF)
        self.assertEqual(FF.nth_product(left, -1, right), -1 * FF.parse_state("f(-1)f'(-1).1"))
        with self.assertRaises(AmbientMismatchError):
            tensor_state(F.vacuum(), F.vacuum(), VF)


if __name__ == "__main__":
    unittest.main()
