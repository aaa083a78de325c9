"""
This test suite includes unit tests for the truncated Y(z)-injectivity certificates and the
subalgebra closure of the injectivity package.
"""

import time
import unittest
from fractions import Fraction

from vsa.errors import ClosureError, LatticeError
from vsa.injectivity import (
    INJECTIVE,
    UNDETERMINED,
    build_gr_yz_matrix,
    build_yz_matrix,
    certify,
    certify_subalgebra,
    subalgebra_closure,
)
from vsa.scalars_linear import Parity, rank
from vsa.state_spaces import free_differential, heisenberg, heisenberg_double_algebra, neveu_schwarz


class TestYZMatrix(unittest.TestCase):
    def test_matrix_shape_and_rank(self):
        """
        Test the build_yz_matrix and build_gr_yz_matrix functions.

        Checks the column count |V_{≤N}|² and the rank of the narrowest window, where the
        columns e ⊗ f and f ⊗ e of the free differential algebra coincide and f ⊗ f vanishes.

        """
        test_cases = [
            (heisenberg(), 1, 4, 4, "Heisenberg Case"),
            (free_differential(1, 1), 1, 9, 7, "freediff-(1|1) Case"),
        ]
        for algebra, N, cols, expected_rank, description in test_cases:
            with self.subTest(description=description):
                matrix = build_yz_matrix(algebra, N)
                self.assertEqual((matrix.cols, rank(matrix)), (cols, expected_rank))
        graded = build_gr_yz_matrix(heisenberg(), 1)
        self.assertEqual((graded.cols, rank(graded)), (4, 4))

    def test_cutoff_off_lattice(self):
        """
        Test the certify function with a cutoff off the weight lattice.

        Checks that a LatticeError is raised.

        """
        with self.assertRaises(LatticeError):
            certify(heisenberg(), "1/2")


class TestCertify(unittest.TestCase):
    def test_injective(self):
        """
        Test the certify function on algebras whose Y(z) is injective.

        Checks the status, that the rank equals the domain dimension and the first window that
        reaches full rank.

        """
        test_cases = [
            (heisenberg(), 1, 4, 0, "Heisenberg Case"),
            (free_differential(1, 1), 1, 9, 1, "freediff-(1|1) Case"),
            (neveu_schwarz("1/2"), Fraction(5, 2), 16, None, "Neveu-Schwarz Case"),
        ]
        for algebra, N, domain_dim, window_extra, description in test_cases:
            with self.subTest(description=description):
                certificate = certify(algebra, N)
                self.assertEqual(certificate.status, INJECTIVE)
                self.assertTrue(certificate.injective)
                self.assertEqual(certificate.rank, certificate.domain_dim)
                self.assertEqual(certificate.domain_dim, domain_dim)
                self.assertEqual(certificate.kernel_candidates, [])
                if window_extra is not None:
                    self.assertEqual(certificate.window_extra, window_extra)

    def test_undetermined(self):
        """
        Test the certify function with a window too narrow to separate the columns.

        Checks that the result is Undetermined, never a claim of non-injectivity, and that the
        kernel candidates name the pairs e ⊗ f, f ⊗ e and f ⊗ f.

        """
        certificate = certify(free_differential(1, 1), 1, max_window=0)
        self.assertEqual(certificate.status, UNDETERMINED)
        self.assertEqual((certificate.rank, certificate.domain_dim), (7, 9))
        self.assertEqual(len(certificate.kernel_candidates), 2)
        labels = {label for candidate in certificate.kernel_candidates for label in candidate}
        self.assertLessEqual(labels, {"e(-1).1 ⊗ f(-1).1", "f(-1).1 ⊗ e(-1).1", "f(-1).1 ⊗ f(-1).1"})
        self.assertIn("f(-1).1 ⊗ f(-1).1", labels)
        payload = certificate.to_json()
        self.assertEqual(payload["status"], "Undetermined")
        self.assertEqual(len(payload["kernel_candidates"]), 2)

    def test_performance(self):
        """
        Test the performance of the certify function.

        Checks that the Neveu-Schwarz certificate at N = 5/2 is produced within 30 seconds.

        """
        start = time.time()
        certify(neveu_schwarz("1/2"), "5/2")
        self.assertLessEqual(time.time() - start, 30)


class TestSubalgebras(unittest.TestCase):
    def test_closure(self):
        """
        Test the subalgebra_closure function.

        Checks that x(−1)1 generates all of the Heisenberg algebra up to weight 2 and that the
        vacuum alone generates only itself.

        """
        V = heisenberg()
        closure = subalgebra_closure([V.parse_state("x(-1).1")], 2)
        self.assertEqual(len(closure), 4)
        self.assertEqual([state.weight for state in closure], [0, 1, 2, 2])
        self.assertEqual(subalgebra_closure([V.vacuum()], 3), [V.vacuum()])

    def test_closure_cap(self):
        """
        Test the subalgebra_closure function with too few rounds.

        Checks that a ClosureError is raised when the closure has not stabilized.

        """
        V = heisenberg()
        with self.assertRaises(ClosureError):
            subalgebra_closure([V.parse_state("x(-1).1")], 2, iteration_cap=1)

    def test_certify_subalgebra(self):
        """
        Test the certify_subalgebra function.

        Checks that the copy of 𝔥 in the Heisenberg double generates a commutative subalgebra
        with injective Y(z), while x generates the non-commutative Heisenberg algebra.

        """
        double = heisenberg_double_algebra([("h", Parity.EVEN)])
        certificate = certify_subalgebra([double.parse_state("h(-1).1")], 2)
        self.assertEqual((certificate.status, certificate.commutative), (INJECTIVE, True))
        self.assertTrue(certificate.to_json()["commutative"])
        V = heisenberg()
        certificate = certify_subalgebra([V.parse_state("x(-1).1")], 1)
        self.assertEqual((certificate.status, certificate.commutative), (INJECTIVE, False))


if __name__ == "__main__":
    unittest.main()
