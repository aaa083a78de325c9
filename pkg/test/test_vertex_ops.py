"""
This test suite includes unit tests for the vertex operations and the axiom checkers: the
Borcherds identity, skew symmetry, translation and the vacuum axioms on every backend, and on
deliberately broken backends which the checkers must reject.
"""

import os
import time
import unittest
from fractions import Fraction

from vsa.errors import AmbientMismatchError
from vsa.lie_superalgebra import LieSuperalgebraSpec, sl2
from vsa.state_spaces import (
    AffineAlgebra,
    FreeDifferentialAlgebra,
    NeveuSchwarzAlgebra,
    TensorAlgebra,
    affine_osp12,
    affine_sl2,
    free_differential,
    heisenberg,
    neveu_schwarz,
    odd_pair,
    superspace,
)
from vsa.vertex_ops import (
    check_borcherds,
    check_skew_symmetry,
    check_translation,
    check_vacuum,
    mode_range,
    nth_product,
    sweep_borcherds,
    sweep_skew_symmetry,
    sweep_translation,
    vertex_operator,
)

FULL_ACCEPTANCE = os.environ.get("VSA_FULL_ACCEPTANCE") == "1"


class FlippedOddCentralAlgebra(NeveuSchwarzAlgebra):
    """Neveu-Schwarz modes with the sign of the central term of [G(r), G(s)] reversed."""

    @property
    def signature(self):
        return ("ns-flipped", self.central_charge)

    def bracket(self, x, y):
        ops, central = super().bracket(x, y)
        if x[0] == y[0] == 1:
            central = -central
        return ops, central


class SignlessFreeDifferentialAlgebra(FreeDifferentialAlgebra):
    """Free differential algebra that forgets the Koszul sign when reordering odd modes."""

    @property
    def signature(self):
        return ("freediff-signless", self.generators)

    def sort_modes(self, modes):
        ordered, _ = super().sort_modes(modes)
        return ordered, (0 if ordered is None else 1)


def flipped_sl2():
    """Affine sl2 built on [e, f] = −h, which breaks invariance of the trace form."""
    payload = sl2().to_json()
    payload["brackets"]["0,2"] = [{"k": 1, "c": "-1"}]
    return AffineAlgebra(LieSuperalgebraSpec.from_json(payload), 1)


def reduced_algebras():
    return [
        (heisenberg(), "Heisenberg Case"),
        (odd_pair(), "Free Fermion Case"),
        (neveu_schwarz("1/2"), "Neveu-Schwarz Case"),
        (free_differential(1, 1), "freediff-(1|1) Case"),
        (TensorAlgebra(heisenberg(), free_differential(0, 1)), "Tensor Case"),
    ]


class TestVertexOperations(unittest.TestCase):
    def test_mode_range(self):
        """
        Test the mode_range function.

        Checks the indices s with 0 ≤ wt u + wt v − s − 1 ≤ cutoff for integral and half-integral
        weights.

        """
        test_cases = [
            (Fraction(1), Fraction(1), Fraction(2), [-1, 0, 1], "Integral Case"),
            (Fraction(3, 2), Fraction(3, 2), Fraction(2), [0, 1, 2], "Half-Integral Case"),
            (Fraction(0), Fraction(0), Fraction(0), [-1], "Vacuum Case"),
            (Fraction(2), Fraction(3, 2), Fraction(1, 2), [2], "Narrow Case"),
        ]
        for left, right, cutoff, expected, description in test_cases:
            with self.subTest(description=description):
                self.assertEqual(list(mode_range(left, right, cutoff)), expected)

    def test_vertex_operator(self):
        """
        Test the vertex_operator function.

        Checks that Y(x, z)x truncated at weight 2 keeps the coefficients x_{−1}x and x_1 x = 1
        and records the inspected window.

        """
        V = heisenberg()
        x = V.parse_state("x(-1).1")
        field = vertex_operator(x, x, 2)
        self.assertEqual(field.indices, [-1, 1])
        self.assertEqual(field.coefficient(1), V.vacuum())
        self.assertIsNone(field.coefficient(0))
        self.assertEqual(field.index_window, (-1, 1))
        self.assertEqual(
            field.to_json(),
            {
                "weight_cutoff": "2",
                "index_window": [-1, 1],
                "coefficients": {"-1": {"x(-1)x(-1).1": "1"}, "1": {"1": "1"}},
            },
        )

    def test_products_are_bilinear(self):
        """
        Test the nth_product function on linear combinations.

        Checks (u + 2u′)_n v = u_n v + 2u′_n v in the Neveu-Schwarz algebra.

        """
        V = neveu_schwarz("1/2")
        omega, gamma = V.parse_state("L(-2).1"), V.parse_state("G(-3/2).1")
        for n in range(-2, 4):
            with self.subTest(n=n):
                self.assertEqual(
                    nth_product(omega + 2 * gamma, n, gamma),
                    nth_product(omega, n, gamma) + 2 * nth_product(gamma, n, gamma),
                )

    def test_products_do_not_depend_on_the_construction(self):
        """
        Test the nth_product function on states reached by different routes.

        Checks that a state parsed in canonical order, parsed in the opposite order with its
        commutator term, or produced as a_{−1}b gives identical products, on fresh algebras whose
        product caches are filled in different orders.

        """
        test_cases = [
            (affine_sl2, "e(-1)f(-1).1", "f(-1)e(-1).1 + h(-2).1", ("e(-1).1", "f(-1).1"), "e(-1)h(-1).1 + f(-2).1", "Affine sl2 Case"),
            (heisenberg, "x(-2)x(-1).1", "x(-1)x(-2).1", ("x(-2).1", "x(-1).1"), "x(-1)x(-1).1", "Heisenberg Case"),
            (lambda: neveu_schwarz("1/2"), "L(-2)G(-3/2).1", None, ("L(-2).1", "G(-3/2).1"), "G(-3/2).1", "Neveu-Schwarz Case"),
        ]
        for build, canonical, reordered, factors, other, description in test_cases:
            with self.subTest(description=description):
                first, second, third = build(), build(), build()
                u = first.parse_state(canonical)
                routes = [nth_product(third.parse_state(factors[0]), -1, third.parse_state(factors[1]))]
                if reordered is not None:
                    routes.append(second.parse_state(reordered))
                indices = range(-2, 4)
                expected = [nth_product(u, n, first.parse_state(other)).to_json() for n in indices]
                for w in routes:
                    self.assertEqual(w.to_json(), u.to_json())
                    V = w.algebra
                    found = {n: nth_product(w, n, V.parse_state(other)).to_json() for n in reversed(indices)}
                    self.assertEqual([found[n] for n in indices], expected)

    def test_ambient_mismatch(self):
        """
        Test the checkers with states of different algebras.

        Checks that an AmbientMismatchError is raised.

        """
        V, U = heisenberg(), odd_pair()
        with self.assertRaises(AmbientMismatchError):
            check_borcherds(V.vacuum(), U.vacuum(), V.vacuum(), [0], [0], [0])
        with self.assertRaises(AmbientMismatchError):
            vertex_operator(V.vacuum(), U.vacuum(), 1)


class TestAxioms(unittest.TestCase):
    def test_borcherds_identity(self):
        """
        Test the sweep_borcherds function on every backend at low weight.

        Checks that no basis triple violates the Borcherds identity in a small index window.

        """
        for algebra, description in reduced_algebras():
            with self.subTest(description=description):
                self.assertEqual(sweep_borcherds(algebra, 1, radius=2), [])
        self.assertEqual(sweep_borcherds(neveu_schwarz("1/2"), 2, radius=2), [])

    def test_skew_symmetry(self):
        """
        Test the sweep_skew_symmetry function on every backend.

        Checks that Y(u, z)v = (−1)^{|u||v|} e^{z𝒟} Y(v, −z)u on all pairs of weight ≤ 2.

        """
        for algebra, description in reduced_algebras():
            with self.subTest(description=description):
                self.assertEqual(sweep_skew_symmetry(algebra, 2), [])

    def test_translation(self):
        """
        Test the sweep_translation function on every backend.

        Checks that (𝒟v)_k w = −k·v_{k−1}w on all states of weight ≤ 2.

        """
        for algebra, description in reduced_algebras():
            with self.subTest(description=description):
                self.assertEqual(sweep_translation(algebra, 2), [])

    def test_vacuum(self):
        """
        Test the check_vacuum function on every backend.

        Checks the vacuum identity, creation and 𝒟u = u_{−2}1 up to weight 3.

        """
        for algebra, description in reduced_algebras() + [(affine_sl2(), "Affine sl2 Case")]:
            with self.subTest(description=description):
                self.assertEqual(check_vacuum(algebra, 3), [])

    def test_commutator_formula(self):
        """
        Test the check_borcherds function on affine sl2 and osp(1|2) generators.

        Checks the commutator formula [u_0, v_1] = (u_0 v)_1 and the iterate formula on
        weight-one states.

        """
        for algebra in (affine_sl2(), affine_osp12()):
            states = [algebra.generator_state(g.id) for g in algebra.generators]
            for u in states:
                for v in states:
                    with self.subTest(algebra=algebra.name, u=u.format(), v=v.format()):
                        self.assertEqual(check_borcherds(u, v, states[1], [0], [0, -1], [1, 0]), [])

    def test_flipped_bracket_is_rejected(self):
        """
        Test the check_borcherds function on affine sl2 with [e, f] = −h.

        Checks that (e_0 f)_1 h ≠ e_0 f_1 h − f_1 e_0 h is reported as a Borcherds violation.

        """
        V = flipped_sl2()
        e, f, h = (V.parse_state(f"{g}(-1).1") for g in ("e", "f", "h"))
        violations = check_borcherds(e, f, h, [0], [0], [1])
        self.assertEqual(len(violations), 1)
        self.assertEqual(violations[0].check, "borcherds")
        self.assertEqual(violations[0].indices[3:], (0, 0, 1))
        self.assertNotEqual(sweep_borcherds(V, 1, radius=1), [])

    def test_flipped_odd_central_term_is_rejected(self):
        """
        Test the check_borcherds function on a Neveu-Schwarz algebra with the central term of
        [G(r), G(s)] negated.

        Checks that the Borcherds identity fails for ω, γ, γ at (a, b, c) = (0, 3, 0) and holds in
        the correct algebra.

        """
        for algebra, broken in ((neveu_schwarz("1/2"), False), (FlippedOddCentralAlgebra("1/2"), True)):
            omega, gamma = algebra.parse_state("L(-2).1"), algebra.parse_state("G(-3/2).1")
            with self.subTest(broken=broken):
                violations = check_borcherds(omega, gamma, gamma, [0], [3], [0])
                self.assertEqual(bool(violations), broken)

    def test_missing_koszul_sign_is_rejected(self):
        """
        Test the check_skew_symmetry function on a free differential algebra without Koszul signs.

        Checks that two odd generators which commute instead of anticommuting violate skew
        symmetry.

        """
        V = SignlessFreeDifferentialAlgebra(superspace(0, 2))
        f1, f2 = V.parse_state("f1(-1).1"), V.parse_state("f2(-1).1")
        violations = check_skew_symmetry(f1, f2, 2)
        self.assertNotEqual(violations, [])
        self.assertEqual({v.check for v in violations}, {"skew-symmetry"})
        self.assertEqual(check_skew_symmetry(*(free_differential(0, 2).parse_state(s) for s in ("f1(-1).1", "f2(-1).1")), 2), [])

    def test_translation_witness(self):
        """
        Test the check_translation function.

        Checks the generator states of the Neveu-Schwarz algebra up to weight 4.

        """
        V = neveu_schwarz(1)
        for state in ("L(-2).1", "G(-3/2).1", "L(-2).1 + G(-3/2).1"):
            with self.subTest(state=state):
                self.assertEqual(check_translation(V.parse_state(state), 4), [])

    def test_sampled_sweep_is_deterministic(self):
        """
        Test the sweep_borcherds function with sampling.

        Checks that the same seed draws the same triples, so the reported violations coincide.

        """
        V = flipped_sl2()
        first = sweep_borcherds(V, 1, radius=1, sample=24, seed=3)
        second = sweep_borcherds(V, 1, radius=1, sample=24, seed=3)
        self.assertEqual(first, second)

    def test_performance(self):
        """
        Test the performance of the Borcherds sweep on the Heisenberg algebra.

        Checks that all triples of weight ≤ 2 in the window [−2, 2] are checked within 60 seconds.

        """
        start = time.time()
        self.assertEqual(sweep_borcherds(heisenberg(), 2, radius=2), [])
        self.assertLessEqual(time.time() - start, 60)


@unittest.skipUnless(FULL_ACCEPTANCE, "set VSA_FULL_ACCEPTANCE=1 for the weight-3 sweeps")
class TestFullAcceptance(unittest.TestCase):
    def test_backends_up_to_weight_three(self):
        """
        Test every backend on all basis triples of weight ≤ 3 with indices in [−4, 4].

        Checks that the Borcherds identity, skew symmetry and translation hold throughout.

        """
        algebras = reduced_algebras() + [
            (affine_sl2(), "Affine sl2 Case"),
            (affine_osp12(), "Affine osp(1|2) Case"),
        ]
        for algebra, description in algebras:
            with self.subTest(description=description):
                self.assertEqual(sweep_borcherds(algebra, 3, radius=4), [])
                self.assertEqual(sweep_skew_symmetry(algebra, 3), [])
                self.assertEqual(sweep_translation(algebra, 3), [])


if __name__ == "__main__":
    unittest.main()
