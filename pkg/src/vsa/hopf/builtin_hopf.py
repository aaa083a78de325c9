"""
This module builds the standard Hopf algebras: group algebras, function algebras of groups, the
trivial Hopf algebra and Sweedler's four-dimensional Hopf algebra.
"""

from fractions import Fraction

from vsa.hopf.group_table import GroupTable, cyclic_group
from vsa.hopf.hopf_algebra import HopfSpec, zeros


def group_algebra(G: GroupTable) -> HopfSpec:
    """
    ℚ[G] with Δg = g ⊗ g, ε(g) = 1 and S(g) = g⁻¹.

    Examples
    --------
    >>> from vsa.hopf import cyclic_group, verify_hopf
    >>> H = group_algebra(cyclic_group(2))
    >>> H.basis, verify_hopf(H)
    (('1', 'g'), [])

    """
    n = G.order
    mult, comult, antipode = zeros(n, n, n), zeros(n, n, n), zeros(n, n)
    for i in range(n):
        for j in range(n):
            mult[i, j, G.multiply(i, j)] = Fraction(1)
        comult[i, i, i] = Fraction(1)
        antipode[i, G.inverse(i)] = Fraction(1)
    unit = zeros(n)
    unit[G.identity] = Fraction(1)
    counit = [Fraction(1)] * n
    return HopfSpec(f"Q[{G.name}]", G.elements, mult, unit, comult, counit, antipode, group=G)


def function_algebra(G: GroupTable) -> HopfSpec:
    """
    ℚ^G, the dual of ℚ[G]: basis δ_g with δ_g δ_h = δ_{g,h}δ_g, Δδ_g = Σ_{ab=g} δ_a ⊗ δ_b,
    ε(δ_g) = δ_{g,1} and S(δ_g) = δ_{g⁻¹}.
    """
    n = G.order
    mult, comult, antipode = zeros(n, n, n), zeros(n, n, n), zeros(n, n)
    for i in range(n):
        mult[i, i, i] = Fraction(1)
        antipode[i, G.inverse(i)] = Fraction(1)
        for j in range(n):
            comult[G.multiply(i, j), i, j] = Fraction(1)
    unit = [Fraction(1)] * n
    counit = zeros(n)
    counit[G.identity] = Fraction(1)
    return HopfSpec(f"Fun({G.name})", [f"d[{label}]" for label in G.elements], mult, unit, comult, counit, antipode)


def trivial_hopf() -> HopfSpec:
    """The one-dimensional Hopf algebra ℚ = ℚ[{1}]."""
    H = group_algebra(cyclic_group(1))
    H.name = "trivial"
    return H


def sweedler_hopf() -> HopfSpec:
    """
    Sweedler's Hopf algebra, basis 1, g, x, gx with g² = 1, x² = 0, xg = −gx,
    Δg = g ⊗ g, Δx = x ⊗ 1 + g ⊗ x, ε(g) = 1, ε(x) = 0, S(g) = g, S(x) = −gx.

    It is neither commutative nor cocommutative.
    """
    one, g, x, gx = range(4)
    mult = zeros(4, 4, 4)
    for a in range(4):
        mult[one, a, a] = Fraction(1)
        mult[a, one, a] = Fraction(1)
    mult[g, g, one] = Fraction(1)
    mult[g, x, gx] = Fraction(1)
    mult[g, gx, x] = Fraction(1)
    mult[x, g, gx] = Fraction(-1)
    mult[gx, g, x] = Fraction(-1)
    comult = zeros(4, 4, 4)
    comult[one, one, one] = Fraction(1)
    comult[g, g, g] = Fraction(1)
    comult[x, x, one] = Fraction(1)
    comult[x, g, x] = Fraction(1)
    comult[gx, gx, g] = Fraction(1)
    comult[gx, one, gx] = Fraction(1)
    antipode = zeros(4, 4)
    antipode[one, one] = Fraction(1)
    antipode[g, g] = Fraction(1)
    antipode[x, gx] = Fraction(-1)
    antipode[gx, x] = Fraction(1)
    unit = [Fraction(1), 0, 0, 0]
    counit = [Fraction(1), Fraction(1), 0, 0]
    return HopfSpec("sweedler", ["1", "g", "x", "gx"], mult, unit, comult, counit, antipode)
