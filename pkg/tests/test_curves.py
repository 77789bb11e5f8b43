"""Tests de invariantes de gérmenes de curvas planas."""

from fractions import Fraction
from math import gcd

import pytest

from src.algebra.gring import GClass
from src.algebra.series import TruncSeries
from src.core.errors import (
    CoincidentBranches,
    DegenerateBranch,
    EquationDoesNotVanish,
    InvalidInput,
    NoRootInField,
    PrecisionExhausted,
)
from src.singularities.curves import (
    POINT_AT_INFINITY,
    Branch,
    CurveGerm,
    blow_up,
    corpus,
    degeneracy_witness,
    delta,
    germ_invariants,
    germ_is_coincident,
    intersection,
    is_degenerate,
    milnor,
    mult_sequence,
    normalize,
    order_v,
    p_direct,
    p_invariant,
    torus_knot,
)
from src.singularities.plane_poly import PlanePoly

KNOWN = {
    "smooth": (1, 0, 0, 0),
    "parabola": (1, 0, 0, 0),
    "cusp": (2, 1, 2, 3),
    "node": (2, 1, 1, 2),
    "three_lines": (3, 3, 4, 6),
    "tacnode": (2, 2, 3, 4),
    "a5": (2, 3, 5, 6),
}


def approx(x, y, trunc=10):
    """Rama no exacta a partir de listas de coeficientes."""
    return Branch(TruncSeries.from_list(x, trunc), TruncSeries.from_list(y, trunc))


class TestCorpus:
    @pytest.mark.parametrize("name", sorted(KNOWN))
    def test_known_invariants(self, name):
        entry = corpus()[name]
        v, d, mu, p = KNOWN[name]
        assert order_v(entry.germ) == v
        assert delta(entry.germ) == d
        assert milnor(entry.germ) == mu
        assert p_invariant(entry.germ) == p

    @pytest.mark.parametrize("name", sorted(KNOWN))
    def test_p_from_equation(self, name):
        entry = corpus()[name]
        assert p_direct(entry.germ, entry.equation) == KNOWN[name][3]

    @pytest.mark.parametrize(
        "p,q",
        [(p, q) for p in range(2, 6) for q in range(p + 1, 8) if gcd(p, q) == 1],
    )
    def test_torus_knots(self, p, q):
        entry = torus_knot(p, q)
        assert delta(entry.germ) == (p - 1) * (q - 1) // 2
        assert milnor(entry.germ) == (p - 1) * (q - 1)
        assert p_invariant(entry.germ) == (p - 1) * q
        assert p_direct(entry.germ, entry.equation) == (p - 1) * q

    def test_torus_knot_requires_coprime(self):
        with pytest.raises(InvalidInput):
            torus_knot(2, 4)

    def test_germ_invariants_of_cusp(self):
        inv = germ_invariants(corpus()["cusp"].germ)
        assert (inv.v, inv.k, inv.delta, inv.milnor, inv.p) == (2, 1, 1, 2, 3)
        assert inv.correspondence == GClass.monomial(-3)
        assert inv.abstract_weight == inv.correspondence
        assert inv.arc_weight == GClass.monomial(-1)


class TestBlowUp:
    def test_cusp_becomes_smooth(self, cusp_branch):
        up = blow_up(cusp_branch)
        assert up.multiplicity == 2
        assert up.point == 0
        assert order_v(up.branch) == 1

    def test_second_chart(self):
        up = blow_up(Branch.from_polynomials({3: 1}, {2: 1}))
        assert up.point == POINT_AT_INFINITY
        assert up.branch.orders() == (1, 2)

    def test_tangent_direction(self):
        up = blow_up(Branch.from_polynomials({1: 1}, {1: 3, 2: 1}))
        assert up.point == Fraction(3)

    def test_multiplicity_sequences(self):
        assert mult_sequence(Branch.from_polynomials({2: 1}, {3: 1})) == [2]
        assert mult_sequence(Branch.from_polynomials({3: 1}, {5: 1})) == [3, 2]
        assert mult_sequence(Branch.from_polynomials({2: 1}, {7: 1})) == [2, 2, 2]

    def test_vanishing_branch(self):
        b = Branch(TruncSeries.zero(trunc=4), TruncSeries.zero(trunc=4))
        with pytest.raises(PrecisionExhausted):
            order_v(b)


class TestIntersection:
    def test_transverse_lines(self, node):
        assert intersection(*node.branches) == 1

    def test_tangent_parabolas(self):
        b1 = Branch.from_polynomials({1: 1}, {2: 1})
        b2 = Branch.from_polynomials({1: 1}, {2: 2})
        assert intersection(b1, b2) == 2

    def test_cusp_and_line(self, cusp_branch):
        line = Branch.from_polynomials({1: 1}, {})
        assert intersection(cusp_branch, line) == 3

    def test_identical_exact_branches(self, cusp_branch):
        with pytest.raises(CoincidentBranches):
            delta(CurveGerm.of(cusp_branch, cusp_branch))

    def test_reparametrized_branches_coincide(self):
        b1 = approx([0, 1], [0, 0, 1])
        b2 = approx([0, 1, 1], [0, 0, 1, 2, 1])
        assert germ_is_coincident(b1, b2)
        with pytest.raises(CoincidentBranches):
            intersection(b1, b2)

    def test_scaled_parameter_coincides(self):
        b1 = Branch.from_polynomials({2: 1}, {3: 1})
        b2 = Branch.from_polynomials({2: 4}, {3: 8})
        assert germ_is_coincident(b1, b2)
        with pytest.raises(CoincidentBranches):
            intersection(b1, b2)

    def test_scaled_truncated_branches_coincide(self):
        assert germ_is_coincident(approx([0, 0, 1], [0, 0, 0, 1]), approx([0, 0, 9], [0, 0, 0, -27]))
        with pytest.raises(CoincidentBranches):
            intersection(approx([0, 1], [0, 0, 1]), approx([0, 3], [0, 0, 9]))

    def test_scaling_alone_does_not_identify_distinct_branches(self):
        b1 = Branch.from_polynomials({1: 1}, {2: 1})
        b2 = Branch.from_polynomials({1: 2}, {2: 3})
        assert not germ_is_coincident(b1, b2)
        assert intersection(b1, b2) == 2

    def test_irrational_scaling_is_not_compared(self):
        assert not germ_is_coincident(approx([0, 0, 1], [0, 0, 0, 1]), approx([0, 0, 2], [0, 0, 0, 1]))

    def test_sign_flip_of_even_parameter(self):
        assert germ_is_coincident(approx([0, 0, 1], [0, 0, 0, 1]), approx([0, 0, 1], [0, 0, 0, -1]))
        assert not germ_is_coincident(approx([0, 1], [0, 0, 1]), approx([0, 1], [0, 0, -1]))


class TestDegeneracy:
    def test_square_of_a_smooth_branch(self):
        b = Branch.from_polynomials({2: 1}, {4: 1})
        witness = degeneracy_witness(b)
        assert witness is not None
        assert witness.d == 2
        assert is_degenerate(b)
        with pytest.raises(DegenerateBranch):
            delta(b)

    def test_cusp_is_not_degenerate(self, cusp_branch):
        assert not is_degenerate(cusp_branch)
        assert not is_degenerate(Branch.from_polynomials({2: 1}, {4: 1, 5: 1}))

    def test_coprime_orders(self):
        assert degeneracy_witness(Branch.from_polynomials({2: 1}, {3: 1})) is None


class TestNormalForm:
    def test_leading_coefficient_is_absorbed(self):
        b = normalize(Branch.from_polynomials({2: 4}, {3: 1}))
        assert b.x.coeffs == {(2,): 1}
        assert b.y.coeff(3) == Fraction(1, 8)

    def test_irrational_root(self):
        with pytest.raises(NoRootInField):
            normalize(Branch.from_polynomials({2: 2}, {3: 1}))


class TestPlanePoly:
    def test_parse(self):
        assert PlanePoly.parse("y^2 - x^3") == PlanePoly({(0, 2): 1, (3, 0): -1})
        assert PlanePoly.parse("x*y/2").terms == {(1, 1): Fraction(1, 2)}

    def test_must_vanish_at_origin(self):
        with pytest.raises(InvalidInput):
            PlanePoly.parse("1 + x")
        with pytest.raises(InvalidInput):
            PlanePoly.parse("x +")

    def test_rows(self):
        f = PlanePoly.from_rows([[1, 1, 0, 2], [-1, 2, 3, 0]])
        assert PlanePoly.from_rows(f.to_rows()) == f

    def test_shear(self):
        assert PlanePoly.parse("x^2 - y^3").shear(1) == PlanePoly.parse("(x + y)^2 - y^3")

    def test_partials(self):
        f = PlanePoly.parse("y^2 - x^3")
        assert f.partial_x() == PlanePoly({(2, 0): -3}, vanishing=False)
        assert f.partial_y() == PlanePoly({(0, 1): 2}, vanishing=False)

    def test_equation_must_vanish_on_branch(self, cusp_branch):
        with pytest.raises(EquationDoesNotVanish):
            p_direct(cusp_branch, PlanePoly.parse("y - x^2"))
