"""Tests de TruncSeries."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import settings as hsettings
from hypothesis import strategies as st

from src.algebra.gring import GClass
from src.algebra.series import CoeffRing, TruncSeries, exact_root
from src.core.errors import (
    NoRootInField,
    NonUnitConstantTerm,
    NotOrderOne,
    PositiveOrderRequired,
    PrecisionExhausted,
    VariableMismatch,
)


def series(*values, trunc=None):
    return TruncSeries.from_list(list(values), trunc)


class TestTruncation:
    def test_sum_uses_the_smaller_truncation(self):
        a = series(1, 1, 1, 1, 1, 1)
        b = series(1, 2, 3)
        assert (a + b).trunc == 2
        assert (a * b).trunc == 2
        assert (a + b).coefficient_list() == [2, 3, 4]

    def test_coefficient_beyond_truncation(self):
        with pytest.raises(PrecisionExhausted):
            series(1, 2, 3).coeff(3)

    def test_terms_beyond_truncation_are_dropped(self):
        s = TruncSeries(("t",), 2, {(1,): 5, (4,): 7})
        assert s.coeffs == {(1,): 5}
        assert s.order() == 1

    def test_zero_series_order(self):
        assert TruncSeries.zero(trunc=5).order() == 6

    def test_ring_is_promoted(self):
        s = series(1, 2) + series(Fraction(1, 2), 0)
        assert s.ring is CoeffRing.QQ
        assert (s * GClass.L).ring is CoeffRing.GCLASS


class TestInverse:
    def test_geometric_series(self):
        inv = series(1, -1, trunc=8).recip()
        assert inv.coefficient_list() == [1] * 9

    def test_non_unit_integer(self):
        with pytest.raises(NonUnitConstantTerm):
            series(2, 1).recip()

    def test_rational_inverse(self):
        inv = series(Fraction(2), 1).recip()
        assert inv.coefficient_list() == [Fraction(1, 2), Fraction(-1, 4)]

    def test_zero_constant_term(self):
        with pytest.raises(NonUnitConstantTerm):
            series(0, 1).recip()

    def test_class_coefficients(self):
        L = GClass.L
        s = TruncSeries.from_list([GClass(1), -L], 4)
        assert s.recip().coefficient_list() == [L ** k for k in range(5)]

    def test_multivariate(self):
        vars = ("a", "b")
        a = TruncSeries.variable("a", 4, vars)
        b = TruncSeries.variable("b", 4, vars)
        inv = (1 - a - b).recip()
        assert inv.coeff((1, 1)) == 2
        assert inv.coeff((2, 2)) == 6
        assert inv.coeff((0, 4)) == 1

    def test_variable_mismatch(self):
        a = TruncSeries.variable("a", 3)
        b = TruncSeries.variable("b", 3)
        with pytest.raises(VariableMismatch):
            a + b


class TestComposition:
    def test_compose_with_geometric_inner(self):
        # 1/(1-u) con u = t/(1-t) da (1-t)/(1-2t)
        outer = series(1, 1, 1, 1, 1, 1)
        inner = series(0, 1, 1, 1, 1, 1)
        assert outer.compose(inner).coefficient_list() == [1, 1, 2, 4, 8, 16]

    def test_inner_needs_positive_order(self):
        with pytest.raises(PositiveOrderRequired):
            series(1, 1).compose(series(1, 1))

    def test_reversion(self):
        rev = series(0, 1, 1, 1, 1, 1, 1).reversion()
        assert rev.coefficient_list() == [0, 1, -1, 1, -1, 1, -1]

    def test_reversion_is_a_compositional_inverse(self):
        a = series(0, 1, 3, 0, -2, 5, 1, 0)
        t = TruncSeries.variable("t", 7)
        assert a.compose(a.reversion()) == t
        assert a.reversion().compose(a) == t

    def test_reversion_requires_order_one(self):
        with pytest.raises(NotOrderOne):
            series(0, 0, 1).reversion()
        with pytest.raises(NotOrderOne):
            series(0, 2, 1).reversion()


class TestRoots:
    def test_square_root(self):
        s = series(4, 4, 1, 0, 0, 0)
        assert s.nth_root_unit(2).coefficient_list() == [2, 1, 0, 0, 0, 0]

    def test_cube_root_round_trip(self):
        s = series(8, 1, 0, 3, 0, 0)
        root = s.nth_root_unit(3)
        assert root ** 3 == s.to_ring(CoeffRing.QQ)

    def test_no_rational_root(self):
        with pytest.raises(NoRootInField):
            series(2, 1).nth_root_unit(2)

    @pytest.mark.parametrize(
        "value,n,expected",
        [(9, 2, 3), (-27, 3, -3), (Fraction(4, 9), 2, Fraction(2, 3))],
    )
    def test_exact_root(self, value, n, expected):
        assert exact_root(value, n) == expected

    def test_exact_root_of_class(self):
        assert exact_root(GClass.monomial(-4, 9), 2) == GClass.monomial(-2, 3)
        with pytest.raises(NoRootInField):
            exact_root(GClass.L + 1, 2)
        with pytest.raises(NoRootInField):
            exact_root(GClass.monomial(3), 2)


class TestTransforms:
    def test_lower(self):
        s = series(0, 0, 3, 1, 2)
        lowered = s.lower(2)
        assert lowered.coefficient_list() == [3, 1, 2]
        assert lowered.trunc == 2

    def test_lower_below_order(self):
        with pytest.raises(PositiveOrderRequired):
            series(0, 1, 1).lower(2)

    def test_substitute_power(self):
        s = series(1, 2, 3).substitute_power(2)
        assert s.trunc == 5
        assert s.coefficient_list() == [1, 0, 2, 0, 3, 0]

    def test_rendering(self):
        assert str(series(1, 0, -2)) == "1 + -2*t^2 + O(deg 3)"


@hsettings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-5, 5), min_size=1, max_size=8))
def test_unit_series_times_inverse_is_one(tail):
    s = TruncSeries.from_list([1] + tail)
    assert s * s.recip() == TruncSeries.one(trunc=s.trunc)


class TestReferenceExpansions:
    def test_rational_reciprocal(self):
        inv = series(Fraction(2), Fraction(1), trunc=2).recip()
        assert inv.coefficient_list() == [Fraction(1, 2), Fraction(-1, 4), Fraction(1, 8)]

    def test_substitution_of_a_scaled_variable(self):
        outer = series(*([1] * 6))
        assert outer.compose(series(0, 2, 0, 0, 0, 0)).coefficient_list() == [2 ** k for k in range(6)]

    def test_catalan_reversion(self):
        rev = series(0, 1, 1, 0, 0, 0).reversion()
        assert rev.coefficient_list() == [0, 1, -1, 2, -5, 14]

    def test_binomial_square_root(self):
        root = series(1, 1, 0, 0).nth_root_unit(2)
        assert root.coefficient_list() == [1, Fraction(1, 2), Fraction(-1, 8), Fraction(1, 16)]
