"""Tests de las clases GClass."""

import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import settings as hsettings
from hypothesis import strategies as st

from src.algebra.gring import GClass, geometric_sum, parse_class
from src.core.errors import (
    DivergentSeries,
    DivisionByZero,
    InvalidInput,
    NotLaurentPolynomial,
    PoleAtOne,
    PoleAtQ,
)

L = GClass.L

laurent = st.dictionaries(st.integers(-3, 3), st.integers(-3, 3), max_size=3).map(GClass.from_laurent)
nonzero_laurent = laurent.filter(bool)
classes = st.builds(lambda a, b: a / b, laurent, nonzero_laurent)


class TestCanonicalForm:
    def test_common_factor_is_removed(self):
        value = (L ** 2 - 1) / (L - 1)
        assert value == L + 1
        assert value.is_laurent()

    def test_integer_content_is_removed(self):
        assert GClass(2) / GClass(4) == GClass.from_fraction(Fraction(1, 2))

    def test_denominator_has_positive_leading_coefficient(self):
        value = GClass(1) / (1 - L)
        assert value.den.LC > 0
        assert value == -(L - 1).inverse()

    def test_zero_is_falsy(self):
        assert not GClass()
        assert GClass() == 0

    def test_negative_powers(self):
        assert GClass.monomial(-3) * L ** 3 == 1
        assert GClass.monomial(-3).laurent_terms() == {-3: 1}
        assert L ** -2 == GClass.monomial(-2)

    def test_equal_values_share_representation(self):
        a = (L + 1) * (L - 1) / (L * (L - 1))
        b = (L + 1) / L
        assert a == b
        assert hash(a) == hash(b)

    def test_rendering(self):
        assert str(GClass.monomial(-3)) == "L^-3"
        assert str(L) == "L"
        assert str(GClass(1)) == "1"
        assert str(GClass.monomial(-1, -2)) == "-2*L^-1"


class TestErrors:
    def test_division_by_zero(self):
        with pytest.raises(DivisionByZero):
            GClass(1) / GClass()
        with pytest.raises(ZeroDivisionError):
            GClass().inverse()

    def test_pole_at_one(self):
        with pytest.raises(PoleAtOne):
            (L - 1).inverse().euler_char()

    def test_pole_at_q(self):
        with pytest.raises(PoleAtQ):
            (L - 2).inverse().specialize(2)

    def test_not_laurent(self):
        with pytest.raises(NotLaurentPolynomial):
            (L + 1).inverse().laurent_terms()


class TestInvariants:
    def test_euler_char(self):
        assert ((L ** 2 - 1) / (L - 1)).euler_char() == 2
        assert GClass.monomial(-5).euler_char() == 1

    def test_specialize(self):
        assert (L + 1).specialize(3) == 4
        assert GClass.monomial(-2).specialize(2) == Fraction(1, 4)

    def test_virtual_dim(self):
        assert ((L ** 2 + 1) / L ** 5).virtual_dim() == -3
        assert GClass().virtual_dim() == -math.inf

    def test_geometric_sum(self):
        total = geometric_sum(GClass.monomial(-6), GClass.monomial(-2))
        assert total * (1 - GClass.monomial(-2)) == GClass.monomial(-6)

    def test_geometric_sum_diverges(self):
        with pytest.raises(DivergentSeries):
            geometric_sum(1, L)


class TestParse:
    def test_product_expression(self):
        assert parse_class("(L+1)*(L-1)*L^-3") == (L ** 2 - 1) * GClass.monomial(-3)

    def test_rational_coefficient(self):
        assert parse_class("L/2") == L * Fraction(1, 2)

    @pytest.mark.parametrize("text", ["x + 1", "L +", "y/L"])
    def test_rejects_non_classes(self, text):
        with pytest.raises(InvalidInput):
            parse_class(text)

    @hsettings(max_examples=40, deadline=None)
    @given(classes)
    def test_rendering_round_trips(self, value):
        assert parse_class(str(value)) == value


@hsettings(max_examples=50, deadline=None)
@given(classes, classes, classes)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    if a:
        assert a * a.inverse() == 1


@hsettings(max_examples=50, deadline=None)
@given(laurent, laurent, st.sampled_from([2, 3, 5]))
def test_specialization_is_a_ring_homomorphism(a, b, q):
    assert (a * b).specialize(q) == a.specialize(q) * b.specialize(q)
    assert (a + b).specialize(q) == a.specialize(q) + b.specialize(q)
    assert (a * b).euler_char() == a.euler_char() * b.euler_char()
