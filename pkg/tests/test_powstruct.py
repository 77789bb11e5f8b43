"""Tests de la estructura de potencia y de las identidades de productos."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import settings as hsettings
from hypothesis import strategies as st

from src.algebra.gring import GClass
from src.algebra.powstruct import (
    MeasuredPartition,
    check_identity,
    chi_exp_integral,
    chi_image,
    moebius_inversion_check,
    factor_cyclo,
    integer_power,
    macdonald_check,
    measured_exp_integral,
    moebius,
    one_minus_t_pow,
    power,
    sym_power_class,
    level_set_check,
)
from src.algebra.series import CoeffRing, TruncSeries
from src.core.errors import (
    IdentityViolation,
    InvalidInput,
    NonPositiveOrderValue,
    NonUnitLeadingTerm,
)

L = GClass.L
ORDER = 5

laurent = st.dictionaries(st.integers(-2, 2), st.integers(-2, 2), max_size=2).map(GClass.from_laurent)
unit_series = st.lists(laurent, min_size=ORDER, max_size=ORDER).map(
    lambda tail: TruncSeries.from_list([GClass(1)] + tail)
)


def ones(n):
    return TruncSeries.from_list([1] * (n + 1))


class TestPrimitive:
    def test_power_of_geometric_series(self):
        assert power(ones(5), L).coefficient_list() == [L ** k for k in range(6)]

    def test_primitive_for_sums(self):
        s = one_minus_t_pow(L + 1, 3)
        assert s.coeff(2) == L ** 2 + L + 1
        assert s.coeff(3) == L ** 3 + L ** 2 + L + 1

    def test_negative_exponent(self):
        s = one_minus_t_pow(-L, 3)
        assert s.coefficient_list() == [1, -L, 0, 0]

    def test_sym_power_class(self):
        assert sym_power_class(L, 3) == L ** 3
        assert sym_power_class(2, 2) == 3
        assert sym_power_class(L + 1, 0) == 1
        with pytest.raises(InvalidInput):
            sym_power_class(L, -1)


class TestFactorization:
    def test_round_trip(self):
        s = TruncSeries.from_list([GClass(1), L, GClass(3), -L ** 2, GClass.monomial(-1)])
        assert factor_cyclo(s).expand() == s

    def test_geometric_series_has_one_factor(self):
        assert factor_cyclo(ones(6)).as_dict() == {1: GClass(1)}

    def test_requires_unit_constant(self):
        with pytest.raises(NonUnitLeadingTerm):
            factor_cyclo(TruncSeries.from_list([2, 1]))


class TestAxioms:
    @hsettings(max_examples=20, deadline=None)
    @given(unit_series)
    def test_zero_and_one(self, a):
        assert power(a, 0) == TruncSeries.one(trunc=ORDER)
        assert power(a, 1) == a

    @hsettings(max_examples=15, deadline=None)
    @given(unit_series, laurent, laurent)
    def test_exponent_sum(self, a, m1, m2):
        assert power(a, m1 + m2) == power(a, m1) * power(a, m2)

    @hsettings(max_examples=15, deadline=None)
    @given(unit_series, unit_series, laurent)
    def test_product_of_bases(self, a, b, m):
        assert power(a * b, m) == power(a, m) * power(b, m)

    @hsettings(max_examples=10, deadline=None)
    @given(unit_series, laurent, laurent)
    def test_composition(self, a, m1, m2):
        assert power(power(a, m1), m2) == power(a, m1 * m2)

    @hsettings(max_examples=15, deadline=None)
    @given(unit_series, laurent)
    def test_linear_term(self, a, m):
        assert power(a, m).coeff(1) == m * a.coeff(1)

    def test_substitution(self):
        a = TruncSeries.from_list([GClass(1), L, GClass(2)])
        lhs = power(a.substitute_power(2), L + 1)
        rhs = power(a, L + 1).substitute_power(2)
        assert lhs == rhs

    @hsettings(max_examples=15, deadline=None)
    @given(unit_series, laurent)
    def test_euler_characteristic_compatibility(self, a, m):
        lhs, rhs = macdonald_check(a, m)
        assert lhs == rhs

    def test_integer_power_rejects_fractions(self):
        with pytest.raises(InvalidInput):
            integer_power(ones(3), Fraction(1, 2))


class TestPartitions:
    def test_duplicates_and_zero_weights_are_rejected(self):
        t = TruncSeries.variable("t", 4)
        with pytest.raises(InvalidInput):
            MeasuredPartition(((t, 1), (t, 2)))
        with pytest.raises(InvalidInput):
            MeasuredPartition(((t, 0),))

    def test_from_pairs_merges_values(self):
        t = TruncSeries.variable("t", 4)
        merged = MeasuredPartition.from_pairs([(t, 1), (t, 2), (t * t, 1), (t * t, -1)])
        assert merged.entries == ((t, 3),)

    def test_integral_of_single_point(self):
        t = TruncSeries.variable("t", 4)
        assert chi_exp_integral(MeasuredPartition(((t, 1),)), 4) == ones(4)
        assert chi_exp_integral(MeasuredPartition(((t, -1),)), 4).coefficient_list() == [1, -1, 0, 0, 0]

    def test_value_of_order_zero(self):
        with pytest.raises(NonPositiveOrderValue):
            chi_exp_integral(MeasuredPartition(((TruncSeries.one(trunc=3), 1),)), 3)


@pytest.mark.parametrize("n,expected", list(zip(range(1, 11), [1, -1, -1, 0, -1, 1, -1, 0, 0, 1])))
def test_moebius(n, expected):
    assert moebius(n) == expected


def test_product_identities_on_level_sets():
    t = TruncSeries.variable("t", 10)
    partition = MeasuredPartition(((t, 2), (t * t + t * t * t, -1), (t * t * t * 3, 1)))
    lhs, rhs = level_set_check(partition, 10)
    assert lhs == rhs
    lhs, rhs = moebius_inversion_check(partition, 10)
    assert lhs == rhs


def test_measured_exponential():
    series = measured_exp_integral([(1, GClass(1)), (2, L)], 4)
    expected = ones(4).to_ring(CoeffRing.GCLASS) * one_minus_t_pow(L, 2).substitute_power(2).truncate(4)
    assert series == expected
    with pytest.raises(NonPositiveOrderValue):
        measured_exp_integral([(0, L)], 3)


def test_chi_image():
    s = TruncSeries.from_list([GClass(1), L + 1, L ** -2])
    assert chi_image(s).coefficient_list() == [1, 2, 1]


def test_check_identity():
    check_identity("same", 1, 1)
    with pytest.raises(IdentityViolation):
        check_identity("different", 1, 2)
