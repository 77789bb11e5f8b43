"""Tests de estratos de jets y del oráculo sobre F_q."""

import pytest

from src.algebra.gring import GClass
from src.core.errors import IndexOutOfRange, InvalidInput, NotEnumerable, TooLarge
from src.measures.strata import (
    Ambient,
    AmbientKind,
    DiscriminantNonzero,
    JetStratum,
    NotAllZero,
    builtin_strata,
    config_class_p1,
    ff_point_count,
    jet_class,
    measure,
    measure_arc_stratum,
    pad,
    projectivize,
    reduced_divisor_count,
    stratum_from_labels,
)

L = GClass.L
BUILTIN = builtin_strata()


class TestAmbient:
    def test_dimensions(self):
        assert Ambient.arc(2).dimension == 4
        assert Ambient.function(2).dimension == 5
        assert Ambient.function(2, include_constant=True).dimension == 6

    def test_function_coordinates_follow_labels(self):
        amb = Ambient.function(2)
        labels = amb.labels()
        assert labels == ["x^1*y^0", "x^0*y^1", "x^2*y^0", "x^1*y^1", "x^0*y^2"]
        for i in range(3):
            for j in range(3 - i):
                if i + j:
                    assert labels[amb.monomial(i, j)] == f"x^{i}*y^{j}"

    def test_out_of_range(self):
        with pytest.raises(IndexOutOfRange):
            Ambient.function(2).monomial(0, 0)
        with pytest.raises(IndexOutOfRange):
            Ambient.function(2).monomial(2, 1)
        with pytest.raises(IndexOutOfRange):
            Ambient.arc(2).x(3)

    def test_wrong_kind(self):
        with pytest.raises(InvalidInput):
            Ambient.arc(2).monomial(1, 0)
        with pytest.raises(InvalidInput):
            Ambient.arc(0)
        with pytest.raises(InvalidInput):
            Ambient(AmbientKind.ARC, 1, include_constant=True)


class TestStratum:
    def test_conflicting_constraints(self):
        amb = Ambient.arc(1)
        with pytest.raises(InvalidInput):
            JetStratum(amb, zero={0}, nonzero={0})
        with pytest.raises(InvalidInput):
            JetStratum(amb, zero={0}, multipliers=(NotAllZero((0, 1)),))
        with pytest.raises(IndexOutOfRange):
            JetStratum(amb, zero={2})

    def test_labels(self):
        amb = Ambient.arc(2)
        assert stratum_from_labels(amb, zero=["x1", "y1"]) == JetStratum(amb, zero={0, 2})
        with pytest.raises(IndexOutOfRange):
            stratum_from_labels(amb, zero=["z1"])


class TestMeasures:
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_whole_spaces(self, n):
        assert measure(JetStratum(Ambient.arc(n))) == 1
        assert measure(JetStratum(Ambient.function(n))) == 1
        assert measure(JetStratum(Ambient.function(n, include_constant=True))) == L

    def test_reference_values(self):
        assert measure(BUILTIN["arc1_origin"]) == L ** -2
        assert measure(BUILTIN["arc1_x_nonzero"]) == (L - 1) / L
        assert jet_class(BUILTIN["arc3_cusp_order"]) == (L - 1) * L ** 3
        assert measure(BUILTIN["arc3_cusp_order"]) == (L - 1) * L ** -3
        assert jet_class(BUILTIN["fun2_a1"]) == L ** 2 * (L - 1)

    @pytest.mark.parametrize("name", sorted(BUILTIN))
    def test_padding_keeps_the_measure(self, name):
        s = BUILTIN[name]
        assert measure(pad(s, s.ambient.n + 2)) == measure(s)

    @pytest.mark.parametrize("name", sorted(BUILTIN))
    def test_projectivization(self, name):
        s = BUILTIN[name]
        assert measure(projectivize(s)) * (L - 1) == measure(s)

    def test_padding_down(self):
        with pytest.raises(InvalidInput):
            pad(BUILTIN["arc3_cusp_order"], 2)

    def test_wrong_space(self):
        with pytest.raises(InvalidInput):
            measure_arc_stratum(BUILTIN["fun2_a1"])


class TestFiniteFields:
    @pytest.mark.parametrize("q", [2, 3])
    @pytest.mark.parametrize("name", sorted(BUILTIN))
    def test_point_count_matches_class(self, name, q):
        s = BUILTIN[name]
        assert ff_point_count(s, q) == jet_class(s).specialize(q)

    def test_nondegenerate_quadratic_forms(self):
        amb = Ambient.function(2)
        s = JetStratum(amb, multipliers=(DiscriminantNonzero(2, 3, 4),))
        for q in (2, 3, 5):
            assert ff_point_count(s, q) == q ** 2 * (q ** 3 - q ** 2)

    def test_requires_prime(self):
        with pytest.raises(InvalidInput):
            ff_point_count(BUILTIN["arc1_full"], 4)

    def test_dimension_limit(self, override_settings):
        override_settings(ff_dimension_limit=2)
        with pytest.raises(TooLarge):
            ff_point_count(BUILTIN["arc3_cusp_order"], 2)

    def test_class_multipliers_are_not_enumerable(self):
        with pytest.raises(NotEnumerable):
            ff_point_count(projectivize(BUILTIN["arc1_full"]), 2)


class TestConfigurations:
    def test_small_configurations(self):
        assert config_class_p1(1) == L + 1
        assert config_class_p1(2) == L ** 2
        assert config_class_p1(3) == L ** 3 - L

    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    def test_divisor_counts(self, k):
        for q in (2, 3):
            assert config_class_p1(k).specialize(q) == reduced_divisor_count(k, q)

    def test_reduced_divisor_count(self):
        assert reduced_divisor_count(2, 3) == 9
        assert reduced_divisor_count(3, 2) == 6
        with pytest.raises(InvalidInput):
            reduced_divisor_count(0, 2)
