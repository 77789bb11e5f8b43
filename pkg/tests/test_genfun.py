"""Tests de la serie generatriz de resoluciones."""

from fractions import Fraction

import pytest
import sympy

from src.algebra.gring import GClass
from src.algebra.powstruct import chi_image
from src.algebra.series import TruncSeries
from src.core.errors import InvalidInput, NonIntegralExponent, NonPositiveDegree
from src.measures.genfun import (
    BUILTIN_RESOLUTIONS,
    Component,
    Monomial,
    ResolutionData,
    arc_order_measure,
    chain_resolution,
    cusp_arc_oracle,
    cusp_resolution,
    f_series,
    g_series,
    inverse_intersection,
    multiplicity_vectors,
    pgen,
    pgen_euler,
    single_blowup,
    smooth_arc_oracle,
)

L = GClass.L


class TestResolutionData:
    def test_inverse_matrices(self):
        assert inverse_intersection(single_blowup()) == [[1]]
        assert inverse_intersection(chain_resolution()) == [[1, 1], [1, 2]]

    def test_inverse_property(self):
        res = cusp_resolution()
        inverse = sympy.Matrix(inverse_intersection(res))
        assert inverse * -sympy.Matrix(res.intersections) == sympy.eye(3)

    def test_multiplicity_vectors(self):
        assert multiplicity_vectors(chain_resolution()) == [(1,), (2,)]
        assert multiplicity_vectors(cusp_resolution()) == [(2,), (3,), (6,)]

    def test_must_be_negative_definite(self):
        with pytest.raises(InvalidInput):
            ResolutionData((Component(1, 1, L),), ((1,),))
        with pytest.raises(InvalidInput):
            ResolutionData((Component(1, 1, L), Component(2, 1, L)), ((-1, 2), (2, -1)))

    def test_matrix_shape_and_symmetry(self):
        with pytest.raises(InvalidInput):
            ResolutionData((Component(1, 1, L), Component(2, 1, L)), ((-2, 1), (0, -2)))
        with pytest.raises(InvalidInput):
            ResolutionData((Component(1, 1, L),), ((-1, 0),))

    def test_arrows(self):
        comps = (Component(1, 1, L),)
        with pytest.raises(InvalidInput):
            ResolutionData(comps, ((-1,),), arrows=((1, 1),))
        with pytest.raises(InvalidInput):
            ResolutionData(comps, ((-1,),), arrows=((7, 0),))
        with pytest.raises(InvalidInput):
            ResolutionData((Component(1, 1, L), Component(1, 2, L)), ((-1, 0), (0, -1)))

    def test_component_multiplicity(self):
        with pytest.raises(InvalidInput):
            Component(1, 0, L)

    def test_non_integral_exponents(self):
        res = ResolutionData((Component(1, 1, L),), ((-2,),), arrows=((1, 0),))
        assert inverse_intersection(res) == [[Fraction(1, 2)]]
        with pytest.raises(NonIntegralExponent):
            pgen(res, 3)


class TestBuildingBlocks:
    def test_partition_series(self):
        assert f_series(Monomial((1,)), 5).coefficient_list() == [1, 1, 2, 3, 5, 7]

    def test_weighted_partition_series(self):
        series = f_series(Monomial((1,), L ** -2), 3)
        assert series.coefficient_list() == [1, L ** -2, 2 * L ** -4, 3 * L ** -6]

    def test_g_mixed_coefficient(self):
        series = g_series(Monomial((1, 0)), Monomial((0, 1)), 4)
        assert series.vars == ("t1", "t2")
        assert series.coeff((1, 1)) == 1
        assert series.coeff((2, 0)) == 0
        assert series.coeff((2, 1)) == 1

    def test_degree_zero_monomial(self):
        with pytest.raises(NonPositiveDegree):
            f_series(Monomial((0,)), 3)
        with pytest.raises(NonPositiveDegree):
            g_series(Monomial((1,)), Monomial((0,)), 3)

    def test_scale_must_be_a_power_of_l(self):
        with pytest.raises(InvalidInput):
            Monomial((1,), GClass(2))
        with pytest.raises(InvalidInput):
            Monomial((1,), L + 1)


class TestPgen:
    def test_empty_resolution(self):
        res = ResolutionData((), ())
        assert pgen(res, 4) == TruncSeries.one(trunc=4)

    def test_smooth_oracle_values(self):
        assert [arc_order_measure(n) for n in (1, 2, 3)] == [L ** -1, L ** -2, L ** -3]
        assert smooth_arc_oracle(3).coefficient_list() == [1, L ** -1, 2 * L ** -2, 3 * L ** -3]

    @pytest.mark.parametrize("builder", [single_blowup, chain_resolution])
    def test_smooth_branch(self, builder):
        assert pgen(builder(), 3) == smooth_arc_oracle(3)

    def test_cusp(self):
        assert pgen(cusp_resolution(), 3) == cusp_arc_oracle(3)

    def test_cusp_oracle_depth(self):
        with pytest.raises(InvalidInput):
            cusp_arc_oracle(6)

    @pytest.mark.parametrize("name", sorted(BUILTIN_RESOLUTIONS))
    def test_euler_characteristic(self, name):
        res = BUILTIN_RESOLUTIONS[name]()
        assert chi_image(pgen(res, 6)) == pgen_euler(res, 6)

    def test_truncation_is_order_exact(self):
        res = cusp_resolution()
        assert pgen(res, 6).truncate(3) == pgen(res, 3)
