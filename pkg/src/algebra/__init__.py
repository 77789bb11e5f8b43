"""Álgebra exacta: clases de Grothendieck, series truncadas y estructura de potencia."""

from .gring import GClass, geometric_sum, parse_class
from .series import CoeffRing, TruncSeries
from .powstruct import (
    CycloFactorization,
    MeasuredPartition,
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

__all__ = [
    "GClass",
    "geometric_sum",
    "parse_class",
    "CoeffRing",
    "TruncSeries",
    "CycloFactorization",
    "MeasuredPartition",
    "chi_exp_integral",
    "chi_image",
    "moebius_inversion_check",
    "factor_cyclo",
    "integer_power",
    "macdonald_check",
    "measured_exp_integral",
    "moebius",
    "one_minus_t_pow",
    "power",
    "sym_power_class",
    "level_set_check",
]
