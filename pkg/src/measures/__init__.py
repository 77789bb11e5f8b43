"""Medidas motívicas de estratos de jets y series generatrices."""

from .strata import (
    Ambient,
    JetStratum,
    builtin_strata,
    config_class_p1,
    ff_point_count,
    jet_class,
    measure,
    projectivize,
)
from .genfun import ResolutionData, pgen, pgen_euler
from .worked_examples import ExampleResult, run_example

__all__ = [
    "Ambient",
    "JetStratum",
    "builtin_strata",
    "config_class_p1",
    "ff_point_count",
    "jet_class",
    "measure",
    "projectivize",
    "ResolutionData",
    "pgen",
    "pgen_euler",
    "ExampleResult",
    "run_example",
]
