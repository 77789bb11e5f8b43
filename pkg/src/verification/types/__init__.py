"""Suites especializadas."""

from .algebra_suites import ChiSuite, GRingSuite, MoebiusSuite, PowStructSuite
from .curve_suites import CorrespondenceSuite, CurvesSuite, LiftingSuite
from .measure_suites import (
    Example4Suite,
    FFOracleSuite,
    GenfunSuite,
    KouchnirenkoSuite,
    StrataSuite,
    TransferSuite,
)

__all__ = [
    "ChiSuite",
    "GRingSuite",
    "MoebiusSuite",
    "PowStructSuite",
    "CorrespondenceSuite",
    "CurvesSuite",
    "LiftingSuite",
    "Example4Suite",
    "FFOracleSuite",
    "GenfunSuite",
    "KouchnirenkoSuite",
    "StrataSuite",
    "TransferSuite",
]
