"""
Coordinador de suites de verificación.
Registra suites y las ejecuta en paralelo con orden canónico de resultados.
"""

import asyncio
from dataclasses import replace
from typing import Dict, Iterable, List, Optional

from loguru import logger

from ..core.errors import InvalidInput
from .base_suite import BaseSuite, SuiteReport
from .types import (
    ChiSuite,
    CorrespondenceSuite,
    CurvesSuite,
    Example4Suite,
    FFOracleSuite,
    GenfunSuite,
    GRingSuite,
    KouchnirenkoSuite,
    LiftingSuite,
    MoebiusSuite,
    PowStructSuite,
    StrataSuite,
    TransferSuite,
)

ALL = "all"

SUITE_TYPES = (
    TransferSuite,
    FFOracleSuite,
    GRingSuite,
    PowStructSuite,
    ChiSuite,
    CurvesSuite,
    CorrespondenceSuite,
    LiftingSuite,
    StrataSuite,
    Example4Suite,
    KouchnirenkoSuite,
    MoebiusSuite,
    GenfunSuite,
)


class SuiteCoordinator:
    """Coordinador para ejecutar varias suites."""

    def __init__(self):
        self.available_suites: Dict[str, BaseSuite] = {}

    def register_suite(self, suite: BaseSuite):
        """
        Registra una suite disponible.

        Args:
            suite: Suite a registrar
        """
        self.available_suites[suite.name] = suite
        logger.debug(f"Suite {suite.name} registered with coordinator")

    def list_available_suites(self) -> List[str]:
        """Retorna los nombres de las suites, ordenados."""
        return sorted(self.available_suites)

    def resolve(self, names: Iterable[str]) -> List[BaseSuite]:
        """
        Traduce nombres (o ``all``) a suites registradas.

        Raises:
            InvalidInput: si algún nombre no está registrado
        """
        names = list(names) or [ALL]
        if ALL in names:
            return [self.available_suites[n] for n in self.list_available_suites()]
        unknown = sorted(set(names) - set(self.available_suites))
        if unknown:
            raise InvalidInput(
                f"unknown suites {unknown}", {"available": self.list_available_suites()}
            )
        return [self.available_suites[n] for n in sorted(set(names))]

    async def run(self, names: Iterable[str] = (ALL,)) -> List[SuiteReport]:
        """
        Ejecuta las suites pedidas en paralelo.

        Args:
            names: Nombres de suite o ``all``

        Returns:
            Informes ordenados por nombre de suite
        """
        suites = self.resolve(names)
        logger.info(f"Running {len(suites)} suites: {[s.name for s in suites]}")
        reports = await asyncio.gather(*(suite.run() for suite in suites))
        return sorted(reports, key=lambda r: r.suite)


def build_coordinator(
    seed: Optional[int] = None,
    field_checks: Optional[List[int]] = None,
) -> SuiteCoordinator:
    """
    Coordinador con todas las suites de la librería.

    Args:
        seed: Semilla para las suites aleatorias (por defecto settings.seed)
        field_checks: Primos de los oráculos de especialización
    """
    coordinator = SuiteCoordinator()
    for suite_type in SUITE_TYPES:
        suite = suite_type()
        overrides = {}
        if seed is not None:
            overrides["seed"] = seed
        if field_checks:
            overrides["field_checks"] = list(field_checks)
        if overrides:
            suite.config = replace(suite.config, **overrides)
        coordinator.register_suite(suite)
    return coordinator
