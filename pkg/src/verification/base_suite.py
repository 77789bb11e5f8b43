"""
Clase base para todas las suites de verificación.
Proporciona la ejecución común de comprobaciones y el informe por suite.
"""

import asyncio
import time
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Iterable, List, Optional, Tuple, Union

from loguru import logger

from ..core.config import settings
from ..core.errors import MotivicError

Outcome = Union[bool, Tuple[Any, Any]]
Case = Tuple[str, Callable[[], Outcome]]


@dataclass
class SuiteConfig:
    """Configuración de una suite."""
    name: str
    description: str = ""
    seed: int = field(default_factory=lambda: settings.seed)
    precision: int = 10
    field_checks: List[int] = field(default_factory=lambda: list(settings.field_checks))


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


@dataclass
class SuiteReport:
    """Resultado de una suite: comprobaciones y tiempo empleado."""
    suite: str
    checks: List[CheckResult] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "total": len(self.checks),
            "failed": len(self.failures),
            "elapsed": round(self.elapsed, 3),
            "checks": [c.to_dict() for c in self.checks],
        }


class BaseSuite(ABC):
    """Clase base para todas las suites."""

    def __init__(self, config: SuiteConfig):
        """
        Inicializa la suite.

        Args:
            config: Configuración de la suite
        """
        self.config = config
        logger.debug(f"Suite initialized: {self.config.name} (seed {self.config.seed})")

    @property
    def name(self) -> str:
        return self.config.name

    def execute(self) -> SuiteReport:
        """
        Ejecuta todas las comprobaciones de forma síncrona.

        Un MotivicError dentro de un caso lo marca como fallido sin detener
        el resto de la suite.

        Returns:
            Informe de la suite
        """
        logger.info(f"Suite {self.name} starting")
        report = SuiteReport(self.name)
        start = time.perf_counter()
        for case_name, fn in self.cases():
            report.checks.append(self._run_case(case_name, fn))
        report.elapsed = time.perf_counter() - start

        if report.passed:
            logger.info(f"Suite {self.name} passed {len(report.checks)} checks in {report.elapsed:.2f}s")
        else:
            logger.warning(f"Suite {self.name}: {len(report.failures)} of {len(report.checks)} checks failed")
        return report

    async def run(self) -> SuiteReport:
        """Ejecuta la suite en un hilo aparte."""
        return await asyncio.to_thread(self.execute)

    @staticmethod
    def _run_case(case_name: str, fn: Callable[[], Outcome]) -> CheckResult:
        try:
            outcome = fn()
        except MotivicError as e:
            return CheckResult(case_name, False, f"{type(e).__name__}: {e.message}")

        if isinstance(outcome, tuple):
            lhs, rhs = outcome
            passed = lhs == rhs
            return CheckResult(case_name, passed, "" if passed else f"{lhs} != {rhs}")
        return CheckResult(case_name, bool(outcome))

    @abstractmethod
    def cases(self) -> Iterable[Case]:
        """
        Casos de la suite.
        Debe ser implementado por cada subclase.

        Returns:
            Pares (nombre, función) donde la función devuelve un booleano o
            un par (lhs, rhs) que debe coincidir
        """
        pass

    def describe(self) -> Optional[str]:
        return self.config.description or None
