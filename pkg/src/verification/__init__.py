"""Paquete de suites de verificación."""

from .base_suite import BaseSuite, CheckResult, SuiteConfig, SuiteReport
from .coordinator import ALL, SuiteCoordinator, build_coordinator

__all__ = [
    "BaseSuite",
    "CheckResult",
    "SuiteConfig",
    "SuiteReport",
    "ALL",
    "SuiteCoordinator",
    "build_coordinator",
]
