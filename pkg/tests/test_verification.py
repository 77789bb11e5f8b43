"""Tests del coordinador y de las suites de verificación."""

import pytest

from src.core.errors import IdentityViolation, InvalidInput
from src.verification import (
    ALL,
    BaseSuite,
    SuiteConfig,
    SuiteCoordinator,
    build_coordinator,
)
from src.verification.types import GRingSuite, KouchnirenkoSuite, MoebiusSuite


class ToySuite(BaseSuite):
    def __init__(self):
        super().__init__(SuiteConfig("toy", "mixed outcomes"))

    def cases(self):
        def broken():
            raise IdentityViolation("boom")

        yield "bool", lambda: True
        yield "pair", lambda: (2, 2)
        yield "mismatch", lambda: (1, 2)
        yield "error", broken


class TestBaseSuite:
    def test_outcomes(self):
        report = ToySuite().execute()
        assert [c.passed for c in report.checks] == [True, True, False, False]
        assert not report.passed
        assert [c.name for c in report.failures] == ["mismatch", "error"]
        assert report.checks[2].detail == "1 != 2"
        assert report.checks[3].detail == "IdentityViolation: boom"

    def test_report_dict(self):
        data = ToySuite().execute().to_dict()
        assert data["suite"] == "toy"
        assert (data["total"], data["failed"], data["passed"]) == (4, 2, False)
        assert data["checks"][0] == {"name": "bool", "passed": True, "detail": ""}

    def test_describe(self):
        assert ToySuite().describe() == "mixed outcomes"

    @pytest.mark.asyncio
    async def test_async_run(self):
        report = await ToySuite().run()
        assert len(report.checks) == 4


class TestCoordinator:
    def test_registry(self):
        coordinator = build_coordinator()
        names = coordinator.list_available_suites()
        assert names == sorted(names)
        assert {"transfer", "fforacle", "powstruct", "genfun", "lifting"} <= set(names)
        assert len(names) == 13

    def test_resolve(self):
        coordinator = build_coordinator()
        assert len(coordinator.resolve([ALL])) == 13
        assert len(coordinator.resolve([])) == 13
        assert [s.name for s in coordinator.resolve(["moebius", "gring", "moebius"])] == ["gring", "moebius"]
        with pytest.raises(InvalidInput):
            coordinator.resolve(["nope"])

    def test_overrides(self):
        coordinator = build_coordinator(seed=7, field_checks=[5])
        for suite in coordinator.resolve([ALL]):
            assert suite.config.seed == 7
            assert suite.config.field_checks == [5]

    @pytest.mark.asyncio
    async def test_runs_in_canonical_order(self):
        coordinator = SuiteCoordinator()
        for suite in (MoebiusSuite(), KouchnirenkoSuite(), GRingSuite(), ToySuite()):
            coordinator.register_suite(suite)
        reports = await coordinator.run(["moebius", "kouchnirenko", "gring"])
        assert [r.suite for r in reports] == ["gring", "kouchnirenko", "moebius"]
        assert all(r.passed for r in reports), [f.to_dict() for r in reports for f in r.failures]


@pytest.mark.asyncio
@pytest.mark.parametrize("name", ["curves", "correspondence", "lifting", "strata", "example4", "genfun", "transfer"])
async def test_library_suites_pass(name):
    coordinator = build_coordinator()
    (report,) = await coordinator.run([name])
    assert report.checks
    assert report.passed, [f.to_dict() for f in report.failures]


def test_seeded_suites_are_reproducible():
    first = GRingSuite(SuiteConfig("gring", seed=11)).execute()
    second = GRingSuite(SuiteConfig("gring", seed=11)).execute()
    assert [c.to_dict() for c in first.checks] == [c.to_dict() for c in second.checks]
