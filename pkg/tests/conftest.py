"""Fixtures compartidas."""

from random import Random

import pytest

from src.algebra.gring import GClass
from src.core.config import settings
from src.singularities.curves import Branch, CurveGerm


@pytest.fixture
def L() -> GClass:
    return GClass.L


@pytest.fixture
def rng() -> Random:
    return Random(settings.seed)


@pytest.fixture
def cusp_branch() -> Branch:
    return Branch.from_polynomials({2: 1}, {3: 1})


@pytest.fixture
def node() -> CurveGerm:
    return CurveGerm.of(Branch.from_polynomials({1: 1}, {}), Branch.from_polynomials({}, {1: 1}))


@pytest.fixture
def override_settings(monkeypatch):
    """Cambia campos del singleton settings solo durante el test."""

    def apply(**values):
        for key, value in values.items():
            monkeypatch.setattr(settings, key, value)

    return apply
