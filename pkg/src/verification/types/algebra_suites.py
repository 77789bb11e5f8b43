"""
Suites de propiedades algebraicas: cuerpo de clases, axiomas de la
estructura de potencia, compatibilidad con χ e inversión de Moebius.
"""

from functools import partial
from random import Random
from typing import Iterable, Optional

from ...algebra.gring import GClass, parse_class
from ...algebra.powstruct import (
    moebius_inversion_check,
    macdonald_check,
    moebius,
    power,
    level_set_check,
)
from ...algebra.series import CoeffRing, TruncSeries
from ...core.errors import PoleAtQ
from ..base_suite import BaseSuite, Case, SuiteConfig
from ..sampling import random_class, random_laurent, random_partition, random_unit_series


def _specialize_hom(a: GClass, b: GClass, q: int) -> bool:
    try:
        return (a * b).specialize(q) == a.specialize(q) * b.specialize(q) and (
            (a + b).specialize(q) == a.specialize(q) + b.specialize(q)
        )
    except PoleAtQ:
        # no definido en q
        return True


def _inverse(a: GClass):
    if not a:
        return True
    return a * a.inverse(), GClass(1)


class GRingSuite(BaseSuite):
    """Axiomas de cuerpo, especialización y lectura de clases."""

    INSTANCES = 50

    def __init__(self, config: Optional[SuiteConfig] = None):
        super().__init__(config or SuiteConfig("gring", "field axioms and specialization"))

    def cases(self) -> Iterable[Case]:
        rng = Random(self.config.seed)
        for i in range(self.INSTANCES):
            a, b, c = random_class(rng), random_class(rng), random_class(rng)
            q = rng.choice(self.config.field_checks)
            yield f"assoc_{i}", partial(lambda a, b, c: ((a + b) + c, a + (b + c)), a, b, c)
            yield f"distrib_{i}", partial(lambda a, b, c: (a * (b + c), a * b + a * c), a, b, c)
            yield f"inverse_{i}", partial(_inverse, a)
            yield f"specialize_{i}", partial(_specialize_hom, a, b, q)
            yield f"parse_{i}", partial(lambda a: (parse_class(str(a)), a), a)


# --- estructura de potencia ---------------------------------------------


def _axiom_zero(a, m, b, k, n):
    return power(a, 0), TruncSeries.one(("t",), n, CoeffRing.GCLASS)


def _axiom_one(a, m, b, k, n):
    return power(a, 1), a


def _axiom_product(a, m, b, k, n):
    return power(a * b, m), power(a, m) * power(b, m)


def _axiom_sum(a, m, b, k, n):
    other = random_laurent(Random(k), spread=1)
    return power(a, m + other), power(a, m) * power(a, other)


def _axiom_composition(a, m, b, k, n):
    other = random_laurent(Random(k), spread=1, terms=1)
    return power(a, m * other), power(power(a, other), m)


def _axiom_linear_term(a, m, b, k, n):
    one_plus_t = TruncSeries.from_list([1, 1], trunc=n)
    return GClass.coerce(power(one_plus_t, m).coeff(1)), m


def _axiom_substitution(a, m, b, k, n):
    step = 2 + k % 2
    return power(a.substitute_power(step), m, n), power(a, m).substitute_power(step).truncate(n)


AXIOMS = (
    ("zero", _axiom_zero),
    ("one", _axiom_one),
    ("product", _axiom_product),
    ("sum", _axiom_sum),
    ("composition", _axiom_composition),
    ("linear_term", _axiom_linear_term),
    ("substitution", _axiom_substitution),
)


class PowStructSuite(BaseSuite):
    """Los siete axiomas de la estructura de potencia con exponentes de Laurent."""

    INSTANCES = 200

    def __init__(self, config: Optional[SuiteConfig] = None):
        super().__init__(config or SuiteConfig("powstruct", "power-structure axioms"))

    def cases(self) -> Iterable[Case]:
        rng = Random(self.config.seed)
        n = self.config.precision
        for i in range(self.INSTANCES):
            label, axiom = AXIOMS[i % len(AXIOMS)]
            a = random_unit_series(rng, n)
            b = random_unit_series(rng, n)
            m = random_laurent(rng, spread=1)
            yield f"{label}_{i}", partial(axiom, a, m, b, rng.randrange(1 << 30), n)


class ChiSuite(BaseSuite):
    """χ(A^m) = (χA)^χ(m) coeficiente a coeficiente."""

    INSTANCES = 100

    def __init__(self, config: Optional[SuiteConfig] = None):
        super().__init__(config or SuiteConfig("chi", "Euler characteristic compatibility"))

    def cases(self) -> Iterable[Case]:
        rng = Random(self.config.seed + 1)
        n = self.config.precision
        for i in range(self.INSTANCES):
            a = random_unit_series(rng, n)
            m = random_laurent(rng)
            yield f"macdonald_{i}", partial(macdonald_check, a, m, n)


class MoebiusSuite(BaseSuite):
    """Producto sobre potencias de los conjuntos de nivel y su inversión."""

    PARTITIONS = 3
    ORDER = 12

    def __init__(self, config: Optional[SuiteConfig] = None):
        super().__init__(config or SuiteConfig("moebius", "level-set products and Moebius inversion"))

    def cases(self) -> Iterable[Case]:
        yield "moebius_values", lambda: ([moebius(k) for k in range(1, 11)], [1, -1, -1, 0, -1, 1, -1, 0, 0, 1])
        rng = Random(self.config.seed + 2)
        for i in range(self.PARTITIONS):
            partition = random_partition(rng, self.ORDER)
            yield f"product_{i}", partial(level_set_check, partition, self.ORDER)
            yield f"inversion_{i}", partial(moebius_inversion_check, partition, self.ORDER)
