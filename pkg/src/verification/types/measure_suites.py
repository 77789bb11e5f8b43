"""
Suites de medidas: ejemplos resueltos, oráculo sobre F_q, DSL de
estratos, conteo de Kouchnirenko y series generatrices.
"""

from functools import lru_cache, partial
from math import gcd
from typing import Iterable, Optional

from loguru import logger

from ...algebra.gring import GClass, geometric_sum
from ...algebra.powstruct import chi_image
from ...core.config import settings
from ...measures.genfun import (
    BUILTIN_RESOLUTIONS,
    chain_resolution,
    cusp_arc_oracle,
    cusp_resolution,
    pgen,
    pgen_euler,
    single_blowup,
    smooth_arc_oracle,
)
from ...measures.strata import (
    Ambient,
    JetStratum,
    builtin_strata,
    config_class_p1,
    ff_point_count,
    jet_class,
    measure,
    measure_fun_stratum,
    pad,
    projectivize,
    reduced_divisor_count,
)
from ...measures.worked_examples import (
    codimension_check,
    example2,
    example2_partial_sum,
    example3,
    example4_series,
    example4_stratum,
    kouchnirenko_count,
    run_example,
)
from ..base_suite import BaseSuite, Case, SuiteConfig

L = GClass.L


def _example_passed(name: str, **params) -> bool:
    return run_example(name, **params).passed


def _partial_sum_tail(terms: int, q: int):
    """Suma parcial más la cola geométrica exacta, especializada en q."""
    family = (L + 1) * (L - 1) ** 2
    tail = family * geometric_sum(GClass.monomial(-2 * terms - 6), GClass.monomial(-2)) + family * geometric_sum(
        GClass.monomial(-2 * terms - 7), GClass.monomial(-2)
    )
    closed = GClass.monomial(-2) - GClass.monomial(-5)
    return (example2_partial_sum(terms) + tail).specialize(q), closed.specialize(q)


class TransferSuite(BaseSuite):
    """Ejemplos de rectas, familias A_k y cúspides frente al factor de correspondencia."""

    PARTIAL_TERMS = 50

    def __init__(self, config: Optional[SuiteConfig] = None):
        super().__init__(config or SuiteConfig("transfer", "worked examples against the correspondence factor"))

    def cases(self) -> Iterable[Case]:
        for k in range(1, 7):
            yield f"lines_{k}", partial(_example_passed, "ex1", k=k)
        for k in range(1, 5):
            for parity in ("even", "odd"):
                yield f"a_{parity}_{k}", partial(_example_passed, "ex2", k=k, parity=parity)
        yield "a_sum", partial(_example_passed, "ex2sum")
        for q in (2, 3, 5):
            yield f"a_partial_sum_{q}", partial(_partial_sum_tail, self.PARTIAL_TERMS, q)
        for p, q in ((2, 3), (2, 5), (3, 4), (3, 5), (4, 7)):
            yield f"cusp_{p}_{q}", partial(_example_passed, "ex3", p=p, q=q)
        yield "a_even_affine", lambda: ((L - 1) * example3(2, 7)[1], example2(3, "even")[1])


class FFOracleSuite(BaseSuite):
    """Conteo de puntos sobre F_q frente a la especialización de [A_n]."""

    MAX_DIMENSION = 10

    def __init__(self, config: Optional[SuiteConfig] = None):
        super().__init__(config or SuiteConfig("fforacle", "finite-field point counts", field_checks=[2, 3]))

    def cases(self) -> Iterable[Case]:
        for name, stratum in sorted(builtin_strata().items()):
            if stratum.ambient.dimension > self.MAX_DIMENSION:
                logger.warning(f"fforacle: skipping {name}, dimension {stratum.ambient.dimension}")
                continue
            for q in self.config.field_checks:
                if q ** len(stratum.constrained()) > settings.ff_enumeration_limit:
                    logger.warning(f"fforacle: skipping {name} over F_{q}, above enumeration limit")
                    continue
                yield f"{name}_q{q}", partial(
                    lambda s, q: (ff_point_count(s, q), jet_class(s).specialize(q)), stratum, q
                )


class StrataSuite(BaseSuite):
    """Normalizaciones del DSL de estratos y la clase de configuraciones de P^1."""

    def __init__(self, config: Optional[SuiteConfig] = None):
        super().__init__(config or SuiteConfig("strata", "jet-stratum measures"))

    def cases(self) -> Iterable[Case]:
        yield "arc_total", lambda: (measure(JetStratum(Ambient.arc(3))), GClass(1))
        yield "function_total", lambda: (measure(JetStratum(Ambient.function(3))), GClass(1))
        yield "function_total_with_constant", lambda: (
            measure(JetStratum(Ambient.function(3, include_constant=True))),
            L,
        )
        for name, stratum in sorted(builtin_strata().items()):
            yield f"pad_{name}", partial(lambda s: (measure(pad(s, s.ambient.n + 2)), measure(s)), stratum)
            yield f"projectivize_{name}", partial(
                lambda s: ((L - 1) * measure(projectivize(s)), measure(s)), stratum
            )
        for k in range(1, 7):
            yield f"config_p1_{k}", partial(lambda k: (config_class_p1(k).specialize(2), reduced_divisor_count(k, 2)), k)


@lru_cache(maxsize=None)
def _axis_series(n: int):
    return example4_series(2 * n)


def _axis_order(i: int, j: int, n: int):
    return measure_fun_stratum(example4_stratum(i, j)), _axis_series(n).coeff((i, j))


class Example4Suite(BaseSuite):
    """Órdenes sobre los ejes: medida de cada estrato frente a la forma cerrada."""

    ORDER = 8

    def __init__(self, config: Optional[SuiteConfig] = None):
        super().__init__(config or SuiteConfig("example4", "axis-order strata"))

    def cases(self) -> Iterable[Case]:
        for i in range(1, self.ORDER + 1):
            for j in range(1, self.ORDER + 1):
                yield f"order_{i}_{j}", partial(_axis_order, i, j, self.ORDER)


class KouchnirenkoSuite(BaseSuite):
    """Fórmula de modalidad de x^p + y^q frente al conteo de puntos enteros."""

    MAX_Q = 30

    def __init__(self, config: Optional[SuiteConfig] = None):
        super().__init__(config or SuiteConfig("kouchnirenko", "modality lattice-point count"))

    def cases(self) -> Iterable[Case]:
        for q in range(3, self.MAX_Q + 1):
            for p in range(2, q):
                if gcd(p, q) != 1:
                    continue
                yield f"modality_{p}_{q}", partial(lambda p, q: (example3(p, q)[3], kouchnirenko_count(p, q)), p, q)
                yield f"codimension_{p}_{q}", partial(codimension_check, p, q)


class GenfunSuite(BaseSuite):
    """Serie generatriz desde la resolución frente a los oráculos de arcos."""

    ORACLE_ORDER = 3
    EULER_ORDER = 6

    def __init__(self, config: Optional[SuiteConfig] = None):
        super().__init__(config or SuiteConfig("genfun", "generating series from resolution data"))

    def cases(self) -> Iterable[Case]:
        n = self.ORACLE_ORDER
        yield "single_blowup_oracle", lambda: (pgen(single_blowup(), n), smooth_arc_oracle(n))
        yield "chain_oracle", lambda: (pgen(chain_resolution(), n), smooth_arc_oracle(n))
        yield "cusp_oracle", lambda: (pgen(cusp_resolution(), n), cusp_arc_oracle(n))
        for name, build in sorted(BUILTIN_RESOLUTIONS.items()):
            yield f"euler_{name}", partial(
                lambda res: (chi_image(pgen(res, self.EULER_ORDER)), pgen_euler(res, self.EULER_ORDER)),
                build(),
            )
