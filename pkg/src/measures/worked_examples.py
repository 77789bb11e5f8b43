"""
Ejemplos resueltos: configuraciones de rectas, familias A_k, cúspides
(t^p, t^q) y el estrato de órdenes sobre los ejes.

Cada ejemplo devuelve sus clases y, vía run_example, un informe con las
comprobaciones de consistencia frente a los invariantes de curvas.
"""

import inspect
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Any, Callable, Dict, List, Tuple

from loguru import logger

from ..algebra.gring import GClass, geometric_sum
from ..algebra.series import CoeffRing, TruncSeries
from ..core.errors import InvalidInput, NotCoprime
from ..singularities.curves import Branch, CurveGerm, germ_invariants
from .strata import (
    Ambient,
    DiscriminantNonzero,
    JetStratum,
    NotAllZero,
    config_class_p1,
    measure_arc_stratum,
    measure_fun_stratum,
    projectivize,
)

L = GClass.L
P1 = L + 1


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class ExampleResult:
    """Valores de un ejemplo junto con sus comprobaciones."""
    name: str
    params: Dict[str, Any]
    values: Dict[str, Any]
    checks: List[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def check(self, name: str, lhs, rhs) -> None:
        self.checks.append(Check(name, lhs == rhs, f"{lhs} vs {rhs}"))


def _transfer_factor(germ: CurveGerm, affine: bool = True) -> GClass:
    """(L − 1)·L^(δ−k−P) para el germen representativo."""
    inv = germ_invariants(germ)
    factor = inv.correspondence
    return (L - 1) * factor if affine else factor


# --- configuraciones de rectas ------------------------------------------


def lines_germ(k: int) -> CurveGerm:
    """k ramas lisas con tangentes distintas: (t, c·t), c = 0..k−1."""
    return CurveGerm(tuple(Branch.from_polynomials({1: 1}, {1: c} if c else {}) for c in range(k)))


def example1(k: int) -> Tuple[GClass, GClass]:
    """
    Arcos lisos con tangentes distintas dos a dos.

    Returns:
        (muM, muN) con muM = [(S^k P^1)*]·L^(−k)
    """
    if k < 1:
        raise InvalidInput(f"number of branches must be >= 1, got {k}")
    config = config_class_p1(k)
    mu_m = config * GClass.monomial(-k)
    mu_n = (L - 1) * config * GClass.monomial(1 - (k + 1) * (k + 2) // 2)
    return mu_m, mu_n


# --- singularidades A_k ----------------------------------------------------


def a_germ(k: int, parity: str) -> CurveGerm:
    """Germen representativo: A_2k = (t², t^(2k+1)); A_(2k−1) = {(t, ±t^k)}."""
    if parity == "even":
        return CurveGerm.of(Branch.from_polynomials({2: 1}, {2 * k + 1: 1}))
    return CurveGerm.of(Branch.from_polynomials({1: 1}, {k: 1}), Branch.from_polynomials({1: 1}, {k: -1}))


def a_normal_form_stratum(k: int) -> JetStratum:
    """Arcos x = t² con y_1 = y_2 = 0, y_odd = 0 hasta 2k−1 e y_(2k+1) ≠ 0."""
    amb = Ambient.arc(2 * k + 1)
    zero = {amb.y(1), amb.y(2)} | {amb.y(i) for i in range(3, 2 * k, 2)}
    return JetStratum(amb, zero=zero, nonzero={amb.y(2 * k + 1)})


def example2(k: int, parity: str) -> Tuple[GClass, GClass]:
    """
    Medidas de las familias A_2k (even) y A_(2k−1) (odd).

    Args:
        k: Índice de la familia
        parity: "even" o "odd"; k = 1 con "odd" es A_1

    Returns:
        (muM, muN)
    """
    if parity not in ("even", "odd"):
        raise InvalidInput(f"parity must be 'even' or 'odd', got {parity!r}")
    if k < 1:
        raise InvalidInput(f"A-family index must be >= 1, got {k}")
    if parity == "even":
        return (
            P1 * (L - 1) * GClass.monomial(-k - 2),
            P1 * (L - 1) ** 2 * GClass.monomial(-2 * k - 4),
        )
    if k == 1:
        return GClass(1), (L - 1) * GClass.monomial(-3)
    return (
        P1 * (L - 1) * GClass.monomial(-k - 1),
        P1 * (L - 1) ** 2 * GClass.monomial(-2 * k - 3),
    )


def a1_direct() -> GClass:
    amb = Ambient.function(2)
    quad = (amb.monomial(2, 0), amb.monomial(1, 1), amb.monomial(0, 2))
    s = JetStratum(amb, zero={amb.monomial(1, 0), amb.monomial(0, 1)}, multipliers=(DiscriminantNonzero(*quad),))
    return measure_fun_stratum(s)


def example2_sum() -> Tuple[GClass, GClass]:
    """
    Suma de las medidas de todas las A_k frente al criterio directo de 2-jets.

    Returns:
        (series_sum, direct)
    """
    _, a1 = example2(1, "odd")
    family = P1 * (L - 1) ** 2
    series_sum = (
        a1
        + family * geometric_sum(GClass.monomial(-6), GClass.monomial(-2))
        + family * geometric_sum(GClass.monomial(-7), GClass.monomial(-2))
    )

    amb = Ambient.function(2)
    quad = (amb.monomial(2, 0), amb.monomial(1, 1), amb.monomial(0, 2))
    singular = JetStratum(amb, zero={amb.monomial(1, 0), amb.monomial(0, 1)}, multipliers=(NotAllZero(quad),))
    direct = measure_fun_stratum(singular)
    return series_sum, direct


def example2_partial_sum(terms: int) -> GClass:
    """Suma de los primeros términos de cada familia más A_1."""
    total = example2(1, "odd")[1]
    for k in range(1, terms + 1):
        total = total + example2(k, "even")[1]
    for k in range(2, terms + 2):
        total = total + example2(k, "odd")[1]
    return total


# --- cúspides (t^p, t^q) ----------------------------------------------------


def _require_coprime(p: int, q: int) -> None:
    if not 2 <= p < q:
        raise InvalidInput(f"expected 2 <= p < q, got ({p}, {q})")
    if gcd(p, q) != 1:
        raise NotCoprime(f"p={p} and q={q} are not coprime", {"p": p, "q": q})


def example3(p: int, q: int) -> Tuple[GClass, GClass, int, Fraction]:
    """
    Cúspide x^p + y^q.

    Returns:
        (muM, muN, c, modalidad); muN es la medida proyectivizada

    Raises:
        NotCoprime: si mcd(p, q) ≠ 1
    """
    _require_coprime(p, q)
    fl = q // p
    half = (p + 1) * (q + 1) // 2
    mu_m = P1 * (L - 1) * GClass.monomial(-q + fl - 1)
    mu_n = P1 * (L - 1) * GClass.monomial(fl - 1 - half)
    c = half - 2 - fl
    modality = Fraction(p * q, 2) - Fraction(3 * p, 2) - Fraction(3 * q, 2) + Fraction(7, 2) + fl
    return mu_m, mu_n, c, modality


def example3_affine(p: int, q: int) -> GClass:
    """(L − 1)·muN, en la normalización de las familias A_k."""
    return (L - 1) * example3(p, q)[1]


def codimension_check(p: int, q: int) -> bool:
    """c = −virtual_dim((L − 1)·muN)."""
    _, _, c, _ = example3(p, q)
    return -example3_affine(p, q).virtual_dim() == c


def kouchnirenko_count(p: int, q: int) -> int:
    """Puntos enteros de [0, q−2] × [0, p−2] estrictamente sobre px + qy = pq."""
    _require_coprime(p, q)
    return sum(1 for a in range(q - 1) for b in range(p - 1) if p * a + q * b > p * q)


# --- órdenes sobre los ejes ------------------------------------------------


def example4_stratum(i: int, j: int) -> JetStratum:
    """Funciones con ord f(x, 0) = i y ord f(0, y) = j."""
    if i < 1 or j < 1:
        raise InvalidInput(f"axis orders must be >= 1, got ({i}, {j})")
    amb = Ambient.function(max(i, j))
    zero = {amb.monomial(e, 0) for e in range(1, i)} | {amb.monomial(0, e) for e in range(1, j)}
    return JetStratum(amb, zero=zero, nonzero={amb.monomial(i, 0), amb.monomial(0, j)})


def example4_series(n: int) -> TruncSeries:
    """Forma cerrada ab·L^(−2)(L−1)²/((1 − a·L^(−1))(1 − b·L^(−1))) hasta grado n."""
    vars = ("a", "b")
    inv_l = GClass.monomial(-1)
    one = TruncSeries.one(vars, n, CoeffRing.GCLASS)
    a = TruncSeries.monomial((1, 0), GClass(1), vars, n)
    b = TruncSeries.monomial((0, 1), GClass(1), vars, n)
    head = (a * b).scale(GClass.monomial(-2) * (L - 1) ** 2)
    return head * (one - a.scale(inv_l)).recip() * (one - b.scale(inv_l)).recip()


# --- informes ----------------------------------------------------------------


def _report_example1(k: int) -> ExampleResult:
    mu_m, mu_n = example1(k)
    result = ExampleResult("ex1", {"k": k}, {"muM": mu_m, "muN": mu_n, "config": config_class_p1(k)})
    result.check("transfer", mu_n, _transfer_factor(lines_germ(k)) * mu_m)
    return result


def _report_example2(k: int, parity: str) -> ExampleResult:
    mu_m, mu_n = example2(k, parity)
    result = ExampleResult("ex2", {"k": k, "parity": parity}, {"muM": mu_m, "muN": mu_n})
    result.check("transfer", mu_n, _transfer_factor(a_germ(k, parity)) * mu_m)
    if parity == "even":
        normal = a_normal_form_stratum(k)
        result.check("normal_form", mu_m, P1 * measure_arc_stratum(normal))
        result.check("projectivization", measure_arc_stratum(normal), (L - 1) * measure_arc_stratum(projectivize(normal)))
    elif k == 1:
        result.check("a1_direct", mu_n, a1_direct())
    return result


def _report_example2_sum() -> ExampleResult:
    series_sum, direct = example2_sum()
    result = ExampleResult("ex2sum", {}, {"series_sum": series_sum, "direct": direct})
    result.check("sum_equals_direct", series_sum, direct)
    result.check("closed_form", series_sum, GClass.monomial(-2) - GClass.monomial(-5))
    return result


def _report_example3(p: int, q: int) -> ExampleResult:
    mu_m, mu_n, c, modality = example3(p, q)
    affine = example3_affine(p, q)
    result = ExampleResult(
        "ex3",
        {"p": p, "q": q},
        {"muM": mu_m, "muN": mu_n, "muN_affine": affine, "c": c, "modality": modality},
    )
    germ = CurveGerm.of(Branch.from_polynomials({p: 1}, {q: 1}))
    result.check("transfer", mu_n, _transfer_factor(germ, affine=False) * mu_m)
    result.check("codimension", -affine.virtual_dim(), c)
    result.check("kouchnirenko", modality, kouchnirenko_count(p, q))
    if p == 2:
        result.check("matches_a_even", affine, example2((q - 1) // 2, "even")[1])
    return result


def _report_example4(n: int) -> ExampleResult:
    closed = example4_series(2 * n)
    result = ExampleResult("ex4", {"n": n}, {"series": closed})
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            result.check(f"order_{i}_{j}", measure_fun_stratum(example4_stratum(i, j)), closed.coeff((i, j)))
    return result


EXAMPLES: Dict[str, Callable[..., ExampleResult]] = {
    "ex1": _report_example1,
    "ex2": _report_example2,
    "ex2sum": _report_example2_sum,
    "ex3": _report_example3,
    "ex4": _report_example4,
}


def run_example(name: str, **params) -> ExampleResult:
    """
    Ejecuta un ejemplo por nombre.

    Args:
        name: ex1, ex2, ex2sum, ex3 o ex4
        **params: Parámetros del ejemplo (k, parity, p, q, n)

    Returns:
        ExampleResult con valores y comprobaciones
    """
    if name not in EXAMPLES:
        raise InvalidInput(f"unknown example {name!r}; available: {sorted(EXAMPLES)}")
    builder = EXAMPLES[name]
    try:
        inspect.signature(builder).bind(**params)
    except TypeError as e:
        raise InvalidInput(f"bad parameters for {name}: {e}")
    result = builder(**params)
    logger.info(f"example {name} {params}: {'ok' if result.passed else 'FAILED'}")
    return result
