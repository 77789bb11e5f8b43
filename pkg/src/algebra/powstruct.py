"""
Estructura de potencia sobre Z[L, L^-1].

La primitiva (1 − t)^(−m) se define monomio a monomio por
(1 − t)^(−L^j) = (1 − L^j·t)^(−1); las potencias generales A(t)^m se
obtienen de la descomposición única A = Π_k (1 − t^k)^(−b_k).
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from loguru import logger
from sympy import factorint

from ..core.errors import (
    IdentityViolation,
    InvalidInput,
    NonPositiveOrderValue,
    NonUnitLeadingTerm,
)
from .gring import GClass
from .series import CoeffRing, TruncSeries


@dataclass(frozen=True)
class CycloFactorization:
    """Exponentes b_k de A(t) = Π_k (1 − t^k)^(−b_k) hasta el orden trunc."""
    factors: Tuple[Tuple[int, GClass], ...]
    trunc: int
    var: str = "t"

    def expand(self) -> TruncSeries:
        result = TruncSeries.one((self.var,), self.trunc, CoeffRing.GCLASS)
        for k, b in self.factors:
            result = result * one_minus_t_pow(b, self.trunc // k, self.var).substitute_power(k)
        return result.truncate(self.trunc)

    def as_dict(self) -> Dict[int, GClass]:
        return dict(self.factors)


@dataclass(frozen=True)
class MeasuredPartition:
    """Datos de conjuntos de nivel: pares (valor g, peso χ entero)."""
    entries: Tuple[Tuple[TruncSeries, int], ...] = field(default_factory=tuple)

    def __post_init__(self):
        seen = set()
        for value, weight in self.entries:
            if not isinstance(weight, int) or weight == 0:
                raise InvalidInput(f"partition weights must be nonzero integers, got {weight!r}")
            if value in seen:
                raise InvalidInput(f"duplicate partition value {value}")
            seen.add(value)

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[TruncSeries, int]]) -> "MeasuredPartition":
        """Agrupa valores repetidos sumando pesos y descarta pesos nulos."""
        merged: Dict[TruncSeries, int] = {}
        for value, weight in pairs:
            merged[value] = merged.get(value, 0) + int(weight)
        return cls(tuple((v, w) for v, w in merged.items() if w))

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def power(self, k: int, n: int) -> "MeasuredPartition":
        """Partición {(g^k, w_g)} con los valores leídos como polinomios a orden n."""
        return MeasuredPartition.from_pairs((value.padded(n) ** k, w) for value, w in self.entries)


def _geometric(j: int, n: int, var: str) -> TruncSeries:
    # (1 − L^j·t)^(−1)
    return TruncSeries((var,), n, {(k,): GClass.monomial(j * k) for k in range(n + 1)}, CoeffRing.GCLASS)


def one_minus_t_pow(m, n: int, var: str = "t") -> TruncSeries:
    """
    Primitiva (1 − t)^(−m) para m = Σ_j a_j·L^j.

    Args:
        m: Exponente, polinomio de Laurent en L
        n: Orden de truncación

    Returns:
        Π_j (1 − L^j·t)^(−a_j) hasta t^n

    Raises:
        NotLaurentPolynomial: si m no es de Laurent
    """
    terms = GClass.coerce(m).laurent_terms()
    result = TruncSeries.one((var,), n, CoeffRing.GCLASS)
    for j, a in sorted(terms.items()):
        if a > 0:
            result = result * _geometric(j, n, var) ** a
        else:
            base = TruncSeries((var,), n, {(0,): 1, (1,): -GClass.monomial(j)}, CoeffRing.GCLASS)
            result = result * base ** (-a)
    return result


def factor_cyclo(series: TruncSeries) -> CycloFactorization:
    """
    Descompone A(t) = Π_k (1 − t^k)^(−b_k) pelando órdenes k = 1, 2, … .

    Args:
        series: Serie univariada con término constante 1

    Returns:
        CycloFactorization con los b_k no nulos

    Raises:
        NonUnitLeadingTerm: si el término constante no es 1
    """
    if not series.is_univariate:
        raise InvalidInput("factor_cyclo requires a single-variable series")
    if series.constant_term != 1:
        raise NonUnitLeadingTerm(f"constant term {series.constant_term} is not 1")

    n = series.trunc
    var = series.vars[0]
    current = series.to_ring(CoeffRing.GCLASS)
    factors: List[Tuple[int, GClass]] = []
    for k in range(1, n + 1):
        b = GClass.coerce(current.coeff(k))
        if not b:
            continue
        b.laurent_terms()
        factors.append((k, b))
        current = current * one_minus_t_pow(-b, n // k, var).substitute_power(k)

    logger.debug(f"factor_cyclo: {len(factors)} factors through order {n}")
    return CycloFactorization(tuple(factors), n, var)


def power(series: TruncSeries, m, n: Optional[int] = None) -> TruncSeries:
    """
    A(t)^m en la estructura de potencia geométrica.

    Args:
        series: Serie con término constante 1
        m: Exponente de Laurent en L
        n: Orden de truncación (por defecto el de la serie)

    Returns:
        Π_k (1 − t^k)^(−m·b_k)
    """
    n = series.trunc if n is None else min(n, series.trunc)
    m = GClass.coerce(m)
    m.laurent_terms()
    factorization = factor_cyclo(series.truncate(n))
    var = factorization.var
    result = TruncSeries.one((var,), n, CoeffRing.GCLASS)
    for k, b in factorization.factors:
        result = result * one_minus_t_pow(m * b, n // k, var).substitute_power(k)
    return result.truncate(n)


def sym_power_class(m, k: int) -> GClass:
    """Clase de S^k de un cilindro de medida m: coeficiente de t^k en (1 − t)^(−m)."""
    if k < 0:
        raise InvalidInput(f"symmetric power index must be >= 0, got {k}")
    return GClass.coerce(one_minus_t_pow(m, k).coeff(k))


def _factor(value: TruncSeries, weight: int, n: int) -> TruncSeries:
    value = value.padded(n)
    if value.constant_term:
        raise NonPositiveOrderValue(f"partition value {value} has order 0")
    base = 1 - value
    return base.recip() ** weight if weight > 0 else base ** (-weight)


def chi_exp_integral(partition: MeasuredPartition, n: int, var: str = "t") -> TruncSeries:
    """
    Integral Π_g (1 − g)^(−w_g) sobre la unión de potencias simétricas.

    Args:
        partition: Conjuntos de nivel con pesos χ
        n: Orden de truncación

    Returns:
        Serie exacta hasta t^n

    Raises:
        NonPositiveOrderValue: si algún valor tiene orden 0
    """
    ring = CoeffRing.ZZ
    for value, _ in partition:
        ring = ring.join(value.ring)
    result = TruncSeries.one((var,), n, ring)
    for value, weight in partition:
        result = result * _factor(value, weight, n)
    return result


def moebius(n: int) -> int:
    if n < 1:
        raise InvalidInput(f"moebius is defined for n >= 1, got {n}")
    exponents = factorint(n)
    if any(e > 1 for e in exponents.values()):
        return 0
    return -1 if len(exponents) % 2 else 1


def _useful_powers(partition: MeasuredPartition, n: int, step: int = 1) -> List[int]:
    orders = [v.padded(n).order() for v, _ in partition]
    low = min(orders, default=n + 1)
    if low > n:
        return []
    return [k for k in range(step, n + 1, step) if k * low <= n]


def level_set_product(partition: MeasuredPartition, n: int, step: int = 1) -> TruncSeries:
    """Producto Π_{r≥1} ∫ (1 − g^(step·r))^(−w): un factor por cada potencia visible."""
    result = TruncSeries.one(("t",), n)
    for k in _useful_powers(partition, n, step):
        result = result * chi_exp_integral(partition.power(k, n), n)
    return result


def level_set_check(partition: MeasuredPartition, n: int) -> Tuple[TruncSeries, TruncSeries]:
    """
    Ambos lados de la identidad de productos sobre conjuntos de nivel.

    El lado izquierdo agrupa todos los pares (g^k, w_g) en una sola
    partición (descomposición por el orden de h); el derecho multiplica
    las integrales de cada fibra por separado.

    Returns:
        (lhs, rhs), exactas hasta t^n
    """
    merged = MeasuredPartition.from_pairs(
        (value.padded(n) ** k, w)
        for k in _useful_powers(partition, n)
        for value, w in partition
    )
    lhs = chi_exp_integral(merged, n)
    rhs = level_set_product(partition, n)
    logger.debug(f"level_set_check: {len(merged)} merged level sets at order {n}")
    return lhs, rhs


def moebius_inversion_check(partition: MeasuredPartition, n: int) -> Tuple[TruncSeries, TruncSeries]:
    """
    Inversión de Moebius: Π_k (lhs_k)^μ(k) frente al factor k = 1.

    Returns:
        (producto de Moebius, Π_g (1 − g)^(−w_g))
    """
    result = TruncSeries.one(("t",), n)
    for k in range(1, n + 1):
        mu = moebius(k)
        if not mu:
            continue
        factor = level_set_product(partition, n, step=k)
        result = result * (factor if mu > 0 else factor.recip())
    return result, chi_exp_integral(partition, n)


def chi_image(series: TruncSeries) -> TruncSeries:
    """Aplica euler_char coeficiente a coeficiente."""
    values = {e: GClass.coerce(c).euler_char() for e, c in series.coeffs.items()}
    ring = CoeffRing.ZZ if all(v.denominator == 1 for v in values.values()) else CoeffRing.QQ
    return TruncSeries(series.vars, series.trunc, values, ring)


def integer_power(series: TruncSeries, m: int) -> TruncSeries:
    """Estructura de potencia sobre Z: la potencia usual de series."""
    if isinstance(m, Fraction):
        if m.denominator != 1:
            raise InvalidInput(f"integer power structure needs an integer exponent, got {m}")
        m = m.numerator
    if series.constant_term != 1:
        raise NonUnitLeadingTerm(f"constant term {series.constant_term} is not 1")
    return series ** m


def macdonald_check(series: TruncSeries, m, n: Optional[int] = None) -> Tuple[TruncSeries, TruncSeries]:
    """
    Compatibilidad con χ: (χ(A^m), (χA)^χ(m)).

    Raises:
        PoleAtOne: si algún coeficiente no tiene característica de Euler
    """
    m = GClass.coerce(m)
    lhs = chi_image(power(series, m, n))
    rhs = integer_power(chi_image(series.truncate(lhs.trunc)), m.euler_char())
    return lhs, rhs


def measured_exp_integral(
    levels: Sequence[Tuple[int, GClass]],
    n: int,
    var: str = "t",
) -> TruncSeries:
    """
    Exponencial motívica Π_k (1 − t^k)^(−μ_k) con medidas de Laurent.

    Args:
        levels: Pares (orden k ≥ 1, medida μ_k del conjunto de nivel)
        n: Orden de truncación

    Returns:
        Serie en t con coeficientes GClass
    """
    result = TruncSeries.one((var,), n, CoeffRing.GCLASS)
    for k, mu in levels:
        if k < 1:
            raise NonPositiveOrderValue(f"level order must be positive, got {k}")
        if k > n or not mu:
            continue
        result = result * one_minus_t_pow(mu, n // k, var).substitute_power(k)
    return result.truncate(n)


def check_identity(name: str, lhs, rhs) -> None:
    """Eleva IdentityViolation si los dos lados difieren."""
    if lhs != rhs:
        raise IdentityViolation(f"{name} failed", {"lhs": str(lhs), "rhs": str(rhs)})
