"""
Serie generatriz P(t̲) a partir de la combinatoria de una resolución
encajada: componentes E_s con multiplicidades ν_s y clases [E_s°],
matriz de intersección y flechas E_i ∩ γ̃_j.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

import sympy
from loguru import logger

from ..algebra.gring import GClass
from ..algebra.powstruct import measured_exp_integral, one_minus_t_pow
from ..algebra.series import CoeffRing, TruncSeries
from ..core.errors import (
    InvalidInput,
    NonIntegralExponent,
    NonPositiveDegree,
    SingularMatrix,
)
from .strata import Ambient, JetStratum, measure_arc_stratum, projectivize

L = GClass.L
ComponentId = Union[int, str]


@dataclass(frozen=True)
class Component:
    id: ComponentId
    nu: int
    euler_open_class: GClass

    def __post_init__(self):
        if self.nu < 1:
            raise InvalidInput(f"component {self.id}: nu must be >= 1, got {self.nu}")


@dataclass(frozen=True)
class ResolutionData:
    """
    Combinatoria de una resolución encajada.

    arrows contiene pares (id de componente, índice j de transformada
    estricta); cada transformada estricta corta exactamente una componente.
    """
    components: Tuple[Component, ...]
    intersections: Tuple[Tuple[int, ...], ...]
    arrows: Tuple[Tuple[ComponentId, int], ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        object.__setattr__(self, "intersections", tuple(tuple(int(v) for v in row) for row in self.intersections))
        object.__setattr__(self, "arrows", tuple((a, int(j)) for a, j in self.arrows))

        n = len(self.components)
        ids = [c.id for c in self.components]
        if len(set(ids)) != n:
            raise InvalidInput("component ids must be distinct")
        if len(self.intersections) != n or any(len(row) != n for row in self.intersections):
            raise InvalidInput(f"intersection matrix must be {n}x{n}")
        for i in range(n):
            for j in range(n):
                if self.intersections[i][j] != self.intersections[j][i]:
                    raise InvalidInput("intersection matrix must be symmetric")
        if n:
            self._check_negative_definite()

        strict = sorted(j for _, j in self.arrows)
        if strict != list(range(len(strict))):
            raise InvalidInput("each strict transform 0..r-1 must meet exactly one component")
        for comp_id, _ in self.arrows:
            if comp_id not in ids:
                raise InvalidInput(f"arrow references unknown component {comp_id!r}")

    def _check_negative_definite(self) -> None:
        matrix = sympy.Matrix(self.intersections)
        for k in range(1, matrix.rows + 1):
            minor = matrix[:k, :k].det()
            if minor == 0 or (minor > 0) != (k % 2 == 0):
                raise InvalidInput(
                    "intersection matrix is not negative definite",
                    {"leading_minor": k, "value": int(minor)},
                )

    @property
    def strict_count(self) -> int:
        return len(self.arrows)

    def index_of(self, comp_id: ComponentId) -> int:
        for i, c in enumerate(self.components):
            if c.id == comp_id:
                return i
        raise InvalidInput(f"unknown component {comp_id!r}")

    def edges(self) -> List[Tuple[int, int]]:
        n = len(self.components)
        return [(i, j) for i in range(n) for j in range(i + 1, n) if self.intersections[i][j]]


@dataclass(frozen=True)
class Monomial:
    """Monomio scale·t̲^exps con scale = L^s."""
    exps: Tuple[int, ...]
    scale: GClass = GClass(1)

    def __post_init__(self):
        object.__setattr__(self, "exps", tuple(int(e) for e in self.exps))
        if any(e < 0 for e in self.exps):
            raise InvalidInput(f"negative exponent in monomial {self.exps}")
        terms = self.scale.laurent_terms() if self.scale else {}
        if len(terms) != 1 or list(terms.values()) != [1]:
            raise InvalidInput(f"monomial scale must be a power of L, got {self.scale}")

    @property
    def degree(self) -> int:
        return sum(self.exps)

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(a + b for a, b in zip(self.exps, other.exps)), self.scale * other.scale)

    def __pow__(self, k: int) -> "Monomial":
        return Monomial(tuple(k * e for e in self.exps), self.scale ** k)


def _strict_vars(r: int) -> Tuple[str, ...]:
    if r <= 1:
        return ("t",)
    return tuple(f"t{j + 1}" for j in range(r))


def substitute_monomial(series: TruncSeries, monomial: Monomial, n: int, vars: Sequence[str]) -> TruncSeries:
    """Sustituye u → monomio en una serie univariada en u; grado total ≤ n."""
    if monomial.degree < 1:
        raise NonPositiveDegree(f"monomial {monomial.exps} has total degree {monomial.degree}")
    if len(monomial.exps) != len(vars):
        raise InvalidInput(f"monomial {monomial.exps} does not match variables {tuple(vars)}")
    coeffs = {}
    for (k,), c in series.coeffs.items():
        if k * monomial.degree > n:
            continue
        if k > series.trunc:
            continue
        coeffs[tuple(k * e for e in monomial.exps)] = GClass.coerce(c) * monomial.scale ** k
    return TruncSeries(vars, n, coeffs, CoeffRing.GCLASS)


def _primitive_at(exponent, monomial: Monomial, n: int, vars: Sequence[str]) -> TruncSeries:
    # (1 − M)^(−exponent)
    depth = n // monomial.degree
    return substitute_monomial(one_minus_t_pow(exponent, depth), monomial, n, vars)


def f_series(monomial: Monomial, n: int, exponent=1, vars: Optional[Sequence[str]] = None) -> TruncSeries:
    """
    F(M)^c = Π_k (1 − M^k)^(−c) con F(q) = Π_k 1/(1 − q^k).

    Raises:
        NonPositiveDegree: si el monomio tiene grado 0
    """
    vars = tuple(vars or _strict_vars(len(monomial.exps)))
    if monomial.degree < 1:
        raise NonPositiveDegree(f"monomial {monomial.exps} has total degree {monomial.degree}")
    result = TruncSeries.one(vars, n, CoeffRing.GCLASS)
    for k in range(1, n // monomial.degree + 1):
        result = result * _primitive_at(exponent, monomial ** k, n, vars)
    return result


def g_series(
    first: Monomial,
    second: Monomial,
    n: int,
    exponent=1,
    vars: Optional[Sequence[str]] = None,
) -> TruncSeries:
    """G(M1, M2)^c = Π_{k,m≥1} (1 − M1^k·M2^m)^(−c)."""
    vars = tuple(vars or _strict_vars(len(first.exps)))
    if first.degree < 1 or second.degree < 1:
        raise NonPositiveDegree("both monomials of G need positive degree")
    result = TruncSeries.one(vars, n, CoeffRing.GCLASS)
    for k in range(1, n // first.degree + 1):
        for m in range(1, (n - k * first.degree) // second.degree + 1):
            result = result * _primitive_at(exponent, first ** k * second ** m, n, vars)
    return result


def inverse_intersection(res: ResolutionData) -> List[List[Fraction]]:
    """
    Inversa exacta de −(E_i∘E_j).

    Raises:
        SingularMatrix: si la matriz no es invertible
    """
    matrix = -sympy.Matrix(res.intersections)
    if matrix.rows == 0:
        return []
    if matrix.det() == 0:
        raise SingularMatrix("intersection matrix is singular")
    inverse = matrix.inv()
    return [[Fraction(int(v.p), int(v.q)) for v in inverse.row(i)] for i in range(inverse.rows)]


def multiplicity_vectors(res: ResolutionData) -> List[Tuple[int, ...]]:
    """
    m̲_s[j] = Σ de m_(s,i) sobre las flechas (i, j).

    Raises:
        NonIntegralExponent: si alguna entrada no es entera
    """
    inverse = inverse_intersection(res)
    r = max(res.strict_count, 1)
    vectors = []
    for s in range(len(res.components)):
        row = [Fraction(0)] * r
        for comp_id, j in res.arrows:
            row[j] += inverse[s][res.index_of(comp_id)]
        if any(v.denominator != 1 for v in row):
            raise NonIntegralExponent(
                f"exponent vector of component {res.components[s].id} is not integral",
                {"vector": [str(v) for v in row]},
            )
        vectors.append(tuple(v.numerator for v in row))
    return vectors


def _component_monomials(res: ResolutionData) -> List[Monomial]:
    return [
        Monomial(vec, GClass.monomial(-(comp.nu + 1)))
        for vec, comp in zip(multiplicity_vectors(res), res.components)
    ]


def pgen(res: ResolutionData, n: int) -> TruncSeries:
    """
    P(t̲) = Π_s F(X_s)^[E_s°] · Π_(E_i∩E_j≠∅) G(X_i, X_j)^(L−1) · Π_(flechas) G(X_i, t_j·L^(−1))^(L−1)

    con X_s = t̲^(m̲_s)·L^(−(ν_s+1)).

    Args:
        res: Datos de la resolución
        n: Orden total de truncación

    Returns:
        Serie multivariada con coeficientes GClass
    """
    vars = _strict_vars(res.strict_count)
    result = TruncSeries.one(vars, n, CoeffRing.GCLASS)
    if not res.components:
        return result

    monomials = _component_monomials(res)
    for comp, x_s in zip(res.components, monomials):
        if comp.euler_open_class:
            result = result * f_series(x_s, n, comp.euler_open_class, vars)
    for i, j in res.edges():
        result = result * g_series(monomials[i], monomials[j], n, L - 1, vars)
    for comp_id, j in res.arrows:
        exps = tuple(1 if k == j else 0 for k in range(len(vars)))
        strict = Monomial(exps, GClass.monomial(-1))
        result = result * g_series(monomials[res.index_of(comp_id)], strict, n, L - 1, vars)

    logger.info(f"pgen: {len(res.components)} components, {res.strict_count} strict transforms, order {n}")
    return result


def pgen_euler(res: ResolutionData, n: int) -> TruncSeries:
    """
    Versión de Euler de P(t̲): Π_s Π_k (1 − t̲^(k·m̲_s))^(−χ([E_s°])).

    Los factores G llevan exponente χ(L − 1) = 0 y desaparecen.
    """
    vars = _strict_vars(res.strict_count)
    result = TruncSeries.one(vars, n)
    if not res.components:
        return result
    for vec, comp in zip(multiplicity_vectors(res), res.components):
        chi = comp.euler_open_class.euler_char()
        if chi.denominator != 1:
            raise NonIntegralExponent(f"component {comp.id} has non-integral Euler characteristic {chi}")
        degree = sum(vec)
        if degree < 1:
            raise NonPositiveDegree(f"component {comp.id} has exponent vector of degree 0")
        for k in range(1, n // degree + 1):
            base = TruncSeries(vars, n, {(0,) * len(vars): 1, tuple(k * e for e in vec): -1})
            result = result * base ** (-chi.numerator)
    return result


# --- oráculos del lado de los arcos -------------------------------------------


def arc_order_measure(n: int) -> GClass:
    """Medida proyectivizada de los arcos con ord y = n (x libre)."""
    amb = Ambient.arc(n)
    stratum = JetStratum(amb, zero={amb.y(i) for i in range(1, n)}, nonzero={amb.y(n)})
    return measure_arc_stratum(projectivize(stratum))


def smooth_arc_oracle(n: int) -> TruncSeries:
    """∫ (1 − t^(γ∘η))^(−dμ) para γ lisa: Π_k (1 − t^k)^(−μ_k)."""
    return measured_exp_integral([(k, arc_order_measure(k)) for k in range(1, n + 1)], n)


CUSP_ORACLE_ORDER = 5


def cusp_level_measures() -> Dict[int, GClass]:
    """Medidas proyectivizadas de {η : ord (y² − x³)(η) = k} para k ≤ 5."""
    arc1, arc2 = Ambient.arc(1), Ambient.arc(2)
    strata = {
        2: JetStratum(arc1, nonzero={arc1.y(1)}),
        3: JetStratum(arc1, zero={arc1.y(1)}, nonzero={arc1.x(1)}),
        4: JetStratum(arc2, zero={arc2.y(1), arc2.x(1)}, nonzero={arc2.y(2)}),
    }
    levels = {k: measure_arc_stratum(projectivize(s)) for k, s in strata.items()}
    levels[1] = GClass()
    levels[5] = GClass()
    return levels


def cusp_arc_oracle(n: int) -> TruncSeries:
    """Oráculo de arcos para la cúspide y² = x³, disponible hasta orden 5."""
    if n > CUSP_ORACLE_ORDER:
        raise InvalidInput(f"cusp arc oracle is available through order {CUSP_ORACLE_ORDER}, got {n}")
    levels = cusp_level_measures()
    return measured_exp_integral(sorted(levels.items()), n)


# --- resoluciones de referencia ---------------------------------------------


def single_blowup() -> ResolutionData:
    """Rama lisa: una explosión, E² = −1."""
    return ResolutionData(
        components=(Component(1, 1, L),),
        intersections=((-1,),),
        arrows=((1, 0),),
    )


def chain_resolution() -> ResolutionData:
    """Rama lisa con una explosión adicional en el punto de la flecha."""
    return ResolutionData(
        components=(Component(1, 1, L), Component(2, 2, L - 1)),
        intersections=((-2, 1), (1, -1)),
        arrows=((2, 0),),
    )


def cusp_resolution() -> ResolutionData:
    """Resolución mínima de la cúspide y² = x³."""
    return ResolutionData(
        components=(Component(1, 1, L), Component(2, 2, L), Component(3, 4, L - 2)),
        intersections=((-3, 0, 1), (0, -2, 1), (1, 1, -1)),
        arrows=((3, 0),),
    )


BUILTIN_RESOLUTIONS = {
    "single_blowup": single_blowup,
    "chain": chain_resolution,
    "cusp": cusp_resolution,
}
