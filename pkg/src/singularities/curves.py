"""
Geometría de ramas planas a partir de parametrizaciones.

Explosiones, sucesión de multiplicidades, multiplicidad de intersección
(recursión de Noether), δ, número de Milnor, P(γ), degeneración y los
factores de correspondencia entre medidas de funciones y de arcos.
"""

from dataclasses import dataclass, replace
from fractions import Fraction
from math import gcd
from typing import Callable, Dict, List, Optional, Tuple, TypeVar, Union

from loguru import logger
from sympy import divisors

from ..algebra.gring import GClass
from ..algebra.series import CoeffRing, TruncSeries, exact_root
from ..core.config import settings
from ..core.errors import (
    CoincidentBranches,
    DegenerateBranch,
    EquationDoesNotVanish,
    IdentityViolation,
    InvalidInput,
    NoRootInField,
    PrecisionExhausted,
)
from .plane_poly import PlanePoly

POINT_AT_INFINITY = "inf"

TangentPoint = Union[Fraction, str]
T = TypeVar("T")


@dataclass(frozen=True)
class Branch:
    """Rama parametrizada (x(t), y(t)); exact marca polinomios completos."""
    x: TruncSeries
    y: TruncSeries
    exact: bool = False

    def __post_init__(self):
        for name, comp in (("x", self.x), ("y", self.y)):
            if not comp.is_univariate:
                raise InvalidInput(f"branch component {name} must be a single-variable series")
            if comp.constant_term:
                raise InvalidInput(f"branch component {name} must vanish at t=0")
        if self.x.vars != self.y.vars:
            raise InvalidInput(f"branch components use different variables {self.x.vars}, {self.y.vars}")
        if self.exact and self.x.is_zero() and self.y.is_zero():
            raise InvalidInput("branch with both components identically zero")

    @classmethod
    def from_polynomials(
        cls,
        x: Dict[int, Union[int, Fraction]],
        y: Dict[int, Union[int, Fraction]],
        trunc: Optional[int] = None,
        var: str = "t",
    ) -> "Branch":
        """Rama exacta desde {exponente: coeficiente} para cada componente."""
        top = max(list(x) + list(y) + [1])
        trunc = max(trunc or settings.default_precision, top)
        return cls(
            TruncSeries((var,), trunc, {(e,): c for e, c in x.items()}),
            TruncSeries((var,), trunc, {(e,): c for e, c in y.items()}),
            exact=True,
        )

    @property
    def trunc(self) -> int:
        return min(self.x.trunc, self.y.trunc)

    def orders(self) -> Tuple[int, int]:
        return self.x.order(), self.y.order()

    def at_precision(self, n: int) -> "Branch":
        if self.exact:
            return replace(self, x=self.x.padded(n), y=self.y.padded(n))
        return replace(self, x=self.x.truncate(n), y=self.y.truncate(n))

    def swap(self) -> "Branch":
        return replace(self, x=self.y, y=self.x)

    def polynomial_degree(self) -> int:
        return max(self.x.degree(), self.y.degree(), 1)

    def __str__(self) -> str:
        return f"({self.x}, {self.y})"


@dataclass(frozen=True)
class CurveGerm:
    """Multiconjunto no vacío de ramas distintas."""
    branches: Tuple[Branch, ...]

    def __post_init__(self):
        if not self.branches:
            raise InvalidInput("a curve germ needs at least one branch")

    @classmethod
    def of(cls, *branches: Branch) -> "CurveGerm":
        return cls(tuple(branches))

    @property
    def k(self) -> int:
        return len(self.branches)

    @property
    def exact(self) -> bool:
        return all(b.exact for b in self.branches)

    def at_precision(self, n: int) -> "CurveGerm":
        return CurveGerm(tuple(b.at_precision(n) for b in self.branches))


@dataclass(frozen=True)
class BlowUp:
    branch: Branch
    multiplicity: int
    point: TangentPoint


@dataclass(frozen=True)
class DegeneracyWitness:
    """Factorización x = x*(h), y = y*(h) de la forma normal con ord h = d."""
    d: int
    h: TruncSeries
    x_star: TruncSeries
    y_star: TruncSeries
    normal_form: Branch


@dataclass(frozen=True)
class GermInvariants:
    v: int
    k: int
    delta: int
    milnor: int
    p: int
    correspondence: GClass
    arc_weight: GClass
    abstract_weight: GClass


Germ = Union[Branch, CurveGerm]


def as_germ(g: Germ) -> CurveGerm:
    return g if isinstance(g, CurveGerm) else CurveGerm.of(g)


# --- órdenes y explosiones ---------------------------------------------


def _branch_order(b: Branch) -> int:
    vx, vy = b.orders()
    v = min(vx, vy)
    if vx > b.x.trunc and vy > b.y.trunc:
        raise PrecisionExhausted(
            f"branch vanishes through order {b.trunc}", {"trunc": b.trunc}
        )
    return v


def order_v(g: Germ) -> int:
    """
    Orden v de una rama, o la suma sobre las ramas de un germen.

    Raises:
        PrecisionExhausted: si alguna rama se anula hasta la truncación
    """
    if isinstance(g, Branch):
        return _branch_order(g)
    return sum(_branch_order(b) for b in g.branches)


def blow_up(b: Branch) -> BlowUp:
    """
    Transformada estricta por la explosión del origen.

    Carta (x, y/x) si v_x ≤ v_y, si no (x/y, y); la transformada se traslada
    para pasar por el origen y point guarda la coordenada del punto
    excepcional (o POINT_AT_INFINITY en la segunda carta).

    Returns:
        BlowUp con la rama transformada, la multiplicidad y el punto

    Raises:
        PrecisionExhausted: si los órdenes no se ven a la precisión actual
    """
    vx, vy = b.orders()
    x = b.x.to_ring(CoeffRing.QQ)
    y = b.y.to_ring(CoeffRing.QQ)

    if vx <= b.x.trunc and vx <= vy:
        m = vx
        ratio = y.lower(m) * x.lower(m).recip()
        point = Fraction(ratio.constant_term)
        transformed = Branch(x, ratio - point)
    elif vy <= b.y.trunc and vy < vx:
        m = vy
        transformed = Branch(x.lower(m) * y.lower(m).recip(), y)
        point = POINT_AT_INFINITY
    else:
        raise PrecisionExhausted(
            f"cannot choose a blow-up chart at truncation {b.trunc}",
            {"trunc": b.trunc, "orders": [vx, vy]},
        )

    logger.debug(f"blow_up: m={m}, point={point}, trunc {b.trunc} -> {transformed.trunc}")
    return BlowUp(transformed, m, point)


def mult_sequence(b: Branch) -> List[int]:
    """
    Sucesión de multiplicidades [m_0, m_1, …] hasta que la rama es lisa.

    Args:
        b: Rama no degenerada

    Returns:
        Multiplicidades mayores que 1

    Raises:
        DegenerateBranch: si la rama factoriza por una reparametrización
    """
    def run(germ: CurveGerm) -> List[int]:
        branch = germ.branches[0]
        _require_nondegenerate(branch)
        return _mult_sequence_at(branch)

    return adaptive(run, b)


def _mult_sequence_at(b: Branch) -> List[int]:
    sequence: List[int] = []
    while True:
        m = order_v(b)
        if m == 1:
            return sequence
        sequence.append(m)
        b = blow_up(b).branch


# --- formas normales y coincidencia --------------------------------------


def _normal_form(b: Branch, keep_scale: bool) -> Tuple[Branch, bool]:
    """Reparametriza para que la componente de menor orden sea c·t^a (o t^a)."""
    vx, vy = b.orders()
    use_x = vx <= b.x.trunc and vx <= vy
    if not use_x and vy > b.y.trunc:
        raise PrecisionExhausted(f"branch vanishes through order {b.trunc}", {"trunc": b.trunc})
    main, other = (b.x, b.y) if use_x else (b.y, b.x)
    a = main.order()

    main = main.to_ring(CoeffRing.QQ)
    other = other.to_ring(CoeffRing.QQ)
    unit = main.lower(a)
    c = unit.constant_term
    target = c if keep_scale else 1

    if len(unit.coeffs) == 1 and c == target:
        return b, use_x

    root = 1 if keep_scale else exact_root(c, a)
    w = unit.scale(Fraction(1) / c).nth_root_unit(a).scale(root)
    s = w.shift(1)
    h = s.reversion()
    other = other.compose(h)
    trunc = other.trunc
    main = TruncSeries(main.vars, trunc, {(a,): target}, CoeffRing.QQ)

    normal = Branch(main, other) if use_x else Branch(other, main)
    logger.debug(f"normal form: a={a}, keep_scale={keep_scale}, trunc {b.trunc} -> {trunc}")
    return normal, use_x


def normalize(b: Branch) -> Branch:
    """
    Reparametriza la rama para que su componente de menor orden sea t^a.

    Raises:
        NoRootInField: si el coeficiente principal no tiene raíz a-ésima racional
    """
    return _normal_form(b, keep_scale=False)[0]


def _rescaled(s: TruncSeries, lam: Fraction) -> TruncSeries:
    """Sustitución t → λ·t."""
    coeffs = {(e,): Fraction(v) * lam**e for (e,), v in s.coeffs.items()}
    return TruncSeries(s.vars, s.trunc, coeffs, CoeffRing.QQ)


def germ_is_coincident(b1: Branch, b2: Branch) -> bool:
    """
    Compara dos ramas como gérmenes parametrizados hasta la precisión común.

    Tras la forma normal x = c·t^a, una rama se lleva a la otra por t → λ·t
    con λ^a = c₂/c₁ (y además t → −t cuando a es par). Solo se consideran
    λ racionales.
    """
    n1, x_first1 = _normal_form(b1, keep_scale=True)
    n2, x_first2 = _normal_form(b2, keep_scale=True)
    if x_first1 != x_first2:
        return False
    main1, other1 = (n1.x, n1.y) if x_first1 else (n1.y, n1.x)
    main2, other2 = (n2.x, n2.y) if x_first2 else (n2.y, n2.x)
    a = main1.order()
    if main2.order() != a:
        return False

    c1, c2 = Fraction(main1.coeffs[(a,)]), Fraction(main2.coeffs[(a,)])
    if c1 != c2:
        try:
            lam = exact_root(c2 / c1, a)
        except NoRootInField:
            return False
        other1 = _rescaled(other1, lam)

    n = min(other1.trunc, other2.trunc)
    if other1.equal_through(other2, n):
        return True
    if a % 2:
        return False
    return _rescaled(other1, Fraction(-1)).equal_through(other2, n)


def _check_distinct(b1: Branch, b2: Branch) -> None:
    if b1.exact and b2.exact and b1.x.coeffs == b2.x.coeffs and b1.y.coeffs == b2.y.coeffs:
        raise CoincidentBranches("identical exact branches", {"branch": str(b1)})
    if germ_is_coincident(b1, b2):
        if b1.exact and b2.exact:
            raise PrecisionExhausted(
                f"branches agree through order {min(b1.trunc, b2.trunc)}",
                {"coincident": True, "trunc": min(b1.trunc, b2.trunc)},
            )
        raise CoincidentBranches(
            "branches coincide through working precision",
            {"left": str(b1), "right": str(b2)},
        )


def intersection(b1: Branch, b2: Branch) -> int:
    """
    Multiplicidad de intersección en el origen por la recursión de Noether.

    Raises:
        CoincidentBranches: si las ramas coinciden hasta la precisión de trabajo
        PrecisionExhausted: si la precisión no alcanza para separarlas
    """
    return adaptive(lambda germ: _intersection_at(*germ.branches), CurveGerm.of(b1, b2))


def _intersection_at(b1: Branch, b2: Branch) -> int:
    _check_distinct(b1, b2)
    total = 0
    while True:
        m1, m2 = order_v(b1), order_v(b2)
        total += m1 * m2
        up1, up2 = blow_up(b1), blow_up(b2)
        if up1.point != up2.point:
            return total
        b1, b2 = up1.branch, up2.branch


# --- degeneración --------------------------------------------------------


def degeneracy_witness(b: Branch) -> Optional[DegeneracyWitness]:
    """
    Busca h con ord h = d ≥ 2, d | mcd(v_x, v_y), tal que la rama factorice.

    Sobre la forma normal x = c·t^a cada coeficiente de y con exponente
    divisible por d fija un coeficiente de y*, y los demás deben anularse;
    un solo coeficiente no nulo fuera de d·N descarta ese d.

    Returns:
        Testigo de degeneración, o None
    """
    vx, vy = b.orders()
    known = [v for v, comp in ((vx, b.x), (vy, b.y)) if v <= comp.trunc]
    if not known:
        raise PrecisionExhausted(f"branch vanishes through order {b.trunc}", {"trunc": b.trunc})
    g = 0
    for v in known:
        g = gcd(g, v)
    if g < 2:
        return None

    normal, x_first = _normal_form(b, keep_scale=True)
    main, other = (normal.x, normal.y) if x_first else (normal.y, normal.x)
    a = main.order()

    for d in sorted(divisors(g)):
        if d < 2:
            continue
        if any(e % d for (e,), _ in other.coeffs.items()):
            continue
        var = main.vars
        trunc = other.trunc
        h = TruncSeries(var, trunc, {(d,): 1})
        main_star = TruncSeries(var, trunc // d, {(a // d,): main.coeffs[(a,)]})
        other_star = TruncSeries(var, trunc // d, {(e // d,): c for (e,), c in other.coeffs.items()})
        x_star, y_star = (main_star, other_star) if x_first else (other_star, main_star)
        logger.debug(f"degenerate branch: d={d}, trunc={trunc}")
        return DegeneracyWitness(d, h, x_star, y_star, normal)
    return None


def is_degenerate(b: Branch) -> bool:
    return degeneracy_witness(b) is not None


# --- precisión adaptativa ------------------------------------------------


def _initial_precision(g: CurveGerm) -> int:
    n = 4
    for b in g.branches:
        vx, vy = b.orders()
        vx = vx if vx <= b.x.trunc else 0
        vy = vy if vy <= b.y.trunc else 0
        n = max(n, 2 * (vx + vy) + 4, 2 * b.polynomial_degree())
    return n


def adaptive(fn: Callable[[CurveGerm], T], g: Germ, precision: Optional[int] = None) -> T:
    """
    Ejecuta fn bajo precisión adaptativa.

    Las entradas no exactas se evalúan a su precisión nativa. Las exactas
    empiezan en N0 = 2·(v_x + v_y) + 4 y duplican la precisión hasta que dos
    niveles consecutivos coinciden o se alcanza settings.max_precision.

    Raises:
        CoincidentBranches: si las ramas exactas coinciden hasta la precisión máxima
        PrecisionExhausted: si ni la precisión máxima alcanza
    """
    germ = as_germ(g)
    if not germ.exact:
        return fn(germ)

    n = precision or _initial_precision(germ)
    previous: Optional[T] = None
    found = False
    last_error: Optional[PrecisionExhausted] = None
    while n <= settings.max_precision:
        try:
            value = fn(germ.at_precision(n))
        except PrecisionExhausted as e:
            logger.debug(f"precision {n} exhausted: {e}")
            last_error = e
            found = False
            n *= 2
            continue
        if found and value == previous:
            return value
        previous, found = value, True
        n *= 2

    if found:
        logger.warning(f"result not confirmed below max precision {settings.max_precision}")
        return previous
    if last_error is not None and last_error.details.get("coincident"):
        raise CoincidentBranches(
            f"exact branches agree through order {settings.max_precision}",
            last_error.details,
        )
    raise PrecisionExhausted(
        f"no stable result up to precision {settings.max_precision}",
        {"max_precision": settings.max_precision},
    )


# --- invariantes ---------------------------------------------------------


def _require_nondegenerate(b: Branch) -> None:
    witness = degeneracy_witness(b)
    if witness is not None:
        raise DegenerateBranch(
            f"branch factors through a reparametrization of order {witness.d}",
            {"d": witness.d, "branch": str(b)},
        )


def _delta_at(germ: CurveGerm) -> int:
    total = 0
    for b in germ.branches:
        _require_nondegenerate(b)
        total += sum(m * (m - 1) // 2 for m in _mult_sequence_at(b))
    branches = germ.branches
    for i in range(len(branches)):
        for j in range(i + 1, len(branches)):
            total += _intersection_at(branches[i], branches[j])
    return total


def delta(g: Germ) -> int:
    """
    Invariante δ = Σ_i Σ_m m(m−1)/2 + Σ_{i<j} γ_i∘γ_j.

    Raises:
        DegenerateBranch: si alguna rama es degenerada
        CoincidentBranches: si dos ramas coinciden
    """
    return adaptive(_delta_at, g)


def milnor(g: Germ) -> int:
    germ = as_germ(g)
    return 2 * delta(germ) - germ.k + 1


def p_invariant(g: Germ) -> int:
    """P(γ) = μ + v − 1."""
    germ = as_germ(g)
    return milnor(germ) + adaptive(order_v, germ) - 1


def _p_direct_at(germ: CurveGerm, f: PlanePoly) -> int:
    fx, fy = f.partial_x(), f.partial_y()
    total = 0
    for b in germ.branches:
        value = f.evaluate(b.x, b.y)
        if not value.is_zero():
            raise EquationDoesNotVanish(
                f"equation {f} does not vanish on branch {b}",
                {"order": value.order(), "trunc": value.trunc},
            )
        ox = fx.evaluate(b.x, b.y)
        oy = fy.evaluate(b.x, b.y)
        if ox.is_zero() and oy.is_zero():
            raise PrecisionExhausted(
                f"partial derivatives vanish through order {ox.trunc}", {"trunc": ox.trunc}
            )
        total += min(ox.order(), oy.order())
    return total


def p_direct(g: Germ, f: PlanePoly) -> int:
    """
    P(γ) desde una ecuación: Σ_i min(ord f_x(γ_i), ord f_y(γ_i)).

    Raises:
        EquationDoesNotVanish: si f no se anula sobre alguna rama
    """
    return adaptive(lambda germ: _p_direct_at(germ, f), g)


def germ_invariants(g: Germ) -> GermInvariants:
    """
    Todos los invariantes de un germen y sus factores de correspondencia.

    Raises:
        IdentityViolation: si L^(δ−k−P) ≠ L^(−δ−v)
    """
    germ = as_germ(g)
    d = delta(germ)
    v = adaptive(order_v, germ)
    mu = 2 * d - germ.k + 1
    p = mu + v - 1
    factor = GClass.monomial(d - germ.k - p)
    abstract = GClass.monomial(-d - v)
    if factor != abstract:
        raise IdentityViolation(
            "correspondence factor disagrees with the abstract weight",
            {"factor": str(factor), "abstract": str(abstract)},
        )
    logger.info(f"germ invariants: v={v}, k={germ.k}, delta={d}, mu={mu}, P={p}")
    return GermInvariants(
        v=v,
        k=germ.k,
        delta=d,
        milnor=mu,
        p=p,
        correspondence=factor,
        arc_weight=GClass.monomial(-d),
        abstract_weight=abstract,
    )


def correspondence_factor(g: Germ) -> GClass:
    """Factor universal L^(δ−k−P) entre medidas de funciones y de arcos."""
    return germ_invariants(g).correspondence


def arc_weight(g: Germ) -> GClass:
    return germ_invariants(g).arc_weight


def abstract_weight(g: Germ) -> GClass:
    return germ_invariants(g).abstract_weight


# --- corpus --------------------------------------------------------------


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    germ: CurveGerm
    equation: Optional[PlanePoly]
    description: str


def _monomial_branch(p: int, q: int) -> Branch:
    return Branch.from_polynomials({p: 1}, {q: 1})


def torus_knot(p: int, q: int) -> CorpusEntry:
    """Rama (t^p, t^q) con ecuación y^p − x^q."""
    if gcd(p, q) != 1:
        raise InvalidInput(f"torus knot exponents must be coprime, got ({p}, {q})")
    return CorpusEntry(
        name=f"cusp_{p}_{q}",
        germ=CurveGerm.of(_monomial_branch(p, q)),
        equation=PlanePoly({(0, p): 1, (q, 0): -1}),
        description=f"(t^{p}, t^{q})",
    )


def corpus() -> Dict[str, CorpusEntry]:
    """Gérmenes de referencia con sus ecuaciones."""
    line_x = Branch.from_polynomials({1: 1}, {})
    line_y = Branch.from_polynomials({}, {1: 1})
    diagonal = Branch.from_polynomials({1: 1}, {1: 1})

    entries = [
        CorpusEntry("smooth", CurveGerm.of(line_x), PlanePoly({(0, 1): 1}), "(t, 0)"),
        CorpusEntry(
            "parabola",
            CurveGerm.of(Branch.from_polynomials({1: 1}, {2: 1})),
            PlanePoly({(0, 1): 1, (2, 0): -1}),
            "(t, t^2)",
        ),
        CorpusEntry("cusp", CurveGerm.of(_monomial_branch(2, 3)), PlanePoly({(0, 2): 1, (3, 0): -1}), "(t^2, t^3)"),
        CorpusEntry("node", CurveGerm.of(line_x, line_y), PlanePoly({(1, 1): 1}), "{(t, 0), (0, t)}"),
        CorpusEntry(
            "three_lines",
            CurveGerm.of(line_x, line_y, diagonal),
            PlanePoly({(2, 1): 1, (1, 2): -1}),
            "{(t, 0), (0, t), (t, t)}",
        ),
        CorpusEntry(
            "tacnode",
            CurveGerm.of(Branch.from_polynomials({1: 1}, {2: 1}), Branch.from_polynomials({1: 1}, {2: -1})),
            PlanePoly({(0, 2): 1, (4, 0): -1}),
            "{(t, t^2), (t, -t^2)}",
        ),
        CorpusEntry(
            "a5",
            CurveGerm.of(Branch.from_polynomials({1: 1}, {3: 1}), Branch.from_polynomials({1: 1}, {3: -1})),
            PlanePoly({(0, 2): 1, (6, 0): -1}),
            "{(t, t^3), (t, -t^3)}",
        ),
    ]
    for p, q in ((2, 5), (3, 4), (3, 5), (3, 7), (4, 5)):
        entries.append(torus_knot(p, q))
    return {entry.name: entry for entry in entries}
