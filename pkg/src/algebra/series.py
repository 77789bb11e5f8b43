"""
Series formales truncadas en una o varias variables.

Los coeficientes viven en ZZ (int), QQ (Fraction) o en las clases GClass;
la truncación es explícita en cada valor y contagiosa (regla del mínimo).
"""

from enum import Enum
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from sympy import integer_nthroot

from ..core.errors import (
    InvalidInput,
    NoRootInField,
    NonUnitConstantTerm,
    NotOrderOne,
    PositiveOrderRequired,
    PrecisionExhausted,
    VariableMismatch,
)
from .gring import GClass

Exps = Tuple[int, ...]
Coeff = Union[int, Fraction, GClass]


class CoeffRing(Enum):
    """Dominio de coeficientes, ordenado por inclusión ZZ ⊂ QQ ⊂ GCLASS."""
    ZZ = 0
    QQ = 1
    GCLASS = 2

    @classmethod
    def of(cls, value: Coeff) -> "CoeffRing":
        if isinstance(value, GClass):
            return cls.GCLASS
        if isinstance(value, Fraction):
            return cls.QQ
        if isinstance(value, int) and not isinstance(value, bool):
            return cls.ZZ
        raise TypeError(f"unsupported coefficient type {type(value).__name__}")

    def join(self, other: "CoeffRing") -> "CoeffRing":
        return self if self.value >= other.value else other

    def convert(self, value: Coeff) -> Coeff:
        if self is CoeffRing.GCLASS:
            return GClass.coerce(value)
        if isinstance(value, GClass):
            raise TypeError("cannot convert a class into a numeric coefficient")
        if self is CoeffRing.QQ:
            return Fraction(value)
        value = Fraction(value)
        if value.denominator != 1:
            raise TypeError(f"{value} is not an integer")
        return value.numerator

    def invert(self, value: Coeff) -> Coeff:
        """Inverso en el dominio; los enteros solo invierten ±1."""
        if not value:
            raise NonUnitConstantTerm("zero is not invertible")
        if self is CoeffRing.ZZ:
            if value not in (1, -1):
                raise NonUnitConstantTerm(f"{value} is not a unit integer")
            return value
        if self is CoeffRing.QQ:
            return Fraction(1) / value
        return value.inverse()


def _degree(exps: Exps) -> int:
    return sum(exps)


class TruncSeries:
    """Serie truncada Σ c_e·t^e con grado total ≤ trunc.

    Nunca se almacenan coeficientes nulos; dos series son iguales si
    coinciden variables, truncación y coeficientes.
    """

    __slots__ = ("vars", "trunc", "coeffs", "ring")

    def __init__(
        self,
        vars: Sequence[str],
        trunc: int,
        coeffs: Optional[Dict[Exps, Coeff]] = None,
        ring: Optional[CoeffRing] = None,
    ):
        vars = tuple(vars)
        if not vars:
            raise InvalidInput("a series needs at least one variable")
        if trunc < 0:
            raise InvalidInput(f"truncation order must be >= 0, got {trunc}")
        coeffs = coeffs or {}

        if ring is None:
            ring = CoeffRing.ZZ
            for value in coeffs.values():
                ring = ring.join(CoeffRing.of(value))

        clean: Dict[Exps, Coeff] = {}
        for exps, value in coeffs.items():
            exps = tuple(exps)
            if len(exps) != len(vars):
                raise InvalidInput(f"exponent {exps} does not match variables {vars}")
            if any(e < 0 for e in exps):
                raise InvalidInput(f"negative exponent {exps}")
            if _degree(exps) <= trunc and value:
                clean[exps] = ring.convert(value)

        self.vars = vars
        self.trunc = trunc
        self.coeffs = clean
        self.ring = ring

    # --- constructores ------------------------------------------------

    @classmethod
    def zero(cls, vars: Sequence[str] = ("t",), trunc: int = 0, ring: CoeffRing = CoeffRing.ZZ):
        return cls(vars, trunc, {}, ring)

    @classmethod
    def constant(cls, value: Coeff, vars: Sequence[str] = ("t",), trunc: int = 0):
        vars = tuple(vars)
        return cls(vars, trunc, {(0,) * len(vars): value}, CoeffRing.of(value))

    @classmethod
    def one(cls, vars: Sequence[str] = ("t",), trunc: int = 0, ring: CoeffRing = CoeffRing.ZZ):
        vars = tuple(vars)
        return cls(vars, trunc, {(0,) * len(vars): 1}, ring)

    @classmethod
    def variable(cls, name: str = "t", trunc: int = 1, vars: Optional[Sequence[str]] = None):
        vars = tuple(vars or (name,))
        exps = tuple(1 if v == name else 0 for v in vars)
        return cls(vars, trunc, {exps: 1})

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff: Coeff, vars: Sequence[str], trunc: int):
        return cls(vars, trunc, {tuple(exps): coeff}, CoeffRing.of(coeff))

    @classmethod
    def from_list(cls, values: Sequence[Coeff], trunc: Optional[int] = None, var: str = "t"):
        """Serie univariada con values[k] como coeficiente de t^k."""
        trunc = len(values) - 1 if trunc is None else trunc
        return cls((var,), max(trunc, 0), {(k,): c for k, c in enumerate(values)})

    # --- acceso -------------------------------------------------------

    @property
    def is_univariate(self) -> bool:
        return len(self.vars) == 1

    def _key(self, exps: Union[int, Sequence[int]]) -> Exps:
        if isinstance(exps, int):
            return (exps,)
        return tuple(exps)

    def coeff(self, exps: Union[int, Sequence[int]]) -> Coeff:
        key = self._key(exps)
        if _degree(key) > self.trunc:
            raise PrecisionExhausted(
                f"coefficient {key} lies beyond truncation order {self.trunc}"
            )
        return self.coeffs.get(key, self.ring.convert(0))

    @property
    def constant_term(self) -> Coeff:
        return self.coeffs.get((0,) * len(self.vars), self.ring.convert(0))

    def coefficient_list(self) -> List[Coeff]:
        self._require_univariate("coefficient_list")
        return [self.coeffs.get((k,), self.ring.convert(0)) for k in range(self.trunc + 1)]

    def order(self) -> int:
        """Menor grado total con coeficiente no nulo; trunc+1 si no hay ninguno."""
        if not self.coeffs:
            return self.trunc + 1
        return min(_degree(e) for e in self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading_coefficient(self) -> Coeff:
        self._require_univariate("leading_coefficient")
        if not self.coeffs:
            raise PrecisionExhausted("series vanishes through its truncation order")
        return self.coeffs[(self.order(),)]

    def degree(self) -> int:
        """Mayor grado total almacenado (−1 para la serie nula)."""
        return max((_degree(e) for e in self.coeffs), default=-1)

    # --- truncación ---------------------------------------------------

    def truncate(self, n: int) -> "TruncSeries":
        return TruncSeries(self.vars, min(n, self.trunc), self.coeffs, self.ring)

    def padded(self, n: int) -> "TruncSeries":
        """Reinterpreta los coeficientes guardados (un polinomio) con truncación n."""
        return TruncSeries(self.vars, n, self.coeffs, self.ring)

    def to_ring(self, ring: CoeffRing) -> "TruncSeries":
        return TruncSeries(self.vars, self.trunc, self.coeffs, self.ring.join(ring))

    def equal_through(self, other: "TruncSeries", n: int) -> bool:
        self._check(other)
        keys = {e for e in set(self.coeffs) | set(other.coeffs) if _degree(e) <= n}
        zero = self.ring.convert(0)
        return all(self.coeffs.get(e, zero) == other.coeffs.get(e, zero) for e in keys)

    # --- aritmética ---------------------------------------------------

    def _check(self, other: "TruncSeries") -> None:
        if self.vars != other.vars:
            raise VariableMismatch(
                f"variables {self.vars} and {other.vars} differ",
                {"left": list(self.vars), "right": list(other.vars)},
            )

    def _require_univariate(self, what: str) -> None:
        if not self.is_univariate:
            raise InvalidInput(f"{what} requires a single-variable series, got {self.vars}")

    def _as_series(self, other) -> Optional["TruncSeries"]:
        if isinstance(other, TruncSeries):
            self._check(other)
            return other
        try:
            ring = CoeffRing.of(other)
        except TypeError:
            return None
        return TruncSeries(self.vars, self.trunc, {(0,) * len(self.vars): other}, ring)

    def __add__(self, other):
        other = self._as_series(other)
        if other is None:
            return NotImplemented
        ring = self.ring.join(other.ring)
        trunc = min(self.trunc, other.trunc)
        out: Dict[Exps, Coeff] = {e: ring.convert(c) for e, c in self.coeffs.items()}
        for e, c in other.coeffs.items():
            out[e] = out[e] + c if e in out else ring.convert(c)
        return TruncSeries(self.vars, trunc, out, ring)

    __radd__ = __add__

    def __neg__(self) -> "TruncSeries":
        return TruncSeries(self.vars, self.trunc, {e: -c for e, c in self.coeffs.items()}, self.ring)

    def __sub__(self, other):
        other = self._as_series(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._as_series(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, c: Coeff) -> "TruncSeries":
        ring = self.ring.join(CoeffRing.of(c))
        c = ring.convert(c)
        return TruncSeries(self.vars, self.trunc, {e: c * v for e, v in self.coeffs.items()}, ring)

    def __mul__(self, other):
        if not isinstance(other, TruncSeries):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        self._check(other)
        ring = self.ring.join(other.ring)
        trunc = min(self.trunc, other.trunc)
        out: Dict[Exps, Coeff] = {}
        right = [(e, _degree(e), c) for e, c in other.coeffs.items()]
        for e1, c1 in self.coeffs.items():
            d1 = _degree(e1)
            if d1 > trunc:
                continue
            for e2, d2, c2 in right:
                if d1 + d2 > trunc:
                    continue
                e = tuple(a + b for a, b in zip(e1, e2))
                value = c1 * c2
                out[e] = out[e] + value if e in out else value
        return TruncSeries(self.vars, trunc, out, ring)

    def __rmul__(self, other):
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __pow__(self, n: int) -> "TruncSeries":
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.recip() ** (-n)
        result = TruncSeries.one(self.vars, self.trunc, self.ring)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, TruncSeries):
            return self * other.recip()
        try:
            ring = self.ring.join(CoeffRing.of(other))
        except TypeError:
            return NotImplemented
        if ring is CoeffRing.ZZ:
            ring = CoeffRing.QQ
        return self.scale(ring.invert(ring.convert(other)))

    # --- inversión y composición ----------------------------------

    def recip(self) -> "TruncSeries":
        """
        Inverso multiplicativo.

        Returns:
            Serie B con A·B = 1 hasta la truncación

        Raises:
            NonUnitConstantTerm: si el término constante no es invertible
        """
        c = self.constant_term
        if not c:
            raise NonUnitConstantTerm("series with zero constant term has no inverse")
        inv_c = self.ring.invert(c)

        if self.is_univariate:
            a = self.coefficient_list()
            b = [inv_c]
            for n in range(1, self.trunc + 1):
                acc = self.ring.convert(0)
                for k in range(1, n + 1):
                    if a[k]:
                        acc = acc + a[k] * b[n - k]
                b.append(-(inv_c * acc))
            return TruncSeries.from_list(b, self.trunc, self.vars[0]).to_ring(self.ring)

        # A = c·(1 − B) con ord B ≥ 1
        b = TruncSeries.one(self.vars, self.trunc, self.ring) - self.scale(inv_c)
        total = TruncSeries.one(self.vars, self.trunc, self.ring)
        power = total
        for _ in range(self.trunc):
            power = power * b
            if power.is_zero():
                break
            total = total + power
        return total.scale(inv_c)

    def compose(self, inner: "TruncSeries") -> "TruncSeries":
        """
        Sustitución A(B(t)) con ord B ≥ 1.

        Args:
            inner: Serie B univariada

        Returns:
            A(B) con truncación min(trunc A, trunc B)
        """
        self._require_univariate("compose")
        self._check(inner)
        if inner.constant_term:
            raise PositiveOrderRequired("inner series must have positive order")
        trunc = min(self.trunc, inner.trunc)
        ring = self.ring.join(inner.ring)
        inner = inner.truncate(trunc).to_ring(ring)
        top = min(self.degree(), trunc)
        result = TruncSeries.zero(self.vars, trunc, ring)
        for k in range(top, -1, -1):
            result = result * inner
            c = self.coeffs.get((k,))
            if c:
                result = result + c
        return result

    def derivative(self) -> "TruncSeries":
        self._require_univariate("derivative")
        if self.trunc == 0:
            raise PrecisionExhausted("derivative of a series known only to order 0")
        coeffs = {(e - 1,): e * c for (e,), c in self.coeffs.items() if e > 0}
        return TruncSeries(self.vars, self.trunc - 1, coeffs, self.ring)

    def reversion(self) -> "TruncSeries":
        """
        Inversa composicional de una serie de orden 1 (iteración de Newton).

        Raises:
            NotOrderOne: si el orden no es 1 o el coeficiente lineal no es invertible
        """
        self._require_univariate("reversion")
        if self.constant_term or (1,) not in self.coeffs:
            raise NotOrderOne(f"series has order {self.order()}, expected 1")
        try:
            inv_a1 = self.ring.invert(self.coeffs[(1,)])
        except NonUnitConstantTerm as e:
            raise NotOrderOne(f"linear coefficient is not invertible: {e}")

        t = TruncSeries.variable(self.vars[0], self.trunc)
        result = t.scale(inv_a1)
        precision = 1
        while precision < self.trunc:
            precision = min(2 * precision, self.trunc)
            a = self.truncate(precision)
            r = result.padded(precision)
            residual = a.compose(r) - t.truncate(precision)
            slope = a.derivative().padded(precision).compose(r)
            # el residuo tiene orden ≥ 2, la pendiente es una unidad
            result = r - residual * slope.recip()
        return result.truncate(self.trunc)

    def nth_root_unit(self, n: int) -> "TruncSeries":
        """
        Raíz n-ésima con término constante prescrito por una raíz exacta de c.

        Args:
            n: Índice de la raíz (≥ 1)

        Returns:
            R con R^n = A hasta la truncación

        Raises:
            NoRootInField: si c no admite raíz n-ésima en el dominio
        """
        if n < 1:
            raise InvalidInput(f"root index must be positive, got {n}")
        c = self.constant_term
        if not c:
            raise NoRootInField("zero constant term has no unit root")
        root = exact_root(c, n)
        ring = self.ring.join(CoeffRing.QQ)
        unit = self.scale(ring.invert(ring.convert(c))) - 1

        total = TruncSeries.one(self.vars, self.trunc, ring)
        power = TruncSeries.one(self.vars, self.trunc, ring)
        binom = Fraction(1)
        exponent = Fraction(1, n)
        for k in range(1, self.trunc + 1):
            power = power * unit
            if power.is_zero():
                break
            binom = binom * (exponent - (k - 1)) / k
            total = total + power.scale(binom)
        return total.scale(ring.convert(root))

    # --- transformaciones univariadas ------------------------------

    def lower(self, a: int) -> "TruncSeries":
        """División exacta por t^a; la truncación baja en a."""
        self._require_univariate("lower")
        if a > self.trunc:
            raise PrecisionExhausted(f"cannot divide by t^{a} at truncation {self.trunc}")
        if any(e < a for (e,) in self.coeffs):
            raise PositiveOrderRequired(f"series order {self.order()} below t^{a}")
        return TruncSeries(self.vars, self.trunc - a, {(e - a,): c for (e,), c in self.coeffs.items()}, self.ring)

    def shift(self, a: int) -> "TruncSeries":
        """Multiplicación por t^a; la truncación sube en a."""
        self._require_univariate("shift")
        return TruncSeries(self.vars, self.trunc + a, {(e + a,): c for (e,), c in self.coeffs.items()}, self.ring)

    def substitute_power(self, k: int) -> "TruncSeries":
        """Sustitución t → t^k (en todas las variables)."""
        if k < 1:
            raise PositiveOrderRequired(f"substitution power must be >= 1, got {k}")
        coeffs = {tuple(k * x for x in e): c for e, c in self.coeffs.items()}
        return TruncSeries(self.vars, k * (self.trunc + 1) - 1, coeffs, self.ring)

    def map_coefficients(self, fn: Callable[[Coeff], Coeff], ring: Optional[CoeffRing] = None) -> "TruncSeries":
        return TruncSeries(self.vars, self.trunc, {e: fn(c) for e, c in self.coeffs.items()}, ring)

    def items(self) -> Iterable[Tuple[Exps, Coeff]]:
        return sorted(self.coeffs.items(), key=lambda kv: (_degree(kv[0]), kv[0]))

    # --- igualdad y presentación -----------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.vars == other.vars and self.trunc == other.trunc and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.vars, self.trunc, frozenset((e, hash(c)) for e, c in self.coeffs.items())))

    def __str__(self) -> str:
        def mono(e: Exps) -> str:
            parts = []
            for v, k in zip(self.vars, e):
                if k == 1:
                    parts.append(v)
                elif k > 1:
                    parts.append(f"{v}^{k}")
            return "*".join(parts)

        terms = []
        for e, c in self.items():
            m = mono(e)
            text = str(c)
            if m and any(ch in text.lstrip("-") for ch in "+-/"):
                text = f"({text})"
            if not m:
                terms.append(text)
            elif c == 1:
                terms.append(m)
            else:
                terms.append(f"{text}*{m}")
        body = " + ".join(terms) if terms else "0"
        return f"{body} + O(deg {self.trunc + 1})"

    def __repr__(self) -> str:
        return f"TruncSeries({self})"


def exact_root(c: Coeff, n: int) -> Coeff:
    if isinstance(c, GClass):
        if not c.is_laurent():
            raise NoRootInField(f"no {n}-th root of {c} among Laurent monomials")
        terms = c.laurent_terms()
        if len(terms) != 1:
            raise NoRootInField(f"no {n}-th root of {c} among Laurent monomials")
        (e, k), = terms.items()
        if e % n:
            raise NoRootInField(f"exponent of {c} is not divisible by {n}")
        return GClass.monomial(e // n) * exact_root(Fraction(k), n)

    value = Fraction(c)
    sign = 1
    if value < 0:
        if n % 2 == 0:
            raise NoRootInField(f"{value} has no real {n}-th root")
        sign, value = -1, -value
    num, exact_num = integer_nthroot(value.numerator, n)
    den, exact_den = integer_nthroot(value.denominator, n)
    if not (exact_num and exact_den):
        raise NoRootInField(f"{c} is not an exact {n}-th power over the rationals")
    return Fraction(sign * int(num), int(den))
