"""
Aritmética exacta en Z[L, L^-1] y su cuerpo de fracciones.

Las clases del anillo de Grothendieck localizado se representan como
funciones racionales en el símbolo formal L sobre los polinomios
dispersos de sympy (``ring("L", ZZ)``), con forma canónica explícita.
"""

import math
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple, Union

import sympy
from sympy import ZZ, ring
from sympy.core.sympify import SympifyError

from ..core.errors import (
    DivergentSeries,
    DivisionByZero,
    InvalidInput,
    NotLaurentPolynomial,
    PoleAtOne,
    PoleAtQ,
)

POLY_RING, _L_GEN = ring("L", ZZ)
L_SYMBOL = sympy.Symbol("L")

Scalar = Union[int, Fraction]


def _poly_from_terms(terms: Dict[int, int]):
    return POLY_RING.from_dict({(e,): c for e, c in terms.items() if c})


def _shift_down(poly, s: int):
    return POLY_RING.from_dict({(m[0] - s,): c for m, c in poly.items()})


def _is_unit_monomial(poly) -> bool:
    return len(poly) == 1 and poly.LC == 1


def _low_degree(poly) -> int:
    return min(m[0] for m in poly.itermonoms())


def _evaluate(poly, value: Fraction) -> Fraction:
    total = Fraction(0)
    for (e,), c in poly.items():
        total += int(c) * value ** e
    return total


class GClass:
    """Elemento de Z[L, L^-1] (o de su cuerpo de fracciones) en forma canónica.

    Invariantes: denominador no nulo con coeficiente principal positivo,
    mcd(num, den) = 1 en Z[L] (incluido el contenido entero), y el cero
    es 0/1. Dos valores iguales tienen la misma representación.
    """

    __slots__ = ("num", "den")

    L: "GClass"

    def __init__(self, num=0, den=1):
        num = self._as_poly(num)
        den = self._as_poly(den)
        if not den:
            raise DivisionByZero("class with zero denominator")
        self.num, self.den = self._canonical(num, den)

    # --- construcción -------------------------------------------------

    @staticmethod
    def _as_poly(value):
        if isinstance(value, int):
            return POLY_RING(value)
        if isinstance(value, Fraction):
            raise TypeError("use GClass.from_fraction for rationals")
        if getattr(value, "ring", None) == POLY_RING:
            return value
        raise TypeError(f"cannot build a polynomial in L from {type(value).__name__}")

    @staticmethod
    def _canonical(num, den):
        if not num:
            return POLY_RING.zero, POLY_RING.one
        if _is_unit_monomial(den):
            k = den.degree()
            s = min(k, _low_degree(num))
            if s:
                num = _shift_down(num, s)
                den = _shift_down(den, s)
            return num, den
        return num.cancel(den)

    @classmethod
    def _raw(cls, num, den) -> "GClass":
        obj = cls.__new__(cls)
        obj.num, obj.den = num, den
        return obj

    @classmethod
    def from_fraction(cls, value: Scalar) -> "GClass":
        value = Fraction(value)
        return cls(POLY_RING(value.numerator), POLY_RING(value.denominator))

    @classmethod
    def monomial(cls, k: int, coeff: int = 1) -> "GClass":
        """Retorna coeff·L^k para cualquier exponente entero k."""
        if k >= 0:
            return cls(_poly_from_terms({k: coeff}))
        return cls(POLY_RING(coeff), _poly_from_terms({-k: 1}))

    @classmethod
    def from_laurent(cls, terms: Dict[int, int]) -> "GClass":
        """Construye Σ c·L^e a partir de {e: c} con exponentes de cualquier signo."""
        if not terms:
            return cls()
        low = min(terms)
        shift = -low if low < 0 else 0
        num = _poly_from_terms({e + shift: c for e, c in terms.items()})
        return cls(num, _poly_from_terms({shift: 1}))

    @classmethod
    def from_terms(
        cls,
        num_terms: Iterable[Sequence[Union[int, str]]],
        den_terms: Iterable[Sequence[Union[int, str]]] = ((1, 0),),
    ) -> "GClass":
        """
        Construye una clase desde listas [[coeff, exp], ...] (forma no canónica admitida).

        Args:
            num_terms: Términos del numerador
            den_terms: Términos del denominador

        Returns:
            GClass canónica
        """
        def collect(terms) -> Dict[int, int]:
            out: Dict[int, int] = {}
            for coeff, exp in terms:
                exp = int(exp)
                if exp < 0:
                    raise InvalidInput(f"negative exponent in class terms: {exp}")
                out[exp] = out.get(exp, 0) + int(coeff)
            return out

        return cls(_poly_from_terms(collect(num_terms)), _poly_from_terms(collect(den_terms)))

    def to_terms(self) -> Tuple[List[List[Union[str, int]]], List[List[Union[str, int]]]]:
        def dump(poly):
            return [[str(int(c)), m[0]] for m, c in sorted(poly.items())]

        return dump(self.num), dump(self.den)

    # --- coerción -----------------------------------------------------

    @classmethod
    def coerce(cls, value) -> "GClass":
        if isinstance(value, GClass):
            return value
        if isinstance(value, bool):
            raise TypeError("booleans are not classes")
        if isinstance(value, int):
            return cls(value)
        if isinstance(value, Fraction):
            return cls.from_fraction(value)
        raise TypeError(f"cannot coerce {type(value).__name__} to GClass")

    @staticmethod
    def _other(value):
        try:
            return GClass.coerce(value)
        except TypeError:
            return None

    # --- aritmética ---------------------------------------------------

    def __add__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return GClass(self.num + other.num, self.den)
        return GClass(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "GClass":
        return GClass._raw(-self.num, self.den)

    def __sub__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        if not self.num or not other.num:
            return GClass()
        return GClass(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "GClass":
        if not self.num:
            raise DivisionByZero("division by the zero class")
        num, den = self.den, self.num
        if den.LC < 0:
            num, den = -num, -den
        return GClass._raw(num, den)

    def __truediv__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int) -> "GClass":
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        if n == 0:
            return GClass(1)
        # potencias de coprimos siguen coprimas y el signo del denominador se conserva
        return GClass._raw(self.num ** n, self.den ** n)

    # --- igualdad -----------------------------------------------------

    def __eq__(self, other) -> bool:
        other = self._other(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __bool__(self) -> bool:
        return bool(self.num)

    # --- invariantes --------------------------------------------------

    def euler_char(self) -> Fraction:
        """
        Característica de Euler: el valor en L = 1.

        Returns:
            Valor racional (entero cuando el denominador se evalúa a ±1)

        Raises:
            PoleAtOne: si el denominador se anula en L = 1
        """
        den = _evaluate(self.den, Fraction(1))
        if den == 0:
            raise PoleAtOne(f"{self} has a pole at L=1", {"class": str(self)})
        return _evaluate(self.num, Fraction(1)) / den

    def specialize(self, q: Scalar) -> Fraction:
        """Evalúa la clase en L = q (conteo de puntos sobre F_q)."""
        q = Fraction(q)
        den = _evaluate(self.den, q)
        if den == 0:
            raise PoleAtQ(f"{self} has a pole at L={q}", {"class": str(self), "q": str(q)})
        return _evaluate(self.num, q) / den

    def virtual_dim(self) -> float:
        """Grado en la filtración por dimensión: deg(num) − deg(den); −∞ para el cero."""
        if not self.num:
            return -math.inf
        return self.num.degree() - self.den.degree()

    def is_laurent(self) -> bool:
        return _is_unit_monomial(self.den)

    def laurent_terms(self) -> Dict[int, int]:
        """Retorna {exponente: coeficiente} de un polinomio de Laurent."""
        if not self.is_laurent():
            raise NotLaurentPolynomial(f"{self} is not a Laurent polynomial in L")
        k = self.den.degree()
        return {m[0] - k: int(c) for m, c in self.num.items()}

    # --- presentación -------------------------------------------------

    def __str__(self) -> str:
        def show(poly) -> str:
            return str(poly.as_expr()).replace("**", "^")

        if self.den == POLY_RING.one:
            return show(self.num)
        if self.is_laurent():
            k = self.den.degree()
            if len(self.num) == 1:
                (e,), c = next(iter(self.num.items()))
                exp = e - k
                base = "1" if exp == 0 else ("L" if exp == 1 else f"L^{exp}")
                return base if c == 1 else f"{int(c)}*{base}"
            return f"L^-{k}*({show(self.num)})"
        return f"({show(self.num)})/({show(self.den)})"

    def __repr__(self) -> str:
        return f"GClass({self})"


GClass.L = GClass(_L_GEN)


def geometric_sum(first, ratio) -> GClass:
    """
    Forma cerrada de Σ_{k≥0} first·ratio^k en el anillo completado.

    Args:
        first: Primer término
        ratio: Razón, con dimensión virtual negativa

    Returns:
        first/(1 − ratio) en forma canónica

    Raises:
        DivergentSeries: si virtual_dim(ratio) ≥ 0
    """
    first = GClass.coerce(first)
    ratio = GClass.coerce(ratio)
    if not ratio:
        return first
    if ratio.virtual_dim() >= 0:
        raise DivergentSeries(
            f"ratio {ratio} does not converge in the completed ring",
            {"virtual_dim": ratio.virtual_dim()},
        )
    return first / (1 - ratio)


def parse_class(text: str) -> GClass:
    """
    Interpreta expresiones como ``"(L+1)*(L-1)*L^-3"`` o ``"L/2"``.

    Args:
        text: Expresión en el símbolo L

    Returns:
        La clase correspondiente

    Raises:
        InvalidInput: si la expresión no es racional en L
    """
    try:
        expr = sympy.sympify(text.replace("^", "**"), locals={"L": L_SYMBOL})
    except (SympifyError, SyntaxError, TypeError) as e:
        raise InvalidInput(f"cannot parse class expression {text!r}: {e}")

    if expr.free_symbols - {L_SYMBOL}:
        raise InvalidInput(f"class expression {text!r} uses symbols other than L")

    numer, denom = sympy.fraction(sympy.together(expr))

    def to_class(part) -> GClass:
        try:
            poly = sympy.Poly(part, L_SYMBOL, domain=sympy.QQ)
        except sympy.PolynomialError as e:
            raise InvalidInput(f"class expression {text!r} is not rational in L: {e}")
        total = GClass()
        for (e,), c in poly.terms():
            total = total + GClass.monomial(e) * Fraction(int(c.p), int(c.q))
        return total

    return to_class(numer) / to_class(denom)
