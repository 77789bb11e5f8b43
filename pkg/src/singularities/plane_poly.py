"""
Polinomios en x, y con coeficientes racionales exactos.
"""

from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple, Union

import sympy
from sympy.core.sympify import SympifyError

from ..algebra.series import CoeffRing, TruncSeries
from ..core.errors import InvalidInput

X_SYMBOL, Y_SYMBOL = sympy.symbols("x y")

Monom = Tuple[int, int]


def _rational(value) -> Fraction:
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    # coeficiente de sympy
    return Fraction(int(value.p), int(value.q))


def _plain(value: Fraction):
    return value.numerator if value.denominator == 1 else value


class PlanePoly:
    """
    Germen polinomial f(x, y) = Σ c_ij·x^i·y^j.

    Args:
        terms: {(i, j): coeficiente}
        vanishing: Exige f(0, 0) = 0 (las derivadas parciales no lo exigen)
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Dict[Monom, Union[int, Fraction]], vanishing: bool = True):
        clean: Dict[Monom, Fraction] = {}
        for (i, j), c in terms.items():
            if i < 0 or j < 0:
                raise InvalidInput(f"negative exponent ({i}, {j}) in plane polynomial")
            c = Fraction(c)
            if c:
                clean[(int(i), int(j))] = clean.get((int(i), int(j)), Fraction(0)) + c
        clean = {m: c for m, c in clean.items() if c}
        if vanishing and clean.get((0, 0)):
            raise InvalidInput("plane polynomial must vanish at the origin")
        self.terms = clean

    @classmethod
    def parse(cls, text: str) -> "PlanePoly":
        """Interpreta expresiones como ``"y^2 - x^3"``."""
        try:
            expr = sympy.sympify(text.replace("^", "**"), locals={"x": X_SYMBOL, "y": Y_SYMBOL})
            poly = sympy.Poly(expr, X_SYMBOL, Y_SYMBOL, domain=sympy.QQ)
        except (SympifyError, SyntaxError, TypeError, sympy.PolynomialError) as e:
            raise InvalidInput(f"cannot parse plane polynomial {text!r}: {e}")
        return cls({m: _rational(c) for m, c in poly.terms()})

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]]) -> "PlanePoly":
        """Construye desde filas [num, den, i, j]."""
        terms: Dict[Monom, Fraction] = {}
        for row in rows:
            if len(row) != 4:
                raise InvalidInput(f"plane polynomial rows need 4 entries, got {list(row)}")
            num, den, i, j = (int(v) for v in row)
            if den == 0:
                raise InvalidInput("zero denominator in plane polynomial term")
            terms[(i, j)] = terms.get((i, j), Fraction(0)) + Fraction(num, den)
        return cls(terms)

    def to_rows(self) -> List[List[int]]:
        return [[c.numerator, c.denominator, i, j] for (i, j), c in sorted(self.terms.items())]

    def to_sympy(self):
        return sum(
            (sympy.Rational(c.numerator, c.denominator) * X_SYMBOL ** i * Y_SYMBOL ** j
             for (i, j), c in self.terms.items()),
            sympy.Integer(0),
        )

    # --- derivadas y cambios de coordenadas ---------------------------

    def partial_x(self) -> "PlanePoly":
        return PlanePoly({(i - 1, j): i * c for (i, j), c in self.terms.items() if i}, vanishing=False)

    def partial_y(self) -> "PlanePoly":
        return PlanePoly({(i, j - 1): j * c for (i, j), c in self.terms.items() if j}, vanishing=False)

    def shear(self, c: int) -> "PlanePoly":
        """Retorna f(x + c·y, y)."""
        expr = self.to_sympy().subs(X_SYMBOL, X_SYMBOL + c * Y_SYMBOL)
        poly = sympy.Poly(sympy.expand(expr), X_SYMBOL, Y_SYMBOL, domain=sympy.QQ)
        return PlanePoly({m: _rational(v) for m, v in poly.terms()}, vanishing=False)

    def is_zero(self) -> bool:
        return not self.terms

    # --- evaluación sobre arcos ---------------------------------------

    def evaluate(self, x: TruncSeries, y: TruncSeries) -> TruncSeries:
        """
        Sustituye un arco (x(t), y(t)) en f.

        Args:
            x: Componente x del arco
            y: Componente y del arco

        Returns:
            f(x(t), y(t)) con truncación min(trunc x, trunc y)
        """
        trunc = min(x.trunc, y.trunc)
        ring = x.ring.join(y.ring)
        if any(c.denominator != 1 for c in self.terms.values()):
            ring = ring.join(CoeffRing.QQ)

        x_pows = [TruncSeries.one(x.vars, trunc, ring)]
        y_pows = [TruncSeries.one(y.vars, trunc, ring)]
        top_i = max((i for i, _ in self.terms), default=0)
        top_j = max((j for _, j in self.terms), default=0)
        for _ in range(top_i):
            x_pows.append(x_pows[-1] * x)
        for _ in range(top_j):
            y_pows.append(y_pows[-1] * y)

        result = TruncSeries.zero(x.vars, trunc, ring)
        for (i, j), c in self.terms.items():
            result = result + (x_pows[i] * y_pows[j]).scale(_plain(c))
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, PlanePoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __str__(self) -> str:
        return str(self.to_sympy()).replace("**", "^")

    def __repr__(self) -> str:
        return f"PlanePoly({self})"
