"""
Suites de invariantes de curvas: corpus de gérmenes, factores de
correspondencia y levantamiento de arcos.
"""

from functools import partial
from math import gcd
from typing import Iterable, Optional

from ...core.errors import HypothesisViolated
from ...singularities.curves import (
    Branch,
    CorpusEntry,
    corpus,
    delta,
    germ_invariants,
    intersection,
    is_degenerate,
    milnor,
    order_v,
    p_direct,
    p_invariant,
    torus_knot,
)
from ...singularities.lifting import lift_arc
from ...singularities.plane_poly import PlanePoly
from ..base_suite import BaseSuite, Case, SuiteConfig

# (v, δ, μ, P)
KNOWN_INVARIANTS = {
    "smooth": (1, 0, 0, 0),
    "parabola": (1, 0, 0, 0),
    "cusp": (2, 1, 2, 3),
    "node": (2, 1, 1, 2),
    "three_lines": (3, 3, 4, 6),
    "tacnode": (2, 2, 3, 4),
    "a5": (2, 3, 5, 6),
}


def _known(entry: CorpusEntry, expected):
    inv = germ_invariants(entry.germ)
    return (inv.v, inv.delta, inv.milnor, inv.p), expected


def _torus(p: int, q: int):
    entry = torus_knot(p, q)
    actual = (p_invariant(entry.germ), p_direct(entry.germ, entry.equation), delta(entry.germ))
    return actual, ((p - 1) * q, (p - 1) * q, (p - 1) * (q - 1) // 2)


class CurvesSuite(BaseSuite):
    """Invariantes del corpus frente a valores conocidos y a la ecuación."""

    MAX_Q = 12

    def __init__(self, config: Optional[SuiteConfig] = None):
        super().__init__(config or SuiteConfig("curves", "germ invariants"))

    def cases(self) -> Iterable[Case]:
        entries = corpus()
        for name, expected in KNOWN_INVARIANTS.items():
            yield f"known_{name}", partial(_known, entries[name], expected)
        for name, entry in sorted(entries.items()):
            if entry.equation is not None:
                yield f"p_direct_{name}", partial(lambda e: (p_direct(e.germ, e.equation), p_invariant(e.germ)), entry)
            yield f"milnor_{name}", partial(lambda e: (milnor(e.germ), 2 * delta(e.germ) - e.germ.k + 1), entry)

        for q in range(3, self.MAX_Q + 1):
            for p in range(2, q):
                if gcd(p, q) == 1:
                    yield f"torus_{p}_{q}", partial(_torus, p, q)

        parabola = Branch.from_polynomials({1: 1}, {2: 1})
        yield "tangent_parabolas", lambda: (intersection(parabola, Branch.from_polynomials({1: 1}, {2: -1})), 2)
        yield "degenerate_t2_t4", lambda: is_degenerate(Branch.from_polynomials({2: 1}, {4: 1}))
        yield "nondegenerate_cusp", lambda: not is_degenerate(Branch.from_polynomials({2: 1}, {3: 1}))


class CorrespondenceSuite(BaseSuite):
    """L^(δ−k−P) = L^(−δ−v) en todo el corpus."""

    def __init__(self, config: Optional[SuiteConfig] = None):
        super().__init__(config or SuiteConfig("correspondence", "correspondence factor identity"))

    def cases(self) -> Iterable[Case]:
        for name, entry in sorted(corpus().items()):
            yield f"factor_{name}", partial(self._factor, entry)
            yield f"exponent_{name}", partial(self._exponent, entry)

    @staticmethod
    def _factor(entry: CorpusEntry):
        inv = germ_invariants(entry.germ)
        return inv.correspondence, inv.abstract_weight

    @staticmethod
    def _exponent(entry: CorpusEntry):
        inv = germ_invariants(entry.germ)
        return inv.delta - inv.k - inv.p, -inv.delta - order_v(entry.germ)


LIFT_CASES = {
    "cusp": (PlanePoly({(0, 2): 1, (3, 0): -1}), Branch.from_polynomials({2: 1}, {3: 1, 9: 1})),
    "parabola": (PlanePoly({(0, 1): 1, (2, 0): -1}), Branch.from_polynomials({1: 1}, {2: 1, 20: 1})),
    "a3": (PlanePoly({(0, 2): 1, (4, 0): -1}), Branch.from_polynomials({1: 1}, {2: 1, 7: 1})),
}


def _lift_checks(f: PlanePoly, g: Branch, target: int) -> bool:
    report = lift_arc(f, g, target)
    lifted = report.lifted
    if not f.evaluate(lifted.x, lifted.y).is_zero():
        return False
    if report.n1 >= 0 and not lifted.y.equal_through(g.y.padded(target), min(report.n1, target)):
        return False
    for (_, before), (_, after) in zip(report.iterations, report.iterations[1:]):
        if after is not None and after < 2 * (before - report.Q):
            return False
    return True


class LiftingSuite(BaseSuite):
    """Levantamiento de Newton: anulación, conservación del jet y crecimiento del orden."""

    TARGET = 30

    def __init__(self, config: Optional[SuiteConfig] = None):
        super().__init__(config or SuiteConfig("lifting", "Newton lifting of approximate arcs"))

    def cases(self) -> Iterable[Case]:
        for name, (f, g) in LIFT_CASES.items():
            yield f"lift_{name}", partial(_lift_checks, f, g, self.TARGET)
        yield "rejects_low_order", self._rejects_low_order

    @staticmethod
    def _rejects_low_order() -> bool:
        f = PlanePoly({(0, 2): 1, (3, 0): -1})
        try:
            lift_arc(f, Branch.from_polynomials({2: 1}, {3: 2}), 30)
        except HypothesisViolated:
            return True
        return False
