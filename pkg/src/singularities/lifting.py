"""
Levantamiento de arcos por iteración de Newton.

Dado un arco aproximado γ de f = 0, γ_{k+1} = γ_k − (0, f(γ_k)/f_y(γ_k))
converge cuadráticamente a una solución modulo t^(target+1) conservando
el n₁-jet del arco de partida.
"""

from dataclasses import dataclass, field
from math import ceil, log2
from typing import List, NamedTuple, Optional, Tuple

from loguru import logger

from ..algebra.series import CoeffRing, TruncSeries
from ..core.config import settings
from ..core.errors import (
    HypothesisViolated,
    IdentityViolation,
    InvalidInput,
    NoSuitableRotation,
    StalledIteration,
)
from .curves import Branch, order_v
from .plane_poly import PlanePoly


class Rotation(NamedTuple):
    f: PlanePoly
    branch: Branch
    shift: int


@dataclass
class LiftReport:
    """Resultado de lift_arc con la traza de órdenes de f(γ_k)."""
    lifted: Branch
    iterations: List[Tuple[int, Optional[int]]] = field(default_factory=list)
    n: int = 0
    n1: int = 0
    Q: int = 0
    m: int = 0
    target: int = 0

    @property
    def steps(self) -> int:
        return len(self.iterations) - 1


def _degree(f: PlanePoly) -> int:
    return max((i + j for i, j in f.terms), default=0)


def _partial_orders(f: PlanePoly, x: TruncSeries, y: TruncSeries) -> Tuple[int, int]:
    ox = f.partial_x().evaluate(x, y)
    oy = f.partial_y().evaluate(x, y)
    return ox.order(), oy.order()


def rotate_coords(f: PlanePoly, g: Branch, bound: Optional[int] = None) -> Rotation:
    """
    Busca el menor c ≥ 0 tal que, con f'(x, y) = f(x + c·y, y) y
    g' = (x − c·y, y), la derivada en y realice Q = min(ord f'_x, ord f'_y).

    Args:
        f: Ecuación
        g: Arco
        bound: Mayor c a probar (por defecto settings.rotation_search_bound)

    Returns:
        Rotation(f', g', c); f'(g') = f(g)

    Raises:
        NoSuitableRotation: si ningún c ≤ bound sirve
    """
    if f.is_zero():
        raise InvalidInput("cannot normalize coordinates for the zero polynomial")
    bound = settings.rotation_search_bound if bound is None else bound
    trunc = g.trunc

    for c in range(bound + 1):
        rotated = f.shear(c) if c else f
        x = g.x - g.y.scale(c) if c else g.x
        ox, oy = _partial_orders(rotated, x, g.y)
        if oy <= trunc and oy <= ox:
            logger.debug(f"rotate_coords: c={c}, ord f_x={ox}, ord f_y={oy}")
            return Rotation(rotated, Branch(x, g.y, exact=g.exact), c)

    raise NoSuitableRotation(
        f"no shear c <= {bound} puts the minimal order on f_y",
        {"bound": bound, "trunc": trunc},
    )


def lift_arc(f: PlanePoly, g: Branch, target: int, strict: bool = False) -> LiftReport:
    """
    Levanta un arco aproximado a una solución de f = 0 modulo t^(target+1).

    Args:
        f: Ecuación con ord f_y(g) = Q (ver rotate_coords)
        g: Arco de partida, leído como polinomio
        target: Orden hasta el que f(lifted) debe anularse
        strict: Exige además n > 4Q

    Returns:
        LiftReport con el arco levantado y la traza

    Raises:
        HypothesisViolated: si ord f(g) ≤ 2Q, si ord f_y(g) ≠ Q o (strict) n ≤ 4Q
        StalledIteration: si el orden deja de crecer o se supera el tope de pasos
    """
    if target < 1:
        raise InvalidInput(f"target order must be positive, got {target}")
    m = order_v(g)
    work = target + 1
    x = g.x.to_ring(CoeffRing.QQ)
    y = g.y.to_ring(CoeffRing.QQ)
    fx_order, fy_order = _partial_orders(f, x.padded(work), y.padded(work))
    Q = min(fx_order, fy_order)
    if Q > work - 1:
        raise HypothesisViolated(f"both partial derivatives vanish through order {work - 1}")
    if fy_order != Q:
        raise HypothesisViolated(
            f"ord f_y(g) = {fy_order} differs from Q = {Q}; rotate coordinates first",
            {"ord_fx": fx_order, "ord_fy": fy_order},
        )

    fy_poly = f.partial_y()
    degree = _degree(f)

    def exact_order(ys: TruncSeries) -> Tuple[Optional[int], TruncSeries]:
        full = degree * max(x.degree(), ys.degree(), 1)
        value = f.evaluate(x.padded(full), ys.padded(full))
        return (None if value.is_zero() else value.order()), value

    order, value = exact_order(y)
    report = LiftReport(lifted=g, iterations=[(0, order)], Q=Q, m=m, target=target)
    if order is None or order > target:
        report.lifted = Branch(x.padded(target), y.padded(target))
        logger.info(f"lift_arc: arc already solves f through order {target}")
        return report

    n = (order - 1) // m
    n1 = m * n - Q
    report.n, report.n1 = n, n1
    if order <= 2 * Q:
        raise HypothesisViolated(
            f"ord f(g) = {order} must exceed 2Q = {2 * Q}", {"order": order, "Q": Q}
        )
    if strict and n <= 4 * Q:
        raise HypothesisViolated(f"n = {n} must exceed 4Q = {4 * Q}", {"n": n, "Q": Q})

    cap = ceil(log2(max(target, 2))) + 4
    step = 0
    while order is not None and order <= target:
        if step >= cap:
            raise StalledIteration(f"no convergence after {cap} Newton steps", {"trace": report.iterations})
        precision = max(target + Q + 1, 2 * order)
        xs, ys = x.padded(precision), y.padded(precision)
        fy = fy_poly.evaluate(xs, ys)
        if fy.order() != Q:
            raise StalledIteration(
                f"ord f_y changed from {Q} to {fy.order()} at step {step}; rotate coordinates",
                {"step": step},
            )
        residual = value.padded(precision)
        correction = residual.lower(Q) * fy.lower(Q).recip()
        y = (ys - correction.padded(precision)).truncate(precision - Q).padded(precision - Q)
        step += 1

        previous = order
        order, value = exact_order(y)
        report.iterations.append((step, order))
        logger.debug(f"lift_arc step {step}: ord f = {previous} -> {order}")
        if order is not None and order <= previous:
            raise StalledIteration(f"order did not grow at step {step}", {"trace": report.iterations})

    lifted = Branch(x.padded(target), y.truncate(target))
    if n1 >= 0 and not lifted.y.equal_through(g.y.padded(target), min(n1, target)):
        raise IdentityViolation(f"lifted arc changed the {n1}-jet", {"n1": n1})
    report.lifted = lifted
    logger.info(f"lift_arc: {step} steps, n={n}, n1={n1}, Q={Q}")
    return report
