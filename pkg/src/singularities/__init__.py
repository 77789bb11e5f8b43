"""Gérmenes de curvas planas: invariantes y levantamiento de arcos."""

from .plane_poly import PlanePoly
from .curves import (
    Branch,
    CurveGerm,
    GermInvariants,
    blow_up,
    corpus,
    delta,
    germ_invariants,
    intersection,
    is_degenerate,
    milnor,
    mult_sequence,
    normalize,
    order_v,
    p_direct,
    p_invariant,
)
from .lifting import LiftReport, lift_arc, rotate_coords

__all__ = [
    "PlanePoly",
    "Branch",
    "CurveGerm",
    "GermInvariants",
    "blow_up",
    "corpus",
    "delta",
    "germ_invariants",
    "intersection",
    "is_degenerate",
    "milnor",
    "mult_sequence",
    "normalize",
    "order_v",
    "p_direct",
    "p_invariant",
    "LiftReport",
    "lift_arc",
    "rotate_coords",
]
