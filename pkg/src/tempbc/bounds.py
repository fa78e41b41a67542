"""Closed-form a-priori sample sizes for the fixed-sample estimators."""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = ["BoundInputs", "hoeffding_size", "vc_size"]


@dataclass(frozen=True)
class BoundInputs:
    """Validated inputs for the sample-size bounds.

    ``vd`` is the shortest-temporal vertex diameter (node count of the longest
    shortest temporal path); only the VC-style bound uses it. ``c_univ`` is
    the universal constant of the standard VC sample-complexity bound.
    """

    epsilon: float
    delta: float
    n: int = 0
    vd: int | None = None
    c_univ: float = 0.5

    def __post_init__(self):
        if not 0.0 < self.epsilon < 1.0:
            raise ValueError("epsilon must be in (0, 1)")
        if not 0.0 < self.delta < 1.0:
            raise ValueError("delta must be in (0, 1)")
        if self.vd is not None and self.vd < 2:
            raise ValueError("vertex diameter must be >= 2")
        if self.c_univ <= 0:
            raise ValueError("universal constant must be positive")


def hoeffding_size(epsilon: float, delta: float, n: int) -> int:
    """Union-bound sample size: ceil(ln(2n / delta) / (2 epsilon^2)).

    Valid for every optimality criterion; guarantees all n node estimates are
    within epsilon with probability 1 - delta.
    """
    BoundInputs(epsilon, delta, n)
    if n < 1:
        raise ValueError("node count must be >= 1")
    return math.ceil(math.log(2 * n / delta) / (2 * epsilon * epsilon))


def vc_size(epsilon: float, delta: float, vd: int, c_univ: float = 0.5) -> int:
    """Vertex-diameter sample size for the shortest criterion:
    ceil((c / epsilon^2) * (floor(log2(vd - 2)) + 1 + ln(1/delta))).

    Independent of the node count. The epsilon guarantee only holds when every
    connected pair has a unique shortest temporal path; otherwise treat this
    as a heuristic and prefer :func:`hoeffding_size`. For ``vd < 3`` (paths
    with at most one internal node) the bracket degenerates to 1 + ln(1/delta).
    """
    BoundInputs(epsilon, delta, vd=vd, c_univ=c_univ)
    if vd < 3:
        bracket = 1 + math.log(1 / delta)
    else:
        # exact floor(log2) on the integer
        bracket = ((vd - 2).bit_length() - 1) + 1 + math.log(1 / delta)
    return math.ceil(c_univ / (epsilon * epsilon) * bracket)
