"""Progressive sampling with a data-dependent stopping bound.

Two schemes:

* :func:`progressive_estimate` grows a pair sample along a geometric schedule
  and stops once a supremum-deviation bound, built from an empirical
  Rademacher-average upper bound, falls below the target accuracy. Works for
  the pair-fraction (``ob``) and path-indicator (``trk``) estimators; the
  latter is additionally capped at the union-bound sample size.
* :func:`prtb_estimate` repeatedly samples sources and stops once some node's
  accumulated unnormalized dependency reaches ``c * n``; a cheap heuristic
  with guarantees only for high-centrality nodes.

The bookkeeping keeps, per node, the running sum of its per-sample values and
of their squares, plus a multiset of the squared norms; the norm multiset is
all the bound needs, so the per-sample cost stays constant.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

import numpy as np

from .bounds import hoeffding_size
from .exact import ScoreVector
from .graph import TemporalGraph
from .rng import draw_pair, draw_source, substream
from .samplers import Algorithm, sample_optimal_path
from .tbfs import PathOptimality, full_tbfs, truncated_tbfs

__all__ = [
    "RademacherState",
    "Schedule",
    "StopReason",
    "StopReport",
    "initial_sample_size",
    "update_values",
    "rademacher_bound",
    "stopping_xi",
    "progressive_estimate",
    "prtb_estimate",
]

# golden-section bracket for the bound minimization; the upper end grows
# geometrically until the minimum is bracketed or the cap is hit
_S_LO = 1e-4
_S_CAP = 1e12
_GOLDEN_TOL = 1e-12


class StopReason(str, Enum):
    BOUND_MET = "bound_met"
    ITERATION_CAP = "iteration_cap"


@dataclass(frozen=True)
class StopReport:
    final_sample_size: int
    iterations: int
    xi: float
    epsilon: float
    stopped_by: StopReason


@dataclass(frozen=True)
class Schedule:
    """Geometric sample schedule: the i-th checkpoint is ceil(alpha^(i-1) * initial)."""

    initial: int
    alpha: float

    def __post_init__(self):
        if self.initial < 1:
            raise ValueError("initial sample size must be >= 1")
        if self.alpha <= 1.0:
            raise ValueError("schedule constant alpha must be > 1")

    def size(self, iteration: int) -> int:
        return math.ceil(self.alpha ** (iteration - 1) * self.initial)


@dataclass
class RademacherState:
    """Running per-node sums needed by the stopping bound.

    ``b`` maps a squared-norm value to the number of touched nodes currently
    holding it; ``b1``/``b2`` hold each touched node's running value sum and
    squared-value sum. Nodes never touched correspond to all-zero value
    vectors and are accounted for separately via ``n_nodes``.
    """

    n_nodes: int
    b: dict[float, int] = field(default_factory=dict)
    b1: dict[int, float] = field(default_factory=dict)
    b2: dict[int, float] = field(default_factory=dict)

    @property
    def untouched(self) -> int:
        return self.n_nodes - len(self.b2)


def initial_sample_size(epsilon: float, delta: float) -> int:
    """Smallest schedule start at which the zero-complexity stopping bound can
    already reach ``epsilon``: ceil((1 + 8e + sqrt(1 + 16e)) * ln(6/d) / (4e^2))."""
    _check_eps_delta(epsilon, delta)
    closed_form = (1 + 8 * epsilon + math.sqrt(1 + 16 * epsilon)) * math.log(6 / delta)
    return math.ceil(closed_form / (4 * epsilon * epsilon))


def update_values(state: RademacherState, u: int, h_u: float) -> None:
    """Fold one per-sample value for node u into the state.

    Moves one unit of mass in the squared-norm multiset from the node's old
    norm to its new one, and advances the running sums. A zero value changes
    nothing and is skipped outright.
    """
    if not 0.0 <= h_u <= 1.0:
        raise ValueError(f"per-sample value {h_u!r} outside [0, 1]")
    if h_u == 0.0:
        return
    old = state.b2.get(u, 0.0)
    new = old + h_u * h_u
    state.b[new] = state.b.get(new, 0) + 1
    if state.b.get(old, 0) >= 1:
        state.b[old] -= 1
        if old > 0 and state.b[old] == 0:
            del state.b[old]
    state.b1[u] = state.b1.get(u, 0.0) + h_u
    state.b2[u] = new


def _log_mass(state: RademacherState, s: float, r: int) -> float:
    """log of: sum over nodes of exp(s^2 * ||v||^2 / (2 r^2)), stably."""
    scale = s * s / (2.0 * r * r)
    exponents = []
    counts = []
    if state.untouched > 0:
        exponents.append(0.0)
        counts.append(state.untouched)
    for norm, count in state.b.items():
        if count > 0:
            exponents.append(scale * norm)
            counts.append(count)
    m = max(exponents)
    total = sum(c * math.exp(a - m) for a, c in zip(exponents, counts))
    return m + math.log(total)


def rademacher_bound(state: RademacherState, r: int) -> float:
    """Upper bound on the empirical Rademacher average of the node-value
    family: min over s > 0 of (1/s) * log(sum_nodes exp(s^2 ||v||^2 / (2 r^2))).

    The objective is unimodal, so a golden-section search on a bracket grown
    geometrically from the left end finds the minimum; if the function is
    still decreasing at the bracket cap the capped value is returned, which is
    still a valid upper bound.
    """
    if r < 1:
        raise ValueError("sample size must be >= 1")
    if state.n_nodes <= 0:
        return 0.0

    def w(s: float) -> float:
        return _log_mass(state, s, r) / s

    lo = _S_LO
    hi = lo * 8.0
    prev = w(lo)
    while hi < _S_CAP:
        cur = w(hi)
        if cur > prev:
            break
        prev = cur
        hi *= 8.0
    hi = min(hi, _S_CAP)
    return min(w(lo), w(hi), _golden_min(w, lo, hi))


def _golden_min(w, lo: float, hi: float) -> float:
    inv_phi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c = b - inv_phi * (b - a)
    d = a + inv_phi * (b - a)
    wc, wd = w(c), w(d)
    while b - a > _GOLDEN_TOL * max(1.0, abs(a)):
        if wc < wd:
            b, d, wd = d, c, wc
            c = b - inv_phi * (b - a)
            wc = w(c)
        else:
            a, c, wc = c, d, wd
            d = a + inv_phi * (b - a)
            wd = w(d)
    return min(wc, wd)


def stopping_xi(R: float, r: int, delta_i: float) -> float:
    """Supremum-deviation bound at the current checkpoint.

    With probability at least 1 - delta_i, every node's estimate is within
    this value of its expectation.
    """
    if R < 0:
        raise ValueError("Rademacher bound must be nonnegative")
    if r < 1:
        raise ValueError("sample size must be >= 1")
    if not 0.0 < delta_i < 1.0:
        raise ValueError("confidence budget must be in (0, 1)")
    ln_term = math.log(3.0 / delta_i)
    return (
        2.0 * R
        + (ln_term + math.sqrt((ln_term + 4.0 * r * R) * ln_term)) / r
        + math.sqrt(ln_term / (2.0 * r))
    )


def progressive_estimate(
    graph: TemporalGraph,
    opt: PathOptimality,
    epsilon: float,
    delta: float,
    alpha: float,
    algorithm: Algorithm,
    seed: int,
    *,
    iteration_cap: int | None = None,
) -> tuple[ScoreVector, StopReport]:
    """Pair sampling along a geometric schedule until the bound meets epsilon.

    Per sample: draw an ordered pair, run a truncated search; when the pair is
    connected, fold each internal node's value into the state (the exact path
    fraction for ``ob``, a 0/1 indicator of one uniformly drawn path for
    ``trk``). At each checkpoint the supremum-deviation bound is evaluated
    with confidence budget delta / 2^i. On a bound-met stop, all node
    estimates are within epsilon of the truth with probability at least
    1 - delta. For ``trk`` the sample size is additionally capped at the
    union-bound size, after which the run stops regardless.
    """
    _check_eps_delta(epsilon, delta)
    if algorithm not in (Algorithm.OB, Algorithm.TRK):
        raise ValueError("progressive_estimate supports the ob and trk estimators")
    if graph.n < 2:
        raise ValueError("sampling estimators need at least 2 nodes")

    cap = iteration_cap
    if cap is None and algorithm is Algorithm.TRK:
        cap = hoeffding_size(epsilon, delta, graph.n)

    schedule = Schedule(initial_sample_size(epsilon, delta), alpha)
    state = RademacherState(graph.n)
    done = 0
    iteration = 0
    while True:
        iteration += 1
        target = schedule.size(iteration)
        if cap is not None:
            target = min(target, cap)
        for i in range(done, target):
            rng = substream(seed, i)
            s, z = draw_pair(rng, graph.n)
            result = truncated_tbfs(graph, s, z, opt)
            if result.pair_sigma(z) == 0:
                continue
            if algorithm is Algorithm.OB:
                for u in sorted(result.dependency):
                    update_values(state, u, float(result.dependency[u]))
            else:
                for u in sample_optimal_path(result, rng).internal():
                    update_values(state, u, 1.0)
        done = target
        bound = rademacher_bound(state, done)
        xi = stopping_xi(bound, done, delta / 2.0**iteration)
        if xi <= epsilon:
            reason = StopReason.BOUND_MET
            break
        if cap is not None and done >= cap:
            reason = StopReason.ITERATION_CAP
            break

    values = np.array(
        [state.b1.get(u, 0.0) / done for u in range(graph.n)], dtype=np.float64
    )
    report = StopReport(done, iteration, xi, epsilon, reason)
    return ScoreVector(opt, values, sample_size=done), report


def prtb_estimate(
    graph: TemporalGraph,
    opt: PathOptimality,
    c: float,
    seed: int,
    *,
    max_samples: int | None = None,
) -> tuple[ScoreVector, StopReport]:
    """Source sampling until some node's accumulated dependency reaches c * n.

    The estimator itself is the uniform-source one; the threshold only decides
    when to stop, checked after every sample. Returns each node's accumulated
    dependency divided by (n - 1) * r. In the stop report, ``xi`` carries the
    largest accumulated dependency and ``epsilon`` the threshold ``c * n``.
    """
    if c < 2:
        raise ValueError("threshold constant c must be >= 2")
    if graph.n < 2:
        raise ValueError("sampling estimators need at least 2 nodes")

    threshold = c * graph.n
    totals: dict[int, Fraction] = {}
    max_total = Fraction(0)
    r = 0
    reason = StopReason.ITERATION_CAP
    while True:
        s = draw_source(substream(seed, r), graph.n)
        for v, val in full_tbfs(graph, s, opt).dependency.items():
            cur = totals.get(v, Fraction(0)) + val
            totals[v] = cur
            if cur > max_total:
                max_total = cur
        r += 1
        if max_total >= threshold:
            reason = StopReason.BOUND_MET
            break
        if max_samples is not None and r >= max_samples:
            break

    denom = (graph.n - 1) * r
    values = np.array(
        [float(totals.get(v, Fraction(0)) / denom) for v in range(graph.n)], dtype=np.float64
    )
    report = StopReport(r, r, float(max_total), float(threshold), reason)
    return ScoreVector(opt, values, sample_size=r), report


def _check_eps_delta(epsilon: float, delta: float) -> None:
    if not 0.0 < epsilon < 1.0:
        raise ValueError("epsilon must be in (0, 1)")
    if not 0.0 < delta < 1.0:
        raise ValueError("delta must be in (0, 1)")
