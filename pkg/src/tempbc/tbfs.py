"""Per-source temporal BFS engines for optimal strict temporal paths.

Counts paths over vertex appearances ``(node, time)``. A strict temporal path
uses strictly increasing edge labels and visits every node at most once. Three
optimality criteria are supported:

* shortest (``sh``): fewest hops over all arrival times,
* shortest-foremost (``sfm``): fewest hops among paths arriving at the
  earliest reachable time,
* prefix-foremost (``pfm``): earliest arrival such that every prefix also
  arrives earliest.

For ``sh``/``sfm`` the engine runs a hop-layered BFS over appearances; for
``pfm`` a single sweep of edges in time order suffices. Path counts are exact
integers; dependency aggregates are exact rationals.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from .graph import TemporalGraph

__all__ = [
    "PathOptimality",
    "AppearanceRecord",
    "PairTargets",
    "TbfsResult",
    "full_tbfs",
    "truncated_tbfs",
]

Appearance = tuple[int, int]


class PathOptimality(str, Enum):
    SHORTEST = "sh"
    SHORTEST_FOREMOST = "sfm"
    PREFIX_FOREMOST = "pfm"

    @classmethod
    def parse(cls, tag: str) -> "PathOptimality":
        try:
            return cls(tag.lower())
        except ValueError:
            raise ValueError(f"unknown path optimality {tag!r}; expected sh, sfm, or pfm") from None


@dataclass(slots=True)
class AppearanceRecord:
    """Counting state for one reachable vertex appearance.

    ``sigma`` is the number of admissible paths whose last edge arrives here;
    ``predecessors`` maps each predecessor appearance to its edge multiplicity
    (parallel edges count separately). All predecessor times are strictly
    smaller than this appearance's time.
    """

    appearance: Appearance
    hops: int
    sigma: int
    predecessors: dict[Appearance, int] = field(default_factory=dict)


@dataclass(slots=True, frozen=True)
class PairTargets:
    """Optimal-path endpoints for one destination: target appearances and the
    total optimal-path count sigma."""

    appearances: tuple[Appearance, ...]
    sigma: int


@dataclass(slots=True)
class TbfsResult:
    """Output of one (possibly truncated) temporal BFS.

    ``dependency[v]`` is the exact rational sum over reachable destinations z
    of (optimal s-z paths through v) / (optimal s-z paths). For a truncated
    run it is restricted to the single requested destination, i.e. the
    per-pair ratio vector.
    """

    source: int
    optimality: PathOptimality
    records: dict[Appearance, AppearanceRecord]
    per_target: dict[int, PairTargets]
    dependency: dict[int, Fraction]

    def pair_sigma(self, z: int) -> int:
        info = self.per_target.get(z)
        return info.sigma if info is not None else 0


def full_tbfs(graph: TemporalGraph, s: int, opt: PathOptimality) -> TbfsResult:
    """All-destinations optimal path counts and dependency aggregates from s."""
    if not 0 <= s < graph.n:
        raise ValueError(f"source {s} out of range for n={graph.n}")
    if opt is PathOptimality.PREFIX_FOREMOST:
        records, settle_time = _prefix_foremost_sweep(graph, s)
        per_target = {
            z: PairTargets(((z, t),), records[(z, t)].sigma)
            for z, t in settle_time.items()
            if z != s
        }
    else:
        records, settle_hops, settle_apps, min_time = _shortest_bfs(graph, s)
        per_target = _select_targets(opt, s, records, settle_hops, settle_apps, min_time)
    dependency = _accumulate_dependency(graph.n, s, records, per_target)
    return TbfsResult(s, opt, records, per_target, dependency)


def truncated_tbfs(graph: TemporalGraph, s: int, z: int, opt: PathOptimality) -> TbfsResult:
    """Single-pair variant of :func:`full_tbfs`.

    Prunes exploration that cannot lie on an optimal s-z path: hop layers past
    the destination's optimal depth, and (for the foremost criteria) edges at
    or beyond the destination's earliest arrival. The returned sigma, target
    set, and per-node ratios match the full search restricted to z.
    """
    if s == z:
        raise ValueError("source and destination must differ")
    if not 0 <= z < graph.n:
        raise ValueError(f"destination {z} out of range for n={graph.n}")

    if opt is PathOptimality.PREFIX_FOREMOST:
        records, settle_time = _prefix_foremost_sweep(graph, s, stop_node=z)
        if z not in settle_time:
            return TbfsResult(s, opt, records, {z: PairTargets((), 0)}, {})
        app = (z, settle_time[z])
        per_target = {z: PairTargets((app,), records[app].sigma)}
    elif opt is PathOptimality.SHORTEST:
        records, settle_hops, settle_apps, _ = _shortest_bfs(graph, s, stop_node=z)
        if z not in settle_hops:
            return TbfsResult(s, opt, records, {z: PairTargets((), 0)}, {})
        apps = tuple(sorted(settle_apps[z]))
        per_target = {z: PairTargets(apps, sum(records[a].sigma for a in apps))}
    else:
        arrival = _foremost_arrival(graph, s, z)
        if arrival is None:
            return TbfsResult(s, opt, {}, {z: PairTargets((), 0)}, {})
        records, _, _, _ = _shortest_bfs(
            graph, s, stop_node=z, max_time=arrival, max_time_node=z
        )
        app = (z, arrival)
        per_target = {z: PairTargets((app,), records[app].sigma)}

    dependency = _accumulate_dependency(graph.n, s, records, per_target)
    return TbfsResult(s, opt, records, per_target, dependency)


def _shortest_bfs(
    graph: TemporalGraph,
    s: int,
    *,
    stop_node: int | None = None,
    max_time: int | None = None,
    max_time_node: int | None = None,
):
    """Hop-layered BFS over vertex appearances from the sentinel (s, 0).

    Computes, per appearance, the minimum hop count, the number of minimum-hop
    paths ending there, and the predecessor appearances realizing them. Within
    a layer, appearances are expanded in sorted order so predecessor maps are
    reproducible. With ``stop_node`` set, the search halts after the layer in
    which that node first settles. With ``max_time`` set, edges labeled beyond
    it are skipped, and edges labeled exactly ``max_time`` are followed only
    into ``max_time_node``.
    """
    src_app = (s, 0)
    records: dict[Appearance, AppearanceRecord] = {src_app: AppearanceRecord(src_app, 0, 1)}
    settle_hops: dict[int, int] = {s: 0}
    settle_apps: dict[int, list[Appearance]] = {s: [src_app]}
    min_time: dict[int, int] = {}
    out_adj = graph.out_adjacency
    out_times = graph._out_times

    frontier: list[Appearance] = [src_app]
    layer = 0
    while frontier:
        layer += 1
        discovered: dict[Appearance, AppearanceRecord] = {}
        for v, t in sorted(frontier):
            rec = records[(v, t)]
            sigma_v = rec.sigma
            adj = out_adj[v]
            for j in range(bisect_right(out_times[v], t), len(adj)):
                t2, w = adj[j]
                if max_time is not None:
                    if t2 > max_time:
                        break
                    if t2 == max_time and w != max_time_node:
                        continue
                app = (w, t2)
                known = records.get(app)
                if known is None:
                    known = AppearanceRecord(app, layer, 0)
                    records[app] = known
                    discovered[app] = known
                elif known.hops != layer:
                    continue
                known.sigma += sigma_v
                preds = known.predecessors
                preds[(v, t)] = preds.get((v, t), 0) + 1
        for w, t2 in discovered:
            if w not in settle_hops:
                settle_hops[w] = layer
                settle_apps[w] = [(w, t2)]
            elif settle_hops[w] == layer:
                settle_apps[w].append((w, t2))
            if w not in min_time or t2 < min_time[w]:
                min_time[w] = t2
        frontier = list(discovered)
        if stop_node is not None and stop_node in settle_hops:
            break
    return records, settle_hops, settle_apps, min_time


def _select_targets(
    opt: PathOptimality,
    s: int,
    records: dict[Appearance, AppearanceRecord],
    settle_hops: dict[int, int],
    settle_apps: dict[int, list[Appearance]],
    min_time: dict[int, int],
) -> dict[int, PairTargets]:
    per_target: dict[int, PairTargets] = {}
    if opt is PathOptimality.SHORTEST:
        for z, apps in settle_apps.items():
            if z == s:
                continue
            chosen = tuple(sorted(apps))
            per_target[z] = PairTargets(chosen, sum(records[a].sigma for a in chosen))
    else:  # shortest-foremost: the unique earliest appearance, min-hop counts
        for z, t_first in min_time.items():
            if z == s:
                continue
            app = (z, t_first)
            per_target[z] = PairTargets((app,), records[app].sigma)
    return per_target


def _prefix_foremost_sweep(graph: TemporalGraph, s: int, stop_node: int | None = None):
    """Single pass over edges in time order.

    An edge (u, v, t) extends a prefix-foremost path iff u is already settled
    strictly before t. It settles v at t on first arrival, or adds counts when
    t equals v's settle time. Each node has exactly one appearance, at its
    earliest arrival. Edges tied at one label cannot chain (strict paths), so
    any processing order within a label is correct.
    """
    arrival: dict[int, int] = {s: 0}
    records: dict[Appearance, AppearanceRecord] = {(s, 0): AppearanceRecord((s, 0), 0, 1)}
    for e in graph.edges_by_time:
        if stop_node is not None and stop_node in arrival and e.time > arrival[stop_node]:
            break
        a_u = arrival.get(e.src)
        if a_u is None or a_u >= e.time:
            continue
        u_rec = records[(e.src, a_u)]
        a_v = arrival.get(e.dst)
        if a_v is None:
            arrival[e.dst] = e.time
            rec = AppearanceRecord((e.dst, e.time), u_rec.hops + 1, u_rec.sigma)
            rec.predecessors[(e.src, a_u)] = 1
            records[(e.dst, e.time)] = rec
        elif a_v == e.time:
            rec = records[(e.dst, e.time)]
            rec.sigma += u_rec.sigma
            rec.hops = min(rec.hops, u_rec.hops + 1)
            preds = rec.predecessors
            preds[(e.src, a_u)] = preds.get((e.src, a_u), 0) + 1
        # a_v < e.time: arriving later than the earliest time, not foremost
    settle_time = {v: t for v, t in arrival.items()}
    return records, settle_time


def _foremost_arrival(graph: TemporalGraph, s: int, z: int) -> int | None:
    """Earliest arrival time at z from s (None when unreachable)."""
    arrival: dict[int, int] = {s: 0}
    for e in graph.edges_by_time:
        a_u = arrival.get(e.src)
        if a_u is None or a_u >= e.time:
            continue
        if e.dst not in arrival:
            arrival[e.dst] = e.time
            if e.dst == z:
                return e.time
    return arrival.get(z)


def _accumulate_dependency(
    n: int,
    s: int,
    records: dict[Appearance, AppearanceRecord],
    per_target: dict[int, PairTargets],
) -> dict[int, Fraction]:
    """One backward pass over the predecessor DAG.

    Each target appearance of destination z is seeded with the fraction of
    optimal s-z paths arriving there; weight flows to predecessors in
    proportion to multiplicity times their sigma. The weight arriving at a
    node's appearances (seeds excluded) is exactly the sum over z of the
    fraction of optimal s-z paths with that node internal.
    """
    seeds: dict[Appearance, Fraction] = {}
    for z, info in per_target.items():
        if info.sigma == 0:
            continue
        for app in info.appearances:
            seeds[app] = seeds.get(app, Fraction(0)) + Fraction(records[app].sigma, info.sigma)

    if not seeds:
        return {}

    acc: dict[Appearance, Fraction] = {}
    # predecessor times are strictly smaller, so descending time order is a
    # topological order of the appearance DAG
    for app in sorted(seeds.keys() | _backward_reachable(records, seeds), key=lambda a: -a[1]):
        weight = seeds.get(app, Fraction(0)) + acc.get(app, Fraction(0))
        if weight == 0:
            continue
        rec = records[app]
        if not rec.predecessors:
            continue
        sigma_here = rec.sigma
        for pred, mult in rec.predecessors.items():
            share = weight * Fraction(mult * records[pred].sigma, sigma_here)
            acc[pred] = acc.get(pred, Fraction(0)) + share

    dependency: dict[int, Fraction] = {}
    for (v, _), value in acc.items():
        if v == s:
            continue
        dependency[v] = dependency.get(v, Fraction(0)) + value
    return {v: val for v, val in dependency.items() if val != 0}


def _backward_reachable(
    records: dict[Appearance, AppearanceRecord], seeds: dict[Appearance, Fraction]
) -> set[Appearance]:
    seen: set[Appearance] = set()
    stack = list(seeds)
    while stack:
        app = stack.pop()
        if app in seen:
            continue
        seen.add(app)
        stack.extend(p for p in records[app].predecessors if p not in seen)
    return seen
