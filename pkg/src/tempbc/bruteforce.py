"""Exhaustive path enumeration, the ground-truth oracle for tiny graphs.

Enumerates strict simple temporal paths directly from their definition by
depth-first search, then filters to the requested optimality. Deliberately
independent of the counting engines in :mod:`tempbc.tbfs`, so the two can be
checked against each other.
"""

from __future__ import annotations

from fractions import Fraction

from .graph import TemporalGraph
from .tbfs import PathOptimality

__all__ = [
    "PathBudgetExceeded",
    "enumerate_paths_bruteforce",
    "bruteforce_pair_stats",
    "bruteforce_dependency",
    "bruteforce_betweenness",
]

# a path is a tuple of edges (u, v, t); parallel edges yield repeated entries
Path = tuple[tuple[int, int, int], ...]


class PathBudgetExceeded(RuntimeError):
    """DFS step budget exhausted; the graph is too large for enumeration."""


def _all_paths_from(graph: TemporalGraph, s: int, budget: int) -> dict[int, list[Path]]:
    """Every strict simple temporal path from s, grouped by destination."""
    out: dict[int, list[Path]] = {}
    steps = 0
    path: list[tuple[int, int, int]] = []
    visited = {s}

    def extend(node: int, last_time: int) -> None:
        nonlocal steps
        for t, w in graph.out_edges_after(node, last_time):
            steps += 1
            if steps > budget:
                raise PathBudgetExceeded(f"exceeded {budget} DFS steps from source {s}")
            if w in visited:
                continue
            path.append((node, w, t))
            out.setdefault(w, []).append(tuple(path))
            visited.add(w)
            extend(w, t)
            visited.remove(w)
            path.pop()

    extend(s, 0)
    return out


def _arrival(path: Path) -> int:
    return path[-1][2]


def _filter_optimal(paths_by_dest: dict[int, list[Path]], z: int, opt: PathOptimality) -> list[Path]:
    candidates = paths_by_dest.get(z, [])
    if not candidates:
        return []
    if opt is PathOptimality.SHORTEST:
        best = min(len(p) for p in candidates)
        return [p for p in candidates if len(p) == best]
    if opt is PathOptimality.SHORTEST_FOREMOST:
        foremost = min(_arrival(p) for p in candidates)
        at_foremost = [p for p in candidates if _arrival(p) == foremost]
        best = min(len(p) for p in at_foremost)
        return [p for p in at_foremost if len(p) == best]
    # prefix-foremost: every prefix arrives at its node's earliest time
    foremost_time = {
        node: min(_arrival(p) for p in paths) for node, paths in paths_by_dest.items()
    }
    kept = []
    for p in candidates:
        if all(t == foremost_time[v] for _, v, t in p):
            kept.append(p)
    return kept


def enumerate_paths_bruteforce(
    graph: TemporalGraph, s: int, z: int, opt: PathOptimality, *, budget: int = 200_000
) -> list[Path]:
    """All optimal strict simple temporal paths from s to z.

    Raises :class:`PathBudgetExceeded` when the DFS would take more than
    ``budget`` edge-extension steps.
    """
    if s == z:
        raise ValueError("source and destination must differ")
    return _filter_optimal(_all_paths_from(graph, s, budget), z, opt)


def internal_nodes(path: Path) -> list[int]:
    return [v for _, v, _ in path[:-1]]


def bruteforce_pair_stats(
    graph: TemporalGraph, s: int, z: int, opt: PathOptimality, *, budget: int = 200_000
) -> tuple[int, dict[int, int]]:
    """(sigma, per-node count of optimal s-z paths with that node internal)."""
    paths = enumerate_paths_bruteforce(graph, s, z, opt, budget=budget)
    through: dict[int, int] = {}
    for p in paths:
        for v in internal_nodes(p):
            through[v] = through.get(v, 0) + 1
    return len(paths), through


def bruteforce_dependency(
    graph: TemporalGraph, s: int, opt: PathOptimality, *, budget: int = 200_000
) -> dict[int, Fraction]:
    """Per-node dependency of source s, summed over all destinations."""
    paths_by_dest = _all_paths_from(graph, s, budget)
    dep: dict[int, Fraction] = {}
    for z in paths_by_dest:
        if z == s:
            continue
        optimal = _filter_optimal(paths_by_dest, z, opt)
        if not optimal:
            continue
        sigma = len(optimal)
        for p in optimal:
            for v in internal_nodes(p):
                dep[v] = dep.get(v, Fraction(0)) + Fraction(1, sigma)
    return {v: val for v, val in dep.items() if val != 0}


def bruteforce_betweenness(
    graph: TemporalGraph, opt: PathOptimality, *, budget: int = 200_000
) -> dict[int, Fraction]:
    """Normalized temporal betweenness of every node by full enumeration."""
    n = graph.n
    totals: dict[int, Fraction] = {v: Fraction(0) for v in range(n)}
    if n <= 1:
        return totals
    scale = Fraction(1, n * (n - 1))
    for s in range(n):
        for v, val in bruteforce_dependency(graph, s, opt, budget=budget).items():
            totals[v] += val
    return {v: val * scale for v, val in totals.items()}
