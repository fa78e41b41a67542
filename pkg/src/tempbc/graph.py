"""Temporal graph loading, relabeling, and adjacency indexing.

A temporal graph is a set of directed contacts ``(u, v, t)``: node ``u`` can
pass to node ``v`` at discrete time ``t``. On load, node ids are compacted to
``0..n-1`` in first-appearance order and raw timestamps are replaced by their
rank among the distinct raw values (1-based). The relabeling is
order-isomorphic, so strict time ordering along paths is preserved; distinct
raw times are never merged.
"""

from __future__ import annotations

import io
from bisect import bisect_right
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, TextIO

__all__ = [
    "TemporalEdge",
    "TemporalGraph",
    "ParseError",
    "load_edge_list",
    "read_edge_list",
    "write_edge_list",
    "summarize",
]

_COMMENT_PREFIXES = ("#", "%")


class ParseError(ValueError):
    """Raised on a malformed edge-list line; carries the 1-based line number."""

    def __init__(self, message: str, line_number: int):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


@dataclass(frozen=True, slots=True)
class TemporalEdge:
    """One directed contact. ``time`` is a relabeled label in ``1..T``."""

    src: int
    dst: int
    time: int


class TemporalGraph:
    """Immutable relabeled temporal edge set with time-sorted adjacency.

    Attributes:
        n: number of nodes.
        edges: stored directed edges (undirected input is stored in both
            orientations, so ``len(edges)`` is twice the kept input rows).
        T: life-time, the number of distinct time labels.
        directed: False when the input was declared undirected.
        node_ids: original input id for each compact id.
        dropped_self_loops: count of self-loop rows removed at load.
        out_adjacency / in_adjacency: per node, ``(time, other)`` pairs sorted
            ascending by time, ties by the other endpoint then input order.
    """

    __slots__ = (
        "n",
        "edges",
        "T",
        "directed",
        "node_ids",
        "dropped_self_loops",
        "out_adjacency",
        "in_adjacency",
        "edges_by_time",
        "_out_times",
        "_in_times",
        "_id_index",
        "_rows",
    )

    def __init__(
        self,
        n: int,
        edges: list[TemporalEdge],
        T: int,
        *,
        directed: bool = True,
        node_ids: tuple[int, ...] | None = None,
        dropped_self_loops: int = 0,
        rows: tuple[tuple[int, int, int], ...] | None = None,
    ):
        self.n = n
        self.edges = tuple(edges)
        self.T = T
        self.directed = directed
        self.node_ids = node_ids if node_ids is not None else tuple(range(n))
        self.dropped_self_loops = dropped_self_loops
        # one row per kept input line, in input order, relabeled
        self._rows = rows if rows is not None else tuple((e.src, e.dst, e.time) for e in edges)
        self._id_index = {orig: i for i, orig in enumerate(self.node_ids)}

        out: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        inc: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for idx, e in enumerate(self.edges):
            out[e.src].append((e.time, e.dst, idx))
            inc[e.dst].append((e.time, e.src, idx))
        self.out_adjacency = tuple(
            tuple((t, w) for t, w, _ in sorted(lst)) for lst in out
        )
        self.in_adjacency = tuple(
            tuple((t, w) for t, w, _ in sorted(lst)) for lst in inc
        )
        self._out_times = tuple([t for t, _ in adj] for adj in self.out_adjacency)
        self._in_times = tuple([t for t, _ in adj] for adj in self.in_adjacency)
        self.edges_by_time = tuple(sorted(self.edges, key=lambda e: e.time))

    def index_of(self, original_id: int) -> int:
        """Compact id of an original input node id."""
        return self._id_index[original_id]

    def out_edges_after(self, node: int, time: int) -> list[tuple[int, int]]:
        """Edges leaving ``node`` with label strictly greater than ``time``."""
        adj = self.out_adjacency[node]
        return list(adj[bisect_right(self._out_times[node], time):])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TemporalGraph):
            return NotImplemented
        return (
            self.n == other.n
            and self.edges == other.edges
            and self.T == other.T
            and self.directed == other.directed
        )

    def __repr__(self) -> str:
        kind = "directed" if self.directed else "undirected"
        return f"TemporalGraph(n={self.n}, edges={len(self.edges)}, T={self.T}, {kind})"


def _iter_lines(source: Iterable[str] | TextIO | str) -> Iterable[str]:
    if isinstance(source, str):
        return io.StringIO(source)
    return source


def load_edge_list(
    source: Iterable[str] | TextIO | str,
    *,
    directed: bool = True,
    dedupe: bool = False,
) -> TemporalGraph:
    """Parse a whitespace-delimited ``u v t`` edge list into a TemporalGraph.

    Lines starting with '#' or '%' and blank lines are skipped. Self-loops are
    dropped (and counted); a simple temporal path can never use one. Duplicate
    rows are kept as parallel temporal edges unless ``dedupe`` is set. For
    undirected input each row is stored in both orientations.
    """
    rows: list[tuple[int, int, int]] = []
    dropped = 0
    seen_rows: set[tuple[int, int, int]] = set()
    for lineno, raw in enumerate(_iter_lines(source), start=1):
        line = raw.strip()
        if not line or line.startswith(_COMMENT_PREFIXES):
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ParseError(f"expected 3 fields, got {len(parts)}", lineno)
        try:
            u, v, t = (int(p) for p in parts)
        except ValueError:
            raise ParseError(f"non-integer field in {line!r}", lineno) from None
        if u == v:
            dropped += 1
            continue
        if dedupe:
            if (u, v, t) in seen_rows:
                continue
            seen_rows.add((u, v, t))
        rows.append((u, v, t))

    id_index: dict[int, int] = {}
    for u, v, _ in rows:
        if u not in id_index:
            id_index[u] = len(id_index)
        if v not in id_index:
            id_index[v] = len(id_index)

    time_rank = {t: i + 1 for i, t in enumerate(sorted({t for _, _, t in rows}))}

    relabeled = tuple((id_index[u], id_index[v], time_rank[t]) for u, v, t in rows)
    edges: list[TemporalEdge] = []
    for u, v, t in relabeled:
        edges.append(TemporalEdge(u, v, t))
        if not directed:
            edges.append(TemporalEdge(v, u, t))

    return TemporalGraph(
        len(id_index),
        edges,
        len(time_rank),
        directed=directed,
        node_ids=tuple(sorted(id_index, key=id_index.get)),
        dropped_self_loops=dropped,
        rows=relabeled,
    )


def read_edge_list(path: str | Path, *, directed: bool = True, dedupe: bool = False) -> TemporalGraph:
    with open(path, "r", encoding="utf-8") as fh:
        return load_edge_list(fh, directed=directed, dedupe=dedupe)


def write_edge_list(graph: TemporalGraph, destination: TextIO | str | Path) -> None:
    """Emit the graph in the input format, with relabeled ids and times.

    One line per kept input row, in input order; reloading the output with the
    same directedness flag reproduces the graph exactly.
    """
    if isinstance(destination, (str, Path)):
        with open(destination, "w", encoding="utf-8") as fh:
            write_edge_list(graph, fh)
        return
    for u, v, t in graph._rows:
        destination.write(f"{u} {v} {t}\n")


def summarize(graph: TemporalGraph) -> tuple[int, int, int]:
    """(node count, stored temporal edge count, life-time)."""
    return graph.n, len(graph.edges), graph.T
