"""Judging an approximation: error metrics and ranking agreement.

Sup deviation and mean squared error measure the scores themselves; the
weighted rank correlation (hyperbolic weights, so the top of the ranking
dominates) and the top-k overlap measure whether the important nodes are
recovered even when individual scores are off.
"""

import numpy as np

from tempbc import (
    Algorithm,
    PathOptimality,
    compare,
    exact_tbc,
    load_edge_list,
    progressive_estimate,
    rtb_estimate,
)

rng = np.random.default_rng(21)
n, m = 150, 750
lines = []
for _ in range(m):
    u, v = rng.choice(n, size=2, replace=False)
    lines.append(f"{u} {v} {rng.integers(1, 40)}")
graph = load_edge_list("\n".join(lines))

opt = PathOptimality.PREFIX_FOREMOST
exact = exact_tbc(graph, opt)

cheap = rtb_estimate(graph, opt, 15, seed=2)
tight, stop = progressive_estimate(graph, opt, 0.07, 0.1, 1.5, Algorithm.OB, seed=2)

print(f"{'':>16} {'15 sources':>12} {f'{stop.final_sample_size} pairs':>12}")
for label, attr in (
    ("sup deviation", "sup_deviation"),
    ("mse", "mse"),
    ("weighted tau", "weighted_kendall"),
    ("top-20 overlap", "topk_intersection"),
):
    a = getattr(compare(exact, cheap, k=20), attr)
    b = getattr(compare(exact, tight, k=20), attr)
    print(f"{label:>16} {a:>12.4g} {b:>12.4g}")

print("\nA handful of full source searches already ranks nodes decently, but")
print("the progressive pair sample pins the values themselves much tighter.")
