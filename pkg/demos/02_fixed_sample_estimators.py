"""Fixed-sample-size estimators against the exact scores.

Three unbiased estimators with different sample spaces and costs:
source sampling (rtb, one full search per sample), pair sampling (ob, one
truncated search per sample), and path sampling (trk, a truncated search plus
one uniformly drawn optimal path). The a-priori bounds say how many samples
guarantee a given accuracy.
"""

import numpy as np

from tempbc import (
    PathOptimality,
    exact_tbc,
    hoeffding_size,
    load_edge_list,
    ob_estimate,
    rtb_estimate,
    trk_estimate,
    vc_size,
)

rng = np.random.default_rng(42)
n, m = 120, 600
lines = []
for _ in range(m):
    u, v = rng.choice(n, size=2, replace=False)
    lines.append(f"{u} {v} {rng.integers(1, 40)}")
graph = load_edge_list("\n".join(lines))

opt = PathOptimality.SHORTEST
exact = exact_tbc(graph, opt)

eps, delta = 0.1, 0.1
r_union = hoeffding_size(eps, delta, graph.n)
print(f"union-bound size for eps={eps}, delta={delta}, n={graph.n}: {r_union}")
print(f"diameter-based size at vertex diameter 12: {vc_size(eps, delta, 12)} (heuristic)\n")

print(f"{'estimator':>10} {'samples':>8} {'sup deviation':>14} {'mse':>12}")
for name, estimator, r in (
    ("rtb", rtb_estimate, 60),
    ("ob", ob_estimate, r_union),
    ("trk", trk_estimate, r_union),
):
    scores = estimator(graph, opt, r, seed=7)
    err = np.abs(scores.values - exact.values)
    print(f"{name:>10} {r:>8} {err.max():>14.5f} {np.mean(err * err):>12.3e}")

print("\nAll stay well inside the eps=0.1 guarantee; pair and path sampling")
print("get there with far less work per sample than full source searches.")
