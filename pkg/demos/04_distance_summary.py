"""Temporal distance and connectivity summary by source sampling.

Hop distances over strict temporal paths give a diameter, an effective
(percentile) diameter, the temporal connectivity rate (fraction of ordered
pairs that are temporally connected), and the average distance. A census over
all sources is exact; a sample of about ln(n)/eps^2 sources is already close.
The connectivity rate is worth checking first on real data: when it is low,
pair- and path-sampling estimators waste most samples on unconnected pairs.
"""

import numpy as np

from tempbc import estimate_distances, load_edge_list, recommended_sample_size

rng = np.random.default_rng(8)
n, m = 300, 1500
lines = []
for _ in range(m):
    u, v = rng.choice(n, size=2, replace=False)
    lines.append(f"{u} {v} {rng.integers(1, 60)}")
graph = load_edge_list("\n".join(lines))

census = estimate_distances(graph, graph.n, tau=0.9, seed=0)
s = recommended_sample_size(graph.n, epsilon=0.2)
sampled = estimate_distances(graph, s, tau=0.9, seed=0)

print(f"{'':>18} {'census':>10} {f'{s} sources':>12}")
for label, attr in (
    ("diameter", "diameter"),
    ("eff. diameter", "effective_diameter"),
    ("connectivity", "connectivity_rate"),
    ("avg distance", "avg_distance"),
):
    a = getattr(census, attr)
    b = getattr(sampled, attr)
    print(f"{label:>18} {a:>10.4g} {b:>12.4g}")

print("\nThe sampled diameter can only undershoot: sampling misses long")
print("distances but never invents them.")
