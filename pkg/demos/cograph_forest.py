"""Exact answers when the bounded vertices induce a cograph.

Run: python3 demos/cograph_forest.py
"""
from itertools import combinations

from degforest import DegreeSpec, Graph, NotCograph, cograph_forest
from degforest.cograph import BruteForceMinimizer, b_value, minimize_b, prune_edges, saturate_f
from degforest.oracle import brute_forest_exists

# Edge u-v with two helpers w1, w2 that both see u and v.
G = Graph(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)])
spec = DegreeSpec({0: 2, 1: 2})
oracle = BruteForceMinimizer()
F = cograph_forest(G, spec, oracle)
print(f"two helpers: forest {list(F.edges)} using {oracle.calls} minimiser calls")

# With a single helper the count fails: b({u, v}) = |N| + 2|X| - c - f = 1 + 4 - 1 - 4.
H = Graph(3, [(0, 1), (0, 2), (1, 2)])
print(f"one helper: {cograph_forest(H, spec)}")

# Deleting every redundant helper edge at once is not safe. Here 1 and 3 both
# see both ends of the tight pair {0, 2}; one of them must keep its edges.
K = Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)])
spec = DegreeSpec({0: 2, 2: 2})
sat = saturate_f(K, spec)
print(f"K4 minus an edge: saturated bounds {sat.f}, pruned edges {list(prune_edges(K, sat).edges)}")
print(f"   min b after pruning: {minimize_b(prune_edges(K, sat), sat)[0]}")

# When the bounded vertices induce a path on four vertices the criterion breaks.
P = Graph(6, [(0, 1), (1, 2), (2, 3), (0, 4), (3, 4), (1, 5), (2, 5)])
spec = DegreeSpec({v: 2 for v in range(4)})
low = min(b_value(P, spec, X) for k in range(1, 5) for X in combinations(range(4), k))
print(f"P4 core: min b = {low}, yet a forest exists: {brute_forest_exists(P, spec)}")
try:
    cograph_forest(P, spec)
except NotCograph as exc:
    print(f"   refused: {exc}")
