"""Forests and spanning trees with lower degree bounds.

Run: python3 demos/degree_forest.py
"""
import random

from degforest import DegreeSpec, Graph, degree_forest, degree_spanning_tree, verify_certificate
from degforest.graph import Certificate, closed_neighborhood
from degforest.oracle import brute_condition_min, check_solution


def show(title, G, spec, out):
    print(f"-- {title}")
    print(f"   bounds {spec.f}")
    if isinstance(out, Certificate):
        X = sorted(out.vertices)
        print(f"   no luck: X = {X} has |X + N(X)| = {out.lhs} <= f(X) = {out.rhs}")
        print(f"   certificate checks out: {verify_certificate(G, spec, out.vertices)}")
    else:
        deg = out.degrees
        print(f"   edges {list(out.edges)}")
        print("   degrees on S: " + ", ".join(f"{v}:{deg[v]}>={k}" for v, k in spec.f.items()))


# A wheel: hub 0 on a 6-cycle. Ask the hub for 4 edges and rim vertex 2 for 2.
# The hub sees all 7 vertices, so any set containing it may ask for at most 6.
wheel = Graph(7, [(0, i) for i in range(1, 7)] + [(i, i % 6 + 1) for i in range(1, 7)])
spec = DegreeSpec({0: 4, 2: 2})
show("wheel, spanning tree", wheel, spec, degree_spanning_tree(wheel, spec))

# Asking every rim vertex for degree 3 is too much: the rim plus hub has only
# 7 vertices, while the bounds add up to 18.
greedy = DegreeSpec({i: 3 for i in range(1, 7)})
show("wheel, every rim vertex at 3", wheel, greedy, degree_forest(wheel, greedy))

# The condition is checked against an exhaustive minimum over all subsets.
value, X = brute_condition_min(wheel, greedy)
print(f"   exhaustive minimum of |X + N(X)| - f(X): {value} at {sorted(X)}")

# A bigger random instance, checked independently.
rng = random.Random(1)
n = 400
edges = {(min(u, v), max(u, v)) for u, v in ((rng.randrange(n), rng.randrange(n)) for _ in range(3000)) if u != v}
G = Graph(n, sorted(edges))
spec = DegreeSpec({v: 3 for v in range(0, n, 5)})
T = degree_spanning_tree(G, spec)
print(f"-- random graph n={G.n} m={G.m}, {len(spec.S)} vertices bounded by 3")
print(f"   spanning tree with {len(T)} edges, valid: {check_solution(G, spec, T.edges, spanning=True)}")
low = min(len(closed_neighborhood(G, {v})) for v in spec.S)
print(f"   smallest closed neighbourhood among bounded vertices: {low}")
