"""Forests that lose at most d edges at every vertex, and spanning trees of
sparse planar graphs.

Run: python3 demos/defect_forest.py   (needs networkx for the sample graphs)
"""
import networkx as nx

from degforest import Graph, PreconditionRefuted, defect_forest, planar_girth_tree
from degforest.wndt import DensityWitness, defects, max_density


def load(g):
    return Graph.from_networkx(nx.convert_node_labels_to_integers(g, ordering="sorted"))


for name, G in [("5-cycle", load(nx.cycle_graph(5))), ("star K1,5", load(nx.star_graph(5))),
                ("octahedron", load(nx.octahedral_graph()))]:
    out = defect_forest(G, 2)
    if isinstance(out, DensityWitness):
        print(f"{name}: too dense, X = {sorted(out.X)} has 6|X| = {out.lhs} <= 4 i(X) = {out.rhs}")
        print(f"   (max i(X)/(|X|-1) is {max_density(G)})")
    else:
        print(f"{name}: forest {list(out.edges)}, defects {defects(G, out)}")

# Planar graphs of girth 5 have spanning trees losing at most 4 edges per
# vertex, girth 6 at most 2.
dodeca = load(nx.dodecahedral_graph())
T = planar_girth_tree(dodeca, 5)
print(f"dodecahedron: spanning tree of {len(T)} edges, worst defect {max(defects(dodeca, T))}")

hexa = load(nx.hexagonal_lattice_graph(4, 4))
T = planar_girth_tree(hexa, 6)
print(f"hexagonal patch n={hexa.n}: spanning tree of {len(T)} edges, worst defect {max(defects(hexa, T))}")

# A false promise is caught either by a short cycle or by a dense set.
try:
    planar_girth_tree(load(nx.complete_graph(4)), 5)
except PreconditionRefuted as exc:
    print(f"K4 claimed girth 5: {exc}")
