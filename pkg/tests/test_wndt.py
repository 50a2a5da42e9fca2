from fractions import Fraction

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from degforest.errors import DisconnectedGraph, PreconditionRefuted
from degforest.graph import DegreeSpec, ForestEdges, Graph, induced_edge_count, is_forest
from degforest.oracle import brute_density_min
from degforest.wndt import (
    DensityWitness,
    defect_forest,
    defects,
    derive_spec,
    grow_certificate,
    induced_edge_table,
    max_density,
    planar_girth_tree,
    shortest_cycle,
)

from support import from_nx, graphs, hex_fragment, octahedron, projective_incidence

C5 = from_nx(nx.cycle_graph(5))
K15 = from_nx(nx.star_graph(5))
K4 = from_nx(nx.complete_graph(4))


def test_derive_spec():
    assert derive_spec(C5, 2) == DegreeSpec()
    assert derive_spec(K15, 2) == DegreeSpec({0: 3})
    assert derive_spec(from_nx(nx.complete_graph(5)), 2) == DegreeSpec({v: 2 for v in range(5)})
    with pytest.raises(ValueError):
        derive_spec(C5, 1)


def test_defect_forest_examples():
    F = defect_forest(C5, 2)
    assert F.edges == ()
    assert defects(C5, F) == [2] * 5
    F = defect_forest(K15, 2)
    assert F.degree(0) >= 3 and max(defects(K15, F)) <= 2


def test_octahedron_witness():
    w = defect_forest(octahedron(), 2)
    assert isinstance(w, DensityWitness)
    assert (w.X, w.lhs, w.rhs) == (frozenset(range(6)), 36, 48)
    assert w.holds()


def test_grow_certificate():
    # 3 sees both ends of the edge 0-1, 4 sees only one
    G = Graph(5, [(0, 1), (0, 3), (1, 3), (1, 4)])
    assert grow_certificate(G, {0, 1}) == {0, 1, 3}


def test_shortest_cycle():
    assert shortest_cycle(from_nx(nx.path_graph(5))) is None
    assert len(shortest_cycle(C5)) == 5
    assert len(shortest_cycle(K4)) == 3
    petersen = from_nx(nx.petersen_graph())
    cyc = shortest_cycle(petersen)
    assert len(cyc) == 5
    assert all(petersen.has_edge(cyc[i], cyc[(i + 1) % 5]) for i in range(5))


def test_planar_girth_tree():
    dodeca = from_nx(nx.dodecahedral_graph())
    T = planar_girth_tree(dodeca, 5)
    assert len(T) == 19 and is_forest(dodeca, T.edges)
    assert max(defects(dodeca, T)) <= 4
    H = hex_fragment()
    assert H.n == 24
    T = planar_girth_tree(H, 6)
    assert len(T) == 23 and max(defects(H, T)) <= 2


def test_planar_girth_refuted_by_short_cycle():
    with pytest.raises(PreconditionRefuted) as info:
        planar_girth_tree(K4, 5)
    assert len(info.value.witness) == 3


def test_planar_girth_errors():
    with pytest.raises(ValueError):
        planar_girth_tree(C5, 4)
    with pytest.raises(DisconnectedGraph):
        planar_girth_tree(Graph(2), 5)


def test_planar_girth_refuted_by_density():
    # girth 6 and 4-regular, hence too dense to be planar
    G = projective_incidence(3)
    with pytest.raises(PreconditionRefuted) as info:
        planar_girth_tree(G, 6)
    w = info.value.witness
    assert isinstance(w, DensityWitness)
    assert (w.X, w.lhs, w.rhs) == (frozenset(range(26)), 156, 208)


def test_sparse_nonplanar_graph_passes():
    # the promise is not checked beyond girth and density
    T = planar_girth_tree(from_nx(nx.heawood_graph()), 6)
    assert len(T) == 13


def test_max_density():
    assert max_density(from_nx(nx.path_graph(5))) == 1
    assert max_density(from_nx(nx.cycle_graph(4))) == Fraction(4, 3)
    assert max_density(K4) == 2
    with pytest.raises(ValueError):
        max_density(Graph(1))


@settings(max_examples=100, deadline=None)
@given(graphs(1, 8))
def test_induced_edge_table(G):
    table = induced_edge_table(G)
    for mask in range(1 << G.n):
        assert table[mask] == induced_edge_count(G, [v for v in range(G.n) if mask >> v & 1])


@settings(max_examples=300, deadline=None)
@given(graphs(1, 8), st.sampled_from([2, 3, 4]))
def test_defect_forest_matches_density(G, d):
    value, _ = brute_density_min(G, d)
    out = defect_forest(G, d)
    if isinstance(out, DensityWitness):
        assert out.holds()
        assert out == DensityWitness.of(G, out.X, d)
    else:
        assert isinstance(out, ForestEdges)
        assert is_forest(G, out.edges)
        assert max(defects(G, out), default=0) <= d
    if value > 0:
        assert isinstance(out, ForestEdges)
