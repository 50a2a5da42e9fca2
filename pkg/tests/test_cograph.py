import itertools
import random

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from degforest.cograph import (
    BFunction,
    BruteForceMinimizer,
    TightSetObjective,
    b0_value,
    b_value,
    cograph_forest,
    edge_needed,
    find_induced_p4,
    is_cograph,
    min_tight_set,
    minimize_b,
    prune_edges,
    saturate_f,
    tight_set_index,
    verify_necessity,
)
from degforest.errors import NoTightSet, NotCograph
from degforest.graph import Certificate, DegreeSpec, ForestEdges, Graph, induced_edge_count, open_neighborhood
from degforest.oracle import brute_forest_exists, check_solution

from support import graphs, p4_counterexample, random_graph

# u=0, v=1, w=2 form a triangle; the apex 3 sees u and v
APEX = Graph(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)])
TRIANGLE = Graph(3, [(0, 1), (0, 2), (1, 2)])
UV = DegreeSpec({0: 2, 1: 2})
STAR3 = Graph(4, [(0, 1), (0, 2), (0, 3)])


def subsets(S):
    S = sorted(S)
    for k in range(1, len(S) + 1):
        for X in itertools.combinations(S, k):
            yield frozenset(X)


def all_tight(G, spec):
    return [X for X in subsets(spec.S) if b_value(G, spec, X) == 1]


def U(G, A, B):
    return (open_neighborhood(G, A) & open_neighborhood(G, B)) - open_neighborhood(G, A & B) - (A | B)


# -- recognition --------------------------------------------------------------

def test_recognition_examples():
    assert is_cograph(Graph(3, [(0, 1)]))
    P4 = Graph(4, [(0, 1), (1, 2), (2, 3)])
    assert not is_cograph(P4)
    assert find_induced_p4(P4, range(4)) in ((0, 1, 2, 3), (3, 2, 1, 0))
    assert is_cograph(Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)]))
    # only the constrained part matters
    assert is_cograph(P4, {0, 1, 2})


@settings(max_examples=200, deadline=None)
@given(graphs(1, 7))
def test_p4_search_is_exact(G):
    direct = any(_is_path(G, Q) for Q in itertools.combinations(range(G.n), 4))
    path = find_induced_p4(G, range(G.n))
    assert (path is not None) == direct
    if path is not None:
        a, b, c, d = path
        assert G.has_edge(a, b) and G.has_edge(b, c) and G.has_edge(c, d)
        assert not (G.has_edge(a, c) or G.has_edge(b, d) or G.has_edge(a, d))


def _is_path(G, Q):
    if induced_edge_count(G, Q) != 3:
        return False
    degs = sorted(sum(G.has_edge(x, y) for y in Q if y != x) for x in Q)
    return degs == [1, 1, 2, 2]


# -- b values -----------------------------------------------------------------

def test_b_values_apex():
    assert b0_value(APEX, UV.S, {0, 1}) == 1
    assert b_value(APEX, UV, {0, 1}) == 1
    assert b_value(APEX, UV, {0}) == 2


def test_b_value_isolated_pair():
    assert b_value(Graph(2), DegreeSpec({0: 2, 1: 2}), {0, 1}) == -2


def test_b_value_rejects_empty_or_outside():
    with pytest.raises(ValueError):
        b_value(APEX, UV, set())
    assert b_value(APEX, UV, set(), allow_empty=True) == 0
    with pytest.raises(ValueError):
        b_value(APEX, UV, {2})


@st.composite
def cograph_instances(draw, max_n=8, max_s=6, bounds=(2, 3, 4)):
    G = draw(graphs(1, max_n))
    S = draw(st.sets(st.integers(0, G.n - 1), min_size=1, max_size=max_s))
    assume(is_cograph(G, S))
    f = {s: draw(st.sampled_from(bounds)) for s in sorted(S)}
    return G, DegreeSpec(f)


@settings(max_examples=200, deadline=None)
@given(cograph_instances())
def test_table_matches_pointwise(inst):
    G, spec = inst
    bfn = BFunction(G, spec)
    table = bfn.table()
    for mask in range(1, 1 << len(bfn.ground)):
        X = {s for j, s in enumerate(bfn.ground) if mask >> j & 1}
        assert table[mask] == b_value(G, spec, X)


@settings(max_examples=300, deadline=None)
@given(cograph_instances(), st.data())
def test_submodular_with_correction(inst, data):
    G, spec = inst
    S = sorted(spec.S)
    A = frozenset(data.draw(st.sets(st.sampled_from(S))))
    B = frozenset(data.draw(st.sets(st.sampled_from(S))))
    u = len(U(G, A, B))
    b0 = lambda X: b0_value(G, spec.S, X, allow_empty=True)
    b = lambda X: b_value(G, spec, X, allow_empty=True)
    assert b0(A | B) + b0(A & B) + u <= b0(A) + b0(B)
    assert b(A | B) + b(A & B) + u <= b(A) + b(B)


@settings(max_examples=60, deadline=None)
@given(cograph_instances(max_n=7, max_s=5))
def test_intersecting_tight_sets(inst):
    G, spec = inst
    if minimize_b(G, spec)[0] < 1:
        return
    spec = saturate_f(G, spec)
    tight = all_tight(G, spec)
    for A, B in itertools.combinations(tight, 2):
        if A & B:
            assert b_value(G, spec, A | B) == 1
            assert b_value(G, spec, A & B) == 1
            assert not U(G, A, B)


# -- minimisation -------------------------------------------------------------

def test_minimize_b_examples():
    assert minimize_b(APEX, UV) == (1, frozenset({0, 1}))
    assert minimize_b(TRIANGLE, UV) == (0, frozenset({0, 1}))
    assert minimize_b(STAR3, DegreeSpec({0: 2})) == (b_value(STAR3, DegreeSpec({0: 2}), {0}), frozenset({0}))


def test_minimizer_counts_calls_and_guards():
    oracle = BruteForceMinimizer()
    minimize_b(APEX, UV, oracle)
    minimize_b(APEX, UV, oracle)
    assert oracle.calls == 2
    with pytest.raises(ValueError):
        BruteForceMinimizer(limit=1).minimize(BFunction(APEX, UV))


def test_tight_set_objective_prefers_v():
    fn = TightSetObjective(BFunction(APEX, UV), 1)
    assert BruteForceMinimizer().minimize(fn)[1] == {0, 1}


def test_min_tight_set_examples():
    assert min_tight_set(APEX, UV, 0) == {0, 1}
    assert min_tight_set(STAR3, DegreeSpec({0: 3}), 0) == {0}
    with pytest.raises(NoTightSet):
        min_tight_set(STAR3, DegreeSpec({0: 2}), 0)


@settings(max_examples=100, deadline=None)
@given(cograph_instances(max_n=7, max_s=5))
def test_min_tight_set_is_smallest(inst):
    G, spec = inst
    if minimize_b(G, spec)[0] < 1:
        return
    spec = saturate_f(G, spec)
    tight = all_tight(G, spec)
    for v in spec.S:
        mine = [X for X in tight if v in X]
        I = min_tight_set(G, spec, v)
        assert I in mine
        assert all(I <= X for X in mine)


def test_saturate_examples():
    assert saturate_f(APEX, UV) == UV
    assert saturate_f(STAR3, DegreeSpec({0: 2})) == DegreeSpec({0: 3})
    with pytest.raises(ValueError):
        saturate_f(TRIANGLE, UV)


@settings(max_examples=100, deadline=None)
@given(cograph_instances(max_n=7, max_s=5))
def test_saturation_is_maximal(inst):
    G, spec = inst
    if minimize_b(G, spec)[0] < 1:
        return
    sat = saturate_f(G, spec)
    assert all(sat.f[v] >= spec.f[v] for v in spec.S)
    assert sum(sat.f.values()) - sum(spec.f.values()) <= 2 * G.n
    assert minimize_b(G, sat)[0] == 1
    for v in sat.S:
        assert minimize_b(G, sat.with_bound(v, sat.f[v] + 1))[0] < 1
    index = tight_set_index(G, sat)
    assert all(v in index[v] for v in sat.S)


# -- pruning ------------------------------------------------------------------

def test_prune_drops_unconstrained_edges():
    G = Graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4)])
    assert prune_edges(G, DegreeSpec({0: 2})).edges == ((0, 1), (0, 2))


def test_prune_keeps_condition_where_batch_deletion_fails():
    # K4 minus 1-3 with S = {0, 2}: vertices 1 and 3 both see both ends of the
    # tight pair, yet one of them has to keep its edges
    G = Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)])
    spec = DegreeSpec({0: 2, 2: 2})
    assert minimize_b(G, spec)[0] == 1
    pruned = prune_edges(G, spec)
    assert pruned.edges == ((0, 1), (0, 2), (2, 3))
    assert minimize_b(pruned, spec)[0] == 1
    assert prune_edges(pruned, spec) == pruned


def test_edge_needed():
    spec = DegreeSpec({0: 2, 2: 2})
    G = Graph(4, [(0, 1), (0, 2), (2, 3)])
    assert edge_needed(G, spec, 1, 0)
    assert edge_needed(G, spec, 3, 2)


@settings(max_examples=100, deadline=None)
@given(cograph_instances(max_n=7, max_s=5))
def test_prune_leaves_only_needed_edges(inst):
    G, spec = inst
    if minimize_b(G, spec)[0] < 1:
        return
    sat = saturate_f(G, spec)
    pruned = prune_edges(G, sat, tight_set_index(G, sat))
    assert minimize_b(pruned, sat)[0] >= 1
    assert set(pruned.edges) <= set(G.edges)
    for u, v in pruned.edges:
        assert u in sat.S or v in sat.S
        if (u in sat.S) != (v in sat.S):
            w, s = (u, v) if v in sat.S else (v, u)
            assert edge_needed(pruned, sat, w, s)


# -- construction -------------------------------------------------------------

def test_apex_pair_forest():
    G = Graph(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)])
    F = cograph_forest(G, UV)
    assert isinstance(F, ForestEdges)
    assert F.edges == ((0, 1), (0, 2), (1, 3))


def test_single_apex_certificate():
    assert cograph_forest(TRIANGLE, UV) == Certificate(frozenset({0, 1}), "theorem9", 4, 4)


def test_p4_core_rejected():
    G, spec = p4_counterexample()
    with pytest.raises(NotCograph) as info:
        cograph_forest(G, spec)
    assert sorted(info.value.path) == [0, 1, 2, 3]


def test_p4_core_satisfies_condition_without_forest():
    G, spec = p4_counterexample()
    assert min(b_value(G, spec, X) for X in subsets(spec.S)) >= 1
    assert not brute_forest_exists(G, spec)
    assert not is_cograph(G, spec.S)


def test_bounds_below_two_rejected():
    with pytest.raises(ValueError):
        cograph_forest(APEX, DegreeSpec({0: 1}))


def test_empty_constraints():
    assert cograph_forest(APEX, DegreeSpec()).edges == ()


def test_verify_necessity():
    F = cograph_forest(APEX, UV)
    assert verify_necessity(APEX, UV, F)
    assert verify_necessity(APEX, UV, [(0, 2), (0, 1), (1, 3)])
    with pytest.raises(ValueError):
        verify_necessity(APEX, UV, [(0, 1)])


@settings(max_examples=300, deadline=None)
@given(cograph_instances(max_n=8, max_s=6, bounds=(2, 3)))
def test_forest_iff_exists(inst):
    G, spec = inst
    oracle = BruteForceMinimizer()
    out = cograph_forest(G, spec, oracle)
    exists = brute_forest_exists(G, spec)
    assert oracle.calls <= 6 * G.n
    if isinstance(out, Certificate):
        assert not exists
        assert b_value(G, spec, out.vertices) <= 0
        assert out.lhs <= out.rhs
    else:
        assert exists
        assert check_solution(G, spec, out.edges)
        assert verify_necessity(G, spec, out.edges)


class CountingMinimizer:
    """Pluggable minimiser that just wraps the default and counts."""

    def __init__(self):
        self.inner = BruteForceMinimizer()
        self.seen = 0

    def minimize(self, fn):
        self.seen += 1
        return self.inner.minimize(fn)


def test_pluggable_minimizer():
    rng = random.Random(11)
    done = 0
    while done < 20:
        G = random_graph(rng, 8, 0.5)
        S = [v for v in range(8) if rng.random() < 0.5]
        if not S or not is_cograph(G, S):
            continue
        spec = DegreeSpec({s: 2 for s in S})
        mine = CountingMinimizer()
        assert cograph_forest(G, spec, mine) == cograph_forest(G, spec)
        assert mine.seen >= 1
        done += 1
