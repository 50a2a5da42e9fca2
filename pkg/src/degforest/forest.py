"""Forests and spanning trees with degree lower bounds on a vertex subset.

If every nonempty ``X`` of the constrained set ``S`` satisfies
``|X ∪ N(X)| > f(X)``, a forest with ``deg_F(v) >= f(v)`` on ``S`` exists and
:func:`degree_forest` builds it in ``O(m sqrt(n))``; otherwise it returns a
set ``X`` where the inequality fails. The condition is sufficient, not
necessary: deciding whether such a spanning tree exists at all is NP-complete
(bounds of 2 on all but two vertices ask for a Hamiltonian path), so a
certificate refutes the condition, not the existence of a tree.

Pipeline:

1. :func:`build_reduction` makes a bipartite graph with a copy ``u'`` of
   each ``u`` in ``S`` on the left, joined to ``u`` and its neighbours.
2. :func:`~degforest.lovasz.exact_degree_forest` finds a forest where each
   ``u'`` has degree exactly ``f(u) + 1``.
3. :func:`force_vertical` swaps edges so that every ``u'u`` is in the forest.
4. :func:`contract_vertical` merges each ``u'`` into ``u``.
"""
from collections import deque

from scipy.cluster.hierarchy import DisjointSet

from .errors import DisconnectedGraph, InternalError
from .graph import (
    Certificate,
    DegreeSpec,
    ForestEdges,
    Graph,
    closed_neighborhood,
    extend_to_spanning_forest,
    is_connected,
)
from .lovasz import BipartiteForest, exact_degree_forest
from .matching import BipartiteAux


def build_reduction(G: Graph, spec: DegreeSpec) -> BipartiteAux:
    """Left vertex ``i`` copies the ``i``-th smallest constrained vertex ``s``
    and is adjacent to ``s`` (the vertical edge) and to every neighbour of ``s``.
    """
    S = sorted(spec.S)
    adj = [G.adjacency[s] + (s,) for s in S]
    return BipartiteAux(G.n, tuple(adj), tuple(S))


def force_vertical(B: BipartiteAux, F0: BipartiteForest) -> BipartiteForest:
    """Make the forest contain every vertical edge without lowering left degrees.

    For a missing ``u'u``: if ``u'`` and ``u`` lie in different trees the edge
    is added, otherwise the first edge of the ``u'``-``u`` path is traded for it.
    """
    n = B.n_right
    total = n + B.n_left
    ds = DisjointSet(range(total))
    nbrs = [set() for _ in range(total)]
    for i, v in F0.edges():
        x = n + i
        if not ds.merge(x, v):
            raise ValueError("F0 is not a forest")
        nbrs[x].add(v)
        nbrs[v].add(x)

    for i, u in B.vertical_edges():
        x = n + i
        if u in nbrs[x]:
            continue
        if ds.merge(x, u):
            nbrs[x].add(u)
            nbrs[u].add(x)
            continue
        # BFS from u until x is found; its BFS parent is x's neighbour on the path
        pred = {u: u}
        queue = deque([u])
        first = None
        while queue and first is None:
            y = queue.popleft()
            for z in nbrs[y]:
                if z not in pred:
                    pred[z] = y
                    if z == x:
                        first = y
                        break
                    queue.append(z)
        if first is None:
            raise InternalError("union-find and forest adjacency disagree")
        nbrs[x].discard(first)
        nbrs[first].discard(x)
        nbrs[x].add(u)
        nbrs[u].add(x)

    return BipartiteForest(tuple(tuple(sorted(nbrs[n + i])) for i in range(B.n_left)))


def contract_vertical(B: BipartiteAux, F1: BipartiteForest) -> ForestEdges:
    """Merge every left copy into its original; vertical edges disappear."""
    edges = []
    for i, u in enumerate(B.origin):
        if u is None:
            raise ValueError(f"left vertex {i} copies no vertex")
        vs = F1.assigned[i]
        if u not in vs:
            raise ValueError(f"vertical edge of left vertex {i} is missing")
        edges.extend((u, v) for v in vs if v != u)
    F = ForestEdges(tuple(edges))
    if len(set(F.edges)) != len(F.edges):
        raise InternalError("two left copies produced the same edge")
    return F


def degree_forest(G: Graph, spec: DegreeSpec) -> ForestEdges | Certificate:
    """Forest with ``deg_F(v) >= f(v)`` for ``v`` in ``S``, or a violating set.

    Bounds must be at least 1 (the command line insists on 2). A returned
    :class:`~degforest.graph.Certificate` ``X`` has ``|X ∪ N(X)| <= f(X)``.
    """
    spec.check(G, minimum=1)
    S = sorted(spec.S)
    if not S:
        return ForestEdges(())
    B = build_reduction(G, spec)
    out = exact_degree_forest(B, [spec.f[s] + 1 for s in S])
    if isinstance(out, Certificate):
        X = frozenset(S[i] for i in out.vertices)
        lhs = len(closed_neighborhood(G, X))
        rhs = spec.total(X)
        if lhs > rhs:
            raise InternalError(f"certificate {sorted(X)} does not violate the condition")
        return Certificate(X, "theorem1", lhs, rhs)
    F1 = force_vertical(B, out)
    return contract_vertical(B, F1)


def degree_spanning_tree(G: Graph, spec: DegreeSpec) -> ForestEdges | Certificate:
    """Spanning tree with the degree bounds of :func:`degree_forest`.

    Raises :class:`~degforest.errors.DisconnectedGraph` for disconnected
    input. The forest is completed by scanning the sorted edge list.
    """
    if not is_connected(G):
        raise DisconnectedGraph(f"graph with n={G.n} is not connected")
    out = degree_forest(G, spec)
    if isinstance(out, Certificate):
        return out
    return ForestEdges(tuple(extend_to_spanning_forest(G, out.edges)))


def verify_certificate(G: Graph, spec: DegreeSpec, X) -> bool:
    """True iff nonempty ``X ⊆ S`` has ``|X ∪ N(X)| <= f(X)``."""
    X = frozenset(X)
    if not X:
        raise ValueError("certificate must be nonempty")
    if not X <= spec.S:
        raise ValueError(f"certificate vertices {sorted(X - spec.S)} are unconstrained")
    return len(closed_neighborhood(G, X)) <= spec.total(X)

