"""Degree-bounded forests when the constrained vertices induce a cograph.

With ``H = G[S]`` P4-free, a forest with ``deg_F(v) >= f(v)`` on ``S`` exists
exactly when every nonempty ``X ⊆ S`` has ``b(X) >= 1``, where

    b0(X) = |N(X)| - c(H[X])          b(X) = b0(X) + 2|X| - f(X).

``b`` is submodular, so the condition is checked by one submodular
minimisation. :func:`cograph_forest` builds the forest with ``O(|V|)``
minimiser calls in total: raise ``f`` until every vertex lies in a tight set
(``b = 1``), find the smallest tight set ``I(v)`` of every vertex, drop edges
the condition does not need, then peel leaves of the forest obtained by
contracting the components of ``H``. The peeling itself never calls the
minimiser again.

The minimiser is pluggable: anything with ``minimize(fn) -> (value, X)``
over nonempty subsets of ``fn.ground`` will do. The default enumerates all
subsets.
"""
from dataclasses import dataclass

import numpy as np

from .errors import InternalError, NoTightSet, NotCograph
from .graph import (
    Certificate,
    DegreeSpec,
    Edge,
    ForestEdges,
    Graph,
    component_count,
    components,
    contract_sets,
    extend_to_spanning_forest,
    is_forest,
    open_neighborhood,
)
from .subsets import (
    component_count_table,
    guard,
    lex_first,
    mask_members,
    modular_table,
    popcounts,
    union_size_table,
)


# -- recognition --------------------------------------------------------------

def find_induced_p4(G: Graph, S) -> tuple[int, int, int, int] | None:
    """An induced path ``a-b-c-d`` inside ``G[S]``, or None if there is none."""
    S = frozenset(S)
    nb = {v: frozenset(G.adjacency[v]) & S for v in S}
    for b in sorted(S):
        for c in sorted(nb[b]):
            for a in sorted(nb[b] - nb[c] - {c}):
                for d in sorted(nb[c] - nb[b] - {b}):
                    if a != d and d not in nb[a]:
                        return (a, b, c, d)
    return None


def is_cograph(G: Graph, S=None) -> bool:
    """True iff ``G[S]`` (all of ``G`` by default) has no induced P4."""
    return find_induced_p4(G, range(G.n) if S is None else S) is None


# -- the set functions ----------------------------------------------------------

def b0_value(G: Graph, S, X, allow_empty: bool = False) -> int:
    """``|N(X)| - c(G[X])`` for ``X ⊆ S``."""
    X = frozenset(X)
    if not X and not allow_empty:
        raise ValueError("b0 is evaluated on nonempty sets only")
    if not X <= frozenset(S):
        raise ValueError("X must be a subset of S")
    return len(open_neighborhood(G, X)) - component_count(G, X)


def b_value(G: Graph, spec: DegreeSpec, X, allow_empty: bool = False) -> int:
    """``b0(X) + 2|X| - f(X)``; the condition asks ``b(X) >= 1``."""
    X = frozenset(X)
    return b0_value(G, spec.S, X, allow_empty) + 2 * len(X) - spec.total(X)


class BFunction:
    """``b`` as a set function over ``ground = sorted(S)``.

    Calling it evaluates one set straight from the graph; :meth:`table`
    gives all ``2**|S|`` values at once from bitmask tables. The two routes
    share nothing but the graph.
    """

    def __init__(self, G: Graph, spec: DegreeSpec, _shared=None):
        self.G = G
        self.spec = spec
        self.ground = tuple(sorted(spec.S))
        self._shared = _shared

    def with_bounds(self, spec: DegreeSpec) -> "BFunction":
        if spec.S != self.spec.S:
            raise ValueError("bounds must keep the same constrained set")
        return BFunction(self.G, spec, self._graph_part() if len(self.ground) <= 24 else None)

    def __call__(self, X) -> int:
        return b_value(self.G, self.spec, X)

    def _graph_part(self) -> np.ndarray:
        if self._shared is None:
            guard(len(self.ground))
            opened = union_size_table(self.G, self.ground, closed=False)
            comps = component_count_table(self.G, self.ground)
            self._shared = opened - comps + 2 * popcounts(len(self.ground))
        return self._shared

    def table(self) -> np.ndarray:
        return self._graph_part() - modular_table(self.spec.f[s] for s in self.ground)


class TightSetObjective:
    """``n*b(X) + |X|``, plus ``penalty`` (default ``3n``) when ``v`` is missing from ``X``.

    Its minimiser is the smallest tight set containing ``v`` whenever one
    exists. With ``penalty > 3n**2 + n`` (more than ``n*b + |X|`` can ever
    reach) it is the smallest set minimising ``b`` among those containing ``v``.
    """

    def __init__(self, bfn: BFunction, v: int, penalty: int | None = None):
        if v not in bfn.spec.S:
            raise ValueError(f"vertex {v} is not constrained")
        self.b = bfn
        self.v = v
        self.ground = bfn.ground
        self.n = bfn.G.n
        self.penalty = 3 * self.n if penalty is None else penalty

    def __call__(self, X) -> int:
        X = frozenset(X)
        penalty = 0 if self.v in X else self.penalty
        return penalty + self.n * self.b(X) + len(X)

    def table(self) -> np.ndarray:
        k = len(self.ground)
        j = self.ground.index(self.v)
        missing = (np.arange(1 << k, dtype=np.int64) >> j & 1) == 0
        return self.penalty * missing + self.n * self.b.table() + popcounts(k)


class BruteForceMinimizer:
    """Minimise over every nonempty subset of ``fn.ground``.

    Uses ``fn.table()`` when available. Ties go to the lexicographically
    smallest sorted member tuple. ``calls`` counts invocations.
    """

    def __init__(self, limit: int = 24):
        self.limit = limit
        self.calls = 0

    def minimize(self, fn) -> tuple[int, frozenset]:
        self.calls += 1
        ground = tuple(fn.ground)
        if not ground:
            raise ValueError("nothing to minimise over an empty ground set")
        guard(len(ground), self.limit)
        if hasattr(fn, "table"):
            values = np.asarray(fn.table())[1:]
        else:
            values = np.array([fn(mask_members(m, ground)) for m in range(1, 1 << len(ground))])
        best = int(values.min())
        ties = np.nonzero(values == best)[0] + 1
        return best, mask_members(lex_first(ties, ground), ground)


def _oracle(oracle):
    return BruteForceMinimizer() if oracle is None else oracle


def minimize_b(G: Graph, spec: DegreeSpec, oracle=None) -> tuple[int, frozenset]:
    """Minimum of ``b`` over nonempty ``X ⊆ S`` with a minimiser."""
    if not spec.S:
        raise ValueError("S is empty")
    return _oracle(oracle).minimize(BFunction(G, spec))


def min_tight_set(G: Graph, spec: DegreeSpec, v: int, oracle=None, bfn: BFunction | None = None) -> frozenset:
    """``I(v)``: the inclusion-minimal set ``X ∋ v`` with ``b(X) = 1``.

    Raises :class:`~degforest.errors.NoTightSet` if ``v`` is in no tight set
    (or the condition fails somewhere, so that tightness is meaningless).
    """
    bfn = BFunction(G, spec) if bfn is None else bfn
    _, X = _oracle(oracle).minimize(TightSetObjective(bfn, v))
    if v not in X or bfn(X) != 1:
        raise NoTightSet(f"vertex {v} lies in no tight set")
    return X


def _saturate(bfn: BFunction, oracle) -> tuple[BFunction, dict]:
    """Raise each bound, in id order, by the slack ``min{b(X) : v in X} - 1``.

    One minimisation per vertex. The objective minimises ``b`` over sets
    containing ``v``, then size, so after the raise its minimiser is
    ``I(v)``. Later raises keep it so: a raise at ``u`` by a positive slack
    cannot have ``u`` inside an existing tight set, and tight sets without
    ``u`` do not move. Returns the saturated function and all ``I(v)``.
    """
    n = bfn.G.n
    tight = {}
    for v in bfn.ground:
        _, X = oracle.minimize(TightSetObjective(bfn, v, 4 * n * n + 1))
        slack = bfn(X) - 1
        if v not in X or slack < 0:
            raise InternalError(f"condition fails at {sorted(X)} during saturation")
        if slack:
            bfn = bfn.with_bounds(bfn.spec.with_bound(v, bfn.spec.f[v] + slack))
        tight[v] = X
    return bfn, tight


def saturate_f(G: Graph, spec: DegreeSpec, oracle=None) -> DegreeSpec:
    """Raise bounds, vertices in id order, as far as the condition allows.

    Afterwards every constrained vertex lies in a tight set.
    """
    oracle = _oracle(oracle)
    bfn = BFunction(G, spec)
    value, X = oracle.minimize(bfn)
    if value < 1:
        raise ValueError(f"condition fails on {sorted(X)}")
    return _saturate(bfn, oracle)[0].spec


@dataclass(frozen=True)
class TightSetIndex:
    """``I(v)`` for every constrained ``v``."""

    sets: dict

    def __getitem__(self, v) -> frozenset:
        return self.sets[v]

    def __iter__(self):
        return iter(self.sets)


def tight_set_index(G: Graph, spec: DegreeSpec, oracle=None) -> TightSetIndex:
    oracle = _oracle(oracle)
    bfn = BFunction(G, spec)
    return TightSetIndex({v: min_tight_set(G, spec, v, oracle, bfn) for v in bfn.ground})


class RestrictedB:
    """``scale*b(X)`` (plus ``|X|`` with ``size=True``) over sets that contain
    ``must`` and miss ``avoid``; every other set is lifted above all of those."""

    def __init__(self, bfn: BFunction, must=(), avoid=(), scale: int = 1, size: bool = False):
        self.b = bfn
        self.ground = bfn.ground
        self.must = frozenset(must)
        self.avoid = frozenset(avoid) & frozenset(bfn.ground)
        self.scale = scale
        self.size = size
        n = bfn.G.n
        # b lies in [-f(S) - n, 3n]
        self.penalty = scale * (4 * n + sum(bfn.spec.f.values()) + 1) + n + 1

    def __call__(self, X) -> int:
        X = frozenset(X)
        bad = len(self.must - X) + len(self.avoid & X)
        return self.scale * self.b(X) + self.size * len(X) + self.penalty * bad

    def table(self) -> np.ndarray:
        k = len(self.ground)
        masks = np.arange(1 << k, dtype=np.int64)
        bad = np.zeros(1 << k, dtype=np.int64)
        for j, g in enumerate(self.ground):
            bit = masks >> j & 1
            if g in self.must:
                bad += 1 - bit
            elif g in self.avoid:
                bad += bit
        out = self.scale * self.b.table() + self.penalty * bad
        if self.size:
            out += popcounts(k)
        return out


def edge_needed(G: Graph, spec: DegreeSpec, w: int, v: int, oracle=None) -> bool:
    """Whether deleting ``wv`` (``w`` unconstrained) breaks the condition.

    Assuming the condition holds, true iff some tight set contains ``v`` and
    no other neighbour of ``w``.
    """
    bfn = BFunction(G, spec)
    value, _ = _oracle(oracle).minimize(RestrictedB(bfn, {v}, set(G.adjacency[w]) - {v}))
    return value <= 1


def _prune(G: Graph, spec: DegreeSpec, index: TightSetIndex | None, oracle) -> set:
    S = spec.S
    edges = {e for e in G.edges if e[0] in S or e[1] in S}
    nbrs = {}
    for u, v in edges:
        nbrs.setdefault(u, set()).add(v)
        nbrs.setdefault(v, set()).add(u)
    for w in sorted(x for x in nbrs if x not in S):
        mine = nbrs[w]
        if index is not None and all(len(mine & index[s]) == 1 for s in mine):
            continue
        rest = {e for e in edges if w not in e}
        bfn = BFunction(Graph(G.n, sorted(rest)), spec)
        keep, atoms = set(), set()
        while True:
            _, X = oracle.minimize(RestrictedB(bfn, avoid=atoms, scale=G.n, size=True))
            if X & atoms or bfn(X) >= 1:
                break
            hit = sorted(X & mine)
            if not hit:
                raise InternalError(f"condition fails at {sorted(X)} without vertex {w}")
            keep.add(hit[0])
            atoms |= X
        for s in mine - keep:
            edges.discard(_edge(w, s))
            nbrs[s].discard(w)
        nbrs[w] = keep
    return edges


def prune_edges(G: Graph, spec: DegreeSpec, tight_index: TightSetIndex | None = None, oracle=None) -> Graph:
    """Drop edges the condition does not need, keeping it true.

    Edges between unconstrained vertices all go. An edge ``wv`` with ``w``
    unconstrained is redundant when ``w`` has another neighbour in ``I(v)``,
    but redundant edges cannot all go at once: two unconstrained vertices
    that both see both ends of a constrained edge lose every edge into it.
    Instead each ``w`` in turn keeps one edge into each minimal set that
    would violate the condition without ``w``. Those sets are pairwise
    disjoint (sets with ``b = 0`` in ``G - w`` are closed under union and
    intersection), so each costs one minimisation, plus one to see that
    none is left. With ``tight_index`` (exact for ``G``), a ``w`` seeing
    every ``I(v)`` of its neighbours once is skipped without any call.

    Afterwards no single remaining edge can be deleted.
    """
    return Graph(G.n, sorted(_prune(G, spec, tight_index, _oracle(oracle))))


# -- construction -------------------------------------------------------------

def _within(edges, V) -> set:
    return {e for e in edges if e[0] in V and e[1] in V}


def _components(V, S, edges) -> list[frozenset]:
    nbrs = {v: [] for v in S}
    for u, v in edges:
        if u in S and v in S:
            nbrs[u].append(v)
            nbrs[v].append(u)
    seen = set()
    out = []
    for s in sorted(S):
        if s in seen:
            continue
        comp, stack = {s}, [s]
        while stack:
            x = stack.pop()
            for y in nbrs[x]:
                if y not in comp:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        out.append(frozenset(comp))
    return out


class _Builder:
    """Leaf peeling on the contracted forest.

    Bounds of 1 (or less) stay constrained here, which keeps ``b`` and hence
    every ``I(v)`` unchanged by each peeling step. The peeling therefore
    ends on a single component with no unconstrained vertices, where ``b``
    being tight forces a spanning tree with exactly the given degrees; that
    case goes back to :func:`_solve` with the bound-1 vertices released.
    """

    def __init__(self, oracle):
        self.oracle = oracle

    def build(self, V: frozenset, S: frozenset, f: dict, edges: set) -> set:
        if not S:
            return set()
        W = V - S
        Z = _components(V, S, edges)
        owner = {v: j for j, comp in enumerate(Z) for v in comp}
        cross = {}
        zdeg = [[] for _ in Z]
        for u, v in edges:
            if (u in S) == (v in S):
                if u not in S:
                    raise InternalError(f"edge {u}-{v} joins two unconstrained vertices")
                continue
            w, s = (u, v) if v in S else (v, u)
            cross.setdefault(w, []).append(s)
            zdeg[owner[s]].append((s, w))
        for w, ss in cross.items():
            if len({owner[s] for s in ss}) != len(ss):
                raise InternalError(f"vertex {w} has two edges into one component")

        if not W and len(Z) == 1:
            return self.base(V, f, edges)
        for w in sorted(W):
            if w not in cross:
                return self.build(V - {w}, S, f, edges)
        for j, comp in enumerate(Z):
            if not zdeg[j]:
                return self.split(V, S, f, edges, comp)
        for w in sorted(W):
            if len(cross[w]) == 1:
                u = cross[w][0]
                g = dict(f)
                g[u] -= 1
                rest = {e for e in edges if w not in e}
                return self.build(V - {w}, S, g, rest) | {_edge(u, w)}
        for j, comp in enumerate(Z):
            if len(zdeg[j]) == 1:
                u, w = zdeg[j][0]
                g = dict(f)
                g[u] -= 1
                return self.split(V, S, g, edges, comp) | {_edge(u, w)}
        raise InternalError("contracted graph has a cycle")

    def split(self, V, S, f, edges, comp) -> set:
        rest = V - comp
        left = self.build(comp, S & comp, {v: f[v] for v in comp}, _within(edges, comp))
        right = self.build(rest, S - comp, {v: f[v] for v in S - comp}, _within(edges, rest))
        return left | right

    def base(self, Z: frozenset, f: dict, edges: set) -> set:
        if len(Z) == 1:
            return set()
        big = {v: k for v, k in f.items() if k >= 2}
        if len(big) == len(Z):
            raise InternalError(f"component {sorted(Z)} has no vertex with bound <= 1")
        local = Graph(max(Z) + 1, sorted(edges))
        # b on subsets of the bound->=2 part is the same function, and no
        # minimal tight set of such a vertex holds a bound-1 vertex, so the
        # released problem is still saturated
        inner = _solve(local, DegreeSpec(big), self.oracle, saturated=True).edges if big else ()
        return set(extend_to_spanning_forest(local, sorted(inner)))


def _edge(u, v) -> Edge:
    return (u, v) if u < v else (v, u)


def cograph_forest(G: Graph, spec: DegreeSpec, oracle=None) -> ForestEdges | Certificate:
    """Forest with ``deg_F(v) >= f(v)`` on ``S``, or ``X`` with ``b(X) <= 0``.

    Raises :class:`~degforest.errors.NotCograph` when ``G[S]`` contains an
    induced P4. Bounds must be at least 2 on input.
    """
    spec.check(G, minimum=2)
    S = spec.S
    p4 = find_induced_p4(G, S)
    if p4 is not None:
        raise NotCograph(p4)
    if not S:
        return ForestEdges(())
    oracle = _oracle(oracle)

    bfn = BFunction(G, spec)
    value, X = oracle.minimize(bfn)
    if value < 1:
        lhs = len(open_neighborhood(G, X)) + 2 * len(X) - component_count(G, X)
        return Certificate(X, "theorem9", lhs, spec.total(X))

    return _solve(G, spec, oracle)


def _solve(G: Graph, spec: DegreeSpec, oracle, saturated: bool = False) -> ForestEdges:
    """Construction once the condition is known to hold.

    With ``saturated=True`` every constrained vertex is already known to be
    in a tight set, and the bounds are used as given.
    """
    S = spec.S
    index = None
    if saturated:
        sat = spec
    else:
        bfn, tight = _saturate(BFunction(G, spec), oracle)
        sat = bfn.spec
        index = TightSetIndex(tight)
    edges = _prune(G, sat, index, oracle)
    pruned = Graph(G.n, sorted(edges))
    Z = components(pruned, S)
    if index is not None:
        index = tight_set_index(pruned, sat, oracle)
        for comp in Z:
            for v in comp:
                if not index[v] <= comp:
                    raise InternalError(f"I({v}) leaves the component of {v}")
    for comp in Z:
        if b_value(pruned, sat, comp) != 1:
            raise InternalError(f"component {sorted(comp)} is not tight")
    contracted, _ = contract_sets(pruned, Z)
    if not is_forest(contracted, contracted.edges):
        raise InternalError("contracted graph is not a forest")

    F = _Builder(oracle).build(frozenset(range(G.n)), S, dict(sat.f), edges)
    forest = ForestEdges(tuple(F))
    deg = forest.degrees
    if not is_forest(G, forest.edges) or any(deg[v] < k for v, k in spec.f.items()):
        raise InternalError("constructed edge set is not a valid forest")
    return forest


def verify_necessity(G: Graph, spec: DegreeSpec, F) -> bool:
    """Given a valid forest, confirm ``b(X) >= 1`` on every nonempty ``X ⊆ S``."""
    F = ForestEdges(tuple(F))
    if not is_forest(G, F.edges):
        raise ValueError("F is not a forest of G")
    deg = F.degrees
    short = [v for v, k in spec.f.items() if deg[v] < k]
    if short:
        raise ValueError(f"F misses the bound at {short}")
    if not spec.S:
        return True
    return int(BFunction(G, spec).table()[1:].min()) >= 1
