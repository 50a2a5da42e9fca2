"""Exhaustive ground truth for small instances.

Nothing here shares code with the constructive algorithms beyond the graph
type: conditions are minimised over every subset and forests are found by
backtracking over edge subsets.
"""
import math

import numpy as np

from .errors import InstanceTooLarge
from .graph import DegreeSpec, Graph, is_forest
from .subsets import guard, lex_first, mask_members, modular_table, union_size_table


def brute_condition_min(G: Graph, spec: DegreeSpec, limit: int = 24) -> tuple[float, frozenset]:
    """Minimise ``|X ∪ N(X)| - f(X)`` over nonempty ``X ⊆ S``.

    Returns ``(value, X)`` with the lexicographically smallest minimiser. For
    empty ``S`` the condition holds vacuously and ``(math.inf, frozenset())``
    is returned.
    """
    ground = sorted(spec.S)
    if not ground:
        return math.inf, frozenset()
    guard(len(ground), limit)
    values = union_size_table(G, ground) - modular_table(spec.f[s] for s in ground)
    values = values[1:]
    best = int(values.min())
    ties = np.nonzero(values == best)[0] + 1
    return best, mask_members(lex_first(ties, ground), ground)


def brute_forest_exists(G: Graph, spec: DegreeSpec, witness: bool = False):
    """Whether some forest of ``G`` has ``deg_F(v) >= f(v)`` on ``S``.

    Backtracks over the edges touching ``S`` (edges between unconstrained
    vertices never help). With ``witness=True`` returns ``(found, edges)``.
    Limited to ``m <= 22`` or ``n <= 10``.
    """
    if not (G.m <= 22 or G.n <= 10):
        raise InstanceTooLarge(f"forest search on n={G.n}, m={G.m}")
    need = dict(spec.f)
    for v in need:
        if not 0 <= v < G.n:
            raise ValueError(f"constrained vertex {v} not in graph")
    edges = [e for e in G.edges if e[0] in need or e[1] in need]
    # tightest vertices first so that dead branches are cut early
    slack = {v: G.degree(v) - k for v, k in need.items()}

    def rank(e):
        return min(slack.get(e[0], math.inf), slack.get(e[1], math.inf)), e

    edges.sort(key=rank)
    avail = [0] * G.n
    for u, v in edges:
        avail[u] += 1
        avail[v] += 1
    deficit = [0] * G.n
    for v, k in need.items():
        deficit[v] = k
    open_count = sum(1 for v in need if deficit[v] > 0)
    label = list(range(G.n))
    chosen = []

    def feasible_after(u, v):
        return deficit[u] <= avail[u] and deficit[v] <= avail[v]

    def search(i):
        nonlocal open_count
        if open_count == 0:
            return True
        if i == len(edges):
            return False
        u, v = edges[i]
        avail[u] -= 1
        avail[v] -= 1
        found = False
        if (deficit[u] > 0 or deficit[v] > 0) and label[u] != label[v]:
            old, new = label[v], label[u]
            moved = [x for x in range(G.n) if label[x] == old]
            for x in moved:
                label[x] = new
            for x in (u, v):
                deficit[x] -= 1
                if deficit[x] == 0 and x in need:
                    open_count -= 1
            chosen.append((u, v))
            found = search(i + 1)
            if not found:
                chosen.pop()
                for x in (u, v):
                    if deficit[x] == 0 and x in need:
                        open_count += 1
                    deficit[x] += 1
                for x in moved:
                    label[x] = old
        if not found and feasible_after(u, v):
            found = search(i + 1)
        avail[u] += 1
        avail[v] += 1
        return found

    ok = all(deficit[v] <= avail[v] for v in need) and search(0)
    if witness:
        return ok, (sorted(chosen) if ok else None)
    return ok


def check_solution(G: Graph, spec: DegreeSpec, F, spanning: bool = False) -> bool:
    """``F ⊆ E``, acyclic, every bound met, and a spanning tree if asked.

    Edges not in ``G`` raise ``ValueError``.
    """
    edges = [(int(u), int(v)) for u, v in F]
    if len({(min(e), max(e)) for e in edges}) != len(edges):
        return False
    if not is_forest(G, edges):
        return False
    deg = [0] * G.n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    if any(deg[v] < k for v, k in spec.f.items()):
        return False
    return not spanning or len(edges) == max(G.n - 1, 0)


def brute_density_min(G: Graph, d: int, limit: int = 16) -> tuple[int, frozenset]:
    """Minimise ``2(d+1)|X| - (d+2) i(X)`` over nonempty vertex sets.

    The density hypothesis holds iff the value is positive. Returns the
    value and the lexicographically smallest minimiser.
    """
    guard(G.n, limit)
    nbr = [sum(1 << u for u in G.adjacency[v]) for v in range(G.n)]
    best, arg = None, None
    for mask in range(1, 1 << G.n):
        members = [v for v in range(G.n) if mask >> v & 1]
        inner = sum((nbr[v] & mask).bit_count() for v in members) // 2
        value = 2 * (d + 1) * len(members) - (d + 2) * inner
        key = (value, members)
        if best is None or key < best:
            best, arg = key, members
    return best[0], frozenset(arg)
