"""Forests that leave every vertex with at most ``d`` uncovered edges.

If ``2(d+1)|X| > (d+2) i(X)`` for every nonempty vertex set ``X`` (``i`` counts
induced edges), some forest ``F`` has ``deg_G(v) - deg_F(v) <= d`` everywhere.
The forest comes from :func:`~degforest.forest.degree_forest` with bounds
``deg(v) - d`` on the vertices of degree at least ``d + 2``; a violating set
of that call is grown into a set where the density inequality fails.

Planar graphs of girth at least 5 (resp. 6) satisfy the hypothesis with
``d = 4`` (resp. ``d = 2``), which gives :func:`planar_girth_tree`.
"""
from collections import deque
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DisconnectedGraph, InternalError, PreconditionRefuted
from .forest import degree_forest
from .graph import (
    Certificate,
    DegreeSpec,
    ForestEdges,
    Graph,
    extend_to_spanning_forest,
    induced_edge_count,
    is_connected,
)
from .subsets import guard, popcounts


@dataclass(frozen=True)
class DensityWitness:
    """A set ``X`` with ``2(d+1)|X| <= (d+2) i(X)``."""

    X: frozenset
    d: int
    lhs: int
    rhs: int

    @classmethod
    def of(cls, G: Graph, X, d: int) -> "DensityWitness":
        X = frozenset(X)
        return cls(X, d, 2 * (d + 1) * len(X), (d + 2) * induced_edge_count(G, X))

    def holds(self) -> bool:
        return self.lhs <= self.rhs


def _check_d(d):
    if int(d) != d or d < 2:
        raise ValueError(f"d must be an integer >= 2, got {d}")


def derive_spec(G: Graph, d: int) -> DegreeSpec:
    """Bounds ``deg(v) - d`` on the vertices of degree at least ``d + 2``."""
    _check_d(d)
    return DegreeSpec({v: G.degree(v) - d for v in range(G.n) if G.degree(v) >= d + 2})


def grow_certificate(G: Graph, X) -> frozenset:
    """``X`` plus every outside vertex with at least two neighbours in ``X``."""
    X = frozenset(X)
    count = {}
    for x in X:
        for y in G.adjacency[x]:
            if y not in X:
                count[y] = count.get(y, 0) + 1
    return X | {y for y, c in count.items() if c >= 2}


def defects(G: Graph, F) -> list[int]:
    deg = ForestEdges(tuple(F)).degrees
    return [G.degree(v) - deg[v] for v in range(G.n)]


def defect_forest(G: Graph, d: int) -> ForestEdges | DensityWitness:
    """Forest with every defect ``deg_G(v) - deg_F(v)`` at most ``d``, or a
    :class:`DensityWitness` showing the density hypothesis fails.

    Vertices of degree ``d + 1`` carry no bound in the underlying call, so
    any of them left isolated by the forest is joined to its smallest
    neighbour (a singleton tree, so no cycle can appear).
    """
    spec = derive_spec(G, d)
    out = degree_forest(G, spec)
    if isinstance(out, Certificate):
        w = DensityWitness.of(G, grow_certificate(G, out.vertices), d)
        if not w.holds():
            raise InternalError(f"grown set {sorted(w.X)} is not dense enough")
        return w
    edges = list(out.edges)
    deg = out.degrees
    for v in range(G.n):
        if G.degree(v) == d + 1 and deg[v] == 0:
            u = G.adjacency[v][0]
            edges.append((v, u))
            deg[v] += 1
            deg[u] += 1
    F = ForestEdges(tuple(edges))
    if max(defects(G, F.edges), default=0) > d:
        raise InternalError("forest leaves a defect above d")
    return F


def shortest_cycle(G: Graph) -> tuple[int, ...] | None:
    """Vertices of a shortest cycle in order, or None for a forest.

    BFS from every vertex; the first non-tree edge closes a cycle through
    the root of length at most the girth plus one, and the minimum over all
    roots is exact.
    """
    best = None
    for r in range(G.n):
        dist = {r: 0}
        parent = {r: r}
        queue = deque([r])
        while queue:
            x = queue.popleft()
            if best is not None and 2 * dist[x] + 1 >= len(best):
                break
            for y in G.adjacency[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y and (best is None or dist[x] + dist[y] + 1 < len(best)):
                    left, right = [x], [y]
                    while left[-1] != r:
                        left.append(parent[left[-1]])
                    while right[-1] != r:
                        right.append(parent[right[-1]])
                    walk = left[::-1] + right[:-1]
                    if len(set(walk)) == len(walk):
                        best = tuple(walk)
    return best


def planar_girth_tree(G: Graph, g: int) -> ForestEdges:
    """Spanning tree with every defect at most ``4 / (g - 4)``.

    The caller promises ``G`` planar with girth at least ``g`` (5 or 6);
    planarity is not tested. A cycle shorter than ``g``, or a density
    witness from :func:`defect_forest`, raises
    :class:`~degforest.errors.PreconditionRefuted`.
    """
    if g not in (5, 6):
        raise ValueError(f"girth must be 5 or 6, got {g}")
    if not is_connected(G):
        raise DisconnectedGraph(f"graph with n={G.n} is not connected")
    cycle = shortest_cycle(G)
    if cycle is not None and len(cycle) < g:
        raise PreconditionRefuted(cycle, f"cycle of length {len(cycle)} is shorter than the promised girth {g}")
    d = 4 // (g - 4)
    out = defect_forest(G, d)
    if isinstance(out, DensityWitness):
        raise PreconditionRefuted(out, f"set {sorted(out.X)} is too dense for a planar graph of girth {g}")
    return ForestEdges(tuple(extend_to_spanning_forest(G, out.edges)))


def induced_edge_table(G: Graph) -> np.ndarray:
    """``i(X)`` for every subset mask of ``range(n)``."""
    guard(G.n, 20)
    table = np.zeros(1, dtype=np.int64)
    for j in range(G.n):
        lower = sum(1 << u for u in G.adjacency[j] if u < j)
        masks = np.arange(1 << j, dtype=np.int64)
        table = np.concatenate([table, table + popcounts(j)[masks & lower]])
    return table


def max_density(G: Graph) -> Fraction:
    """``max i(X) / (|X| - 1)`` over sets of at least two vertices, exactly.

    Exhaustive, so limited to ``n <= 20``.
    """
    if G.n < 2:
        raise ValueError("needs at least two vertices")
    edges = induced_edge_table(G)
    sizes = popcounts(G.n)
    best = Fraction(0)
    for k in range(2, G.n + 1):
        top = int(edges[sizes == k].max())
        best = max(best, Fraction(top, k - 1))
    return best
