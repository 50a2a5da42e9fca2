"""Forests with exact left degrees in a bipartite graph (Frank's algorithm).

Given left degree targets ``g >= 1``, a capacitated matching first gives each
left vertex ``g - 1`` private right partners. A BFS over the auxiliary
digraph then supplies the last edge of every left vertex, or exposes the
set of left vertices it cannot reach, which is a violating set.
"""
from collections import deque
from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import InternalError
from .graph import Certificate
from .matching import BipartiteAux, DeficientSet, SemiForest, capacitated_matching


@dataclass(frozen=True)
class BipartiteForest:
    """Edge set of a :class:`BipartiteAux`, listed per left vertex."""

    assigned: tuple[tuple[int, ...], ...]

    def edges(self) -> list[tuple[int, int]]:
        return [(i, v) for i, vs in enumerate(self.assigned) for v in vs]

    def left_degree(self, i: int) -> int:
        return len(self.assigned[i])

    def graph_edges(self, B: BipartiteAux) -> list[tuple[int, int]]:
        """Edges in the numbering of :meth:`BipartiteAux.as_graph`."""
        return [(v, B.node(i)) for i, v in self.edges()]


class AuxDigraph:
    """Digraph on ``V + S' + {r}`` used to finish Frank's construction.

    Node ids: right vertex ``v`` is ``v``, left vertex ``i`` is
    ``n_right + i`` and the root is ``n_right + L``. Semiforest edges point
    from left to right, all other edges from right to left, and the root
    points at every right vertex the semiforest leaves uncovered.
    """

    def __init__(self, B: BipartiteAux, semi: SemiForest):
        self.n_right = n = B.n_right
        self.n_left = L = B.n_left
        self.root = n + L
        mate = semi.mate(n)
        out = [[] for _ in range(n + L + 1)]
        for i, a in enumerate(B.adj):
            for v in a:
                if mate[v] == i:
                    out[n + i].append(v)
                else:
                    out[v].append(n + i)
        out[self.root] = [v for v in range(n) if mate[v] == -1]
        self.out = out

    def arcs(self):
        for x, targets in enumerate(self.out):
            for y in targets:
                yield x, y

    def bfs_tree(self) -> list[int]:
        """Parent of every node in a BFS arborescence from the root (-1 if unreached)."""
        parent = [-1] * len(self.out)
        parent[self.root] = self.root
        queue = deque([self.root])
        while queue:
            x = queue.popleft()
            for y in self.out[x]:
                if parent[y] == -1:
                    parent[y] = x
                    queue.append(y)
        return parent


def _targets(B: BipartiteAux, g) -> list[int]:
    if isinstance(g, Mapping):
        missing = [i for i in range(B.n_left) if i not in g]
        if missing:
            raise KeyError(f"no degree target for left vertex {missing[0]}")
        extra = [k for k in g if not 0 <= k < B.n_left]
        if extra:
            raise KeyError(f"degree target for unknown left vertex {extra[0]}")
        vals = [int(g[i]) for i in range(B.n_left)]
    else:
        vals = [int(x) for x in g]
        if len(vals) != B.n_left:
            raise KeyError("degree target sequence length differs from the left side")
    if any(x < 1 for x in vals):
        raise ValueError("degree targets must be at least 1")
    return vals


def augment_via_bfs(B: BipartiteAux, semi: SemiForest) -> BipartiteForest | frozenset:
    """Add one BFS-tree edge at every left vertex of ``semi``.

    Returns the resulting forest, whose left degrees are one more than in
    ``semi``, or the set of left vertices the BFS does not reach.
    """
    D = AuxDigraph(B, semi)
    parent = D.bfs_tree()
    n = B.n_right
    unreached = frozenset(i for i in range(B.n_left) if parent[n + i] == -1)
    if unreached:
        return unreached
    assigned = []
    for i, vs in enumerate(semi.assigned):
        p = parent[n + i]
        # a left vertex's only in-arcs come from right vertices outside the semiforest
        if not (0 <= p < n) or p in vs:
            raise InternalError(f"left vertex {i} entered through a bad arc from {p}")
        assigned.append(tuple(sorted(vs + (p,))))
    return BipartiteForest(tuple(assigned))


def exact_degree_forest(B: BipartiteAux, g: Sequence[int] | Mapping[int, int]) -> BipartiteForest | Certificate:
    """Forest in ``B`` with left degree exactly ``g[i]``, or a violating left set.

    A certificate ``X`` satisfies ``|N_B(X)| <= sum(g[x] - 1 for x in X)``.
    Targets equal to 1 are allowed and need no matching partner.
    """
    targets = _targets(B, g)
    caps = [t - 1 for t in targets]
    semi = capacitated_matching(B, caps)
    if isinstance(semi, DeficientSet):
        X = semi.left
    else:
        out = augment_via_bfs(B, semi)
        if isinstance(out, BipartiteForest):
            return out
        X = out
    return Certificate(X, "lovasz", len(B.neighborhood(X)), sum(caps[i] for i in X))
