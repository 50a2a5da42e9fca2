"""Hopcroft-Karp with left capacities, cloning the left side only implicitly.

A left vertex ``u`` with capacity ``c`` behaves like ``c`` interchangeable
copies. Instead of materialising the copies, each left vertex keeps a load
counter, and a single current-arc pointer serves all of its copies during a
phase (copies share adjacency and BFS layer, so an arc that dead-ends for one
copy dead-ends for all of them).
"""
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .graph import Graph

_INF = float("inf")


@dataclass(frozen=True)
class BipartiteAux:
    """Bipartite graph with left side ``0 .. L-1`` and right side ``0 .. n_right-1``.

    ``adj[i]`` is the sorted tuple of right neighbours of left vertex ``i``.
    ``origin[i]``, when not None, is the right vertex that left vertex ``i``
    copies; the edge ``(i, origin[i])`` is then the vertical edge of ``i``.
    """

    n_right: int
    adj: tuple[tuple[int, ...], ...]
    origin: tuple[int | None, ...] = ()

    def __post_init__(self):
        adj = tuple(tuple(sorted(set(a))) for a in self.adj)
        for i, a in enumerate(adj):
            if a and not (0 <= a[0] and a[-1] < self.n_right):
                raise ValueError(f"left vertex {i} has a neighbour outside the right side")
        origin = tuple(self.origin) or (None,) * len(adj)
        if len(origin) != len(adj):
            raise ValueError("origin must have one entry per left vertex")
        copied = [o for o in origin if o is not None]
        if len(set(copied)) != len(copied):
            raise ValueError("two left vertices copy the same right vertex")
        for i, o in enumerate(origin):
            if o is not None and o not in adj[i]:
                raise ValueError(f"vertical edge of left vertex {i} is missing")
        object.__setattr__(self, "adj", adj)
        object.__setattr__(self, "origin", origin)

    @property
    def n_left(self) -> int:
        return len(self.adj)

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj)

    def vertical_edges(self) -> list[tuple[int, int]]:
        return [(i, o) for i, o in enumerate(self.origin) if o is not None]

    def right_adjacency(self) -> list[list[int]]:
        radj = [[] for _ in range(self.n_right)]
        for i, a in enumerate(self.adj):
            for v in a:
                radj[v].append(i)
        return radj

    def neighborhood(self, left: Iterable[int]) -> frozenset:
        out = set()
        for i in left:
            out.update(self.adj[i])
        return frozenset(out)

    def node(self, i: int) -> int:
        """Id of left vertex ``i`` in :meth:`as_graph`."""
        return self.n_right + i

    def as_graph(self) -> Graph:
        """Plain graph on ``n_right + L`` vertices; left ``i`` becomes ``n_right + i``."""
        return Graph(self.n_right + self.n_left, [(v, self.n_right + i) for i, a in enumerate(self.adj) for v in a])


@dataclass(frozen=True)
class SemiForest:
    """Edge set where each right vertex has degree at most one.

    ``assigned[i]`` lists the right vertices joined to left vertex ``i``.
    """

    assigned: tuple[tuple[int, ...], ...]

    def edges(self) -> list[tuple[int, int]]:
        return [(i, v) for i, vs in enumerate(self.assigned) for v in vs]

    def left_degree(self, i: int) -> int:
        return len(self.assigned[i])

    def mate(self, n_right: int) -> list[int]:
        out = [-1] * n_right
        for i, vs in enumerate(self.assigned):
            for v in vs:
                out[v] = i
        return out


@dataclass(frozen=True)
class DeficientSet:
    """Left vertices whose neighbourhood is smaller than their total capacity."""

    left: frozenset
    neighborhood_size: int
    capacity: int


def _capacities(B: BipartiteAux, cap) -> list[int]:
    if isinstance(cap, Mapping):
        for k in cap:
            if not 0 <= k < B.n_left:
                raise KeyError(f"capacity given for unknown left vertex {k}")
        missing = [i for i in range(B.n_left) if i not in cap]
        if missing:
            raise KeyError(f"no capacity for left vertex {missing[0]}")
        caps = [int(cap[i]) for i in range(B.n_left)]
    else:
        caps = [int(c) for c in cap]
        if len(caps) != B.n_left:
            raise KeyError("capacity sequence length differs from the left side")
    if any(c < 0 for c in caps):
        raise ValueError("capacities must be non-negative")
    return caps


def capacitated_matching(B: BipartiteAux, cap: Sequence[int] | Mapping[int, int]) -> SemiForest | DeficientSet:
    """Maximum matching where left vertex ``i`` may take ``cap[i]`` partners.

    Returns a :class:`SemiForest` saturating every capacity, or a
    :class:`DeficientSet` ``X`` with ``|N(X)| < cap(X)`` when no such
    matching exists. Neighbours are scanned in increasing id order.
    """
    caps = _capacities(B, cap)
    adj = B.adj
    L = B.n_left
    mate = [-1] * B.n_right
    load = [0] * L
    dist = [_INF] * L
    it = [0] * L

    def bfs() -> bool:
        queue = deque()
        for u in range(L):
            if load[u] < caps[u]:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = _INF
        found = _INF
        while queue:
            u = queue.popleft()
            du = dist[u]
            if du >= found:
                break
            for v in adj[u]:
                w = mate[v]
                if w == -1:
                    found = du + 1
                elif w != u and dist[w] == _INF:
                    dist[w] = du + 1
                    queue.append(w)
        return found != _INF

    def augment(root: int) -> bool:
        stack = [root]
        rights = []
        while stack:
            u = stack[-1]
            au = adj[u]
            pushed = False
            while it[u] < len(au):
                v = au[it[u]]
                w = mate[v]
                if w == -1:
                    rights.append(v)
                    for x, y in zip(stack, rights):
                        mate[y] = x
                    return True
                if w != u and dist[w] == dist[u] + 1:
                    stack.append(w)
                    rights.append(v)
                    pushed = True
                    break
                it[u] += 1
            if not pushed:
                dist[u] = _INF
                stack.pop()
                if rights:
                    rights.pop()
                if stack:
                    it[stack[-1]] += 1
        return False

    while bfs():
        for u in range(L):
            it[u] = 0
        for u in range(L):
            while load[u] < caps[u] and dist[u] == 0:
                if augment(u):
                    load[u] += 1
                else:
                    break

    if all(load[u] == caps[u] for u in range(L)):
        assigned = [[] for _ in range(L)]
        for v, u in enumerate(mate):
            if u != -1:
                assigned[u].append(v)
        return SemiForest(tuple(tuple(a) for a in assigned))

    # alternating closure of the unsaturated left vertices
    reached = [False] * L
    queue = deque()
    for u in range(L):
        if load[u] < caps[u]:
            reached[u] = True
            queue.append(u)
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            w = mate[v]
            assert w != -1, "augmenting path left after termination"
            if not reached[w]:
                reached[w] = True
                queue.append(w)
    X = frozenset(u for u in range(L) if reached[u])
    return DeficientSet(X, len(B.neighborhood(X)), sum(caps[u] for u in X))
