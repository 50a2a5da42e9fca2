"""Simple undirected graphs on dense integer ids, and set queries on them.

Vertex sets are plain ``frozenset`` objects at the API boundary; the
exhaustive routines in :mod:`degforest.oracle` and :mod:`degforest.cograph`
switch to integer bitmasks internally.
"""
from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from scipy.cluster.hierarchy import DisjointSet

from .errors import GraphFormatError

Edge = tuple[int, int]


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple graph on vertices ``0 .. n-1``.

    Parameters
    ----------
    n : int
        Number of vertices.
    edges : iterable of (u, v)
        Each unordered pair at most once. Loops and parallel edges raise
        ``ValueError`` rather than being merged.
    """

    __slots__ = ("n", "adjacency", "edges", "_nbr_sets")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        seen = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) has a vertex id outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            key = _norm(u, v)
            if key in seen:
                raise ValueError(f"parallel edge {key}")
            seen.add(key)
        adj = [[] for _ in range(n)]
        for u, v in seen:
            adj[u].append(v)
            adj[v].append(u)
        self.n = n
        self.adjacency = tuple(tuple(sorted(a)) for a in adj)
        self.edges = tuple(sorted(seen))
        self._nbr_sets = None

    @property
    def m(self) -> int:
        return len(self.edges)

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        if self._nbr_sets is None:
            self._nbr_sets = tuple(frozenset(a) for a in self.adjacency)
        return v in self._nbr_sets[u]

    def edge_index(self) -> dict[Edge, int]:
        """Map each edge to its position in the sorted edge list."""
        return {e: i for i, e in enumerate(self.edges)}

    def subgraph_without(self, edges: Iterable[Sequence[int]] = (), vertices: Iterable[int] = ()) -> "Graph":
        """Copy with the given edges and all edges at the given vertices removed.

        Vertex ids are preserved; removed vertices simply become isolated.
        """
        drop = {_norm(*e) for e in edges}
        dead = set(vertices)
        keep = [e for e in self.edges if e not in drop and e[0] not in dead and e[1] not in dead]
        return Graph(self.n, keep)

    def to_networkx(self):
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g

    @classmethod
    def from_networkx(cls, g) -> "Graph":
        """Relabel ``g``'s nodes to ``0 .. n-1`` in sorted order."""
        nodes = sorted(g.nodes())
        index = {x: i for i, x in enumerate(nodes)}
        return cls(len(nodes), [(index[a], index[b]) for a, b in g.edges()])


def vertex_set(G: Graph, X: Iterable[int]) -> frozenset:
    """Validate ids and return ``X`` as a frozenset."""
    out = frozenset(int(x) for x in X)
    for x in out:
        if not 0 <= x < G.n:
            raise ValueError(f"vertex {x} not in graph with n={G.n}")
    return out


def open_neighborhood(G: Graph, X: Iterable[int]) -> frozenset:
    X = vertex_set(G, X)
    out = set()
    for x in X:
        out.update(G.adjacency[x])
    out.difference_update(X)
    return frozenset(out)


def closed_neighborhood(G: Graph, X: Iterable[int]) -> frozenset:
    X = vertex_set(G, X)
    return open_neighborhood(G, X) | X


def induced_edge_count(G: Graph, X: Iterable[int]) -> int:
    X = vertex_set(G, X)
    return sum(1 for x in X for y in G.adjacency[x] if y in X) // 2


def components(G: Graph, X: Iterable[int] | None = None) -> list[frozenset]:
    """Vertex sets of the components of ``G[X]`` ordered by smallest member."""
    X = frozenset(range(G.n)) if X is None else vertex_set(G, X)
    seen = set()
    out = []
    for s in sorted(X):
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in G.adjacency[u]:
                if w in X and w not in seen:
                    seen.add(w)
                    comp.append(w)
                    queue.append(w)
        out.append(frozenset(comp))
    return out


def component_count(G: Graph, X: Iterable[int] | None = None) -> int:
    """Number of components of ``G[X]``; zero for the empty set."""
    return len(components(G, X))


def is_connected(G: Graph) -> bool:
    return G.n <= 1 or component_count(G) == 1


def is_forest(G: Graph, F: Iterable[Sequence[int]]) -> bool:
    """True iff the edge list ``F`` is acyclic. Every edge must belong to ``G``."""
    ds = DisjointSet(range(G.n))
    for e in F:
        u, v = int(e[0]), int(e[1])
        if not (0 <= u < G.n and 0 <= v < G.n) or not G.has_edge(u, v):
            raise ValueError(f"edge ({u}, {v}) is not an edge of the graph")
        if not ds.merge(u, v):
            return False
    return True


def extend_to_spanning_forest(G: Graph, F: Iterable[Sequence[int]]) -> list[Edge]:
    """Add edges of ``G`` in sorted order wherever they join two components of ``F``.

    ``F`` must be a forest; the result is a maximal spanning forest of ``G``
    containing it, and a spanning tree when ``G`` is connected.
    """
    ds = DisjointSet(range(G.n))
    out = []
    for u, v in F:
        if not ds.merge(u, v):
            raise ValueError("input edge set is not a forest")
        out.append(_norm(u, v))
    for u, v in G.edges:
        if ds.merge(u, v):
            out.append((u, v))
    out.sort()
    return out


def contract_sets(G: Graph, parts: Iterable[Iterable[int]]) -> tuple[Graph, list[int]]:
    """Contract each part to a single vertex.

    Loops vanish and parallel edges are merged. New ids follow the smallest
    old id of each class; the returned list maps every old vertex to its new id.
    """
    owner = [-1] * G.n
    classes = []
    for i, part in enumerate(parts):
        members = vertex_set(G, part)
        for x in members:
            if owner[x] != -1:
                raise ValueError(f"vertex {x} appears in two parts")
            owner[x] = i
        if members:
            classes.append(members)
    for v in range(G.n):
        if owner[v] == -1:
            classes.append(frozenset([v]))
    classes.sort(key=min)
    mapping = [0] * G.n
    for new, cls in enumerate(classes):
        for x in cls:
            mapping[x] = new
    edges = {_norm(mapping[u], mapping[v]) for u, v in G.edges if mapping[u] != mapping[v]}
    return Graph(len(classes), sorted(edges)), mapping


@dataclass(frozen=True)
class DegreeSpec:
    """Constrained vertices ``S`` (the keys of ``f``) and their lower bounds."""

    f: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "f", {int(v): int(k) for v, k in sorted(dict(self.f).items())})

    @property
    def S(self) -> frozenset:
        return frozenset(self.f)

    def total(self, X: Iterable[int]) -> int:
        return sum(self.f[x] for x in X)

    def check(self, G: Graph, minimum: int = 2) -> "DegreeSpec":
        for v, k in self.f.items():
            if not 0 <= v < G.n:
                raise ValueError(f"constrained vertex {v} not in graph with n={G.n}")
            if k < minimum:
                raise ValueError(f"bound f({v}) = {k} is below {minimum}")
        return self

    def with_bound(self, v: int, k: int) -> "DegreeSpec":
        f = dict(self.f)
        f[v] = k
        return DegreeSpec(f)

    def __hash__(self):
        return hash(tuple(self.f.items()))


@dataclass(frozen=True)
class ForestEdges:
    """An acyclic edge set of some graph, edges stored as sorted ``(u, v)`` pairs with ``u < v``."""

    edges: tuple[Edge, ...]

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(sorted(_norm(int(u), int(v)) for u, v in self.edges)))

    @property
    def degrees(self) -> Counter:
        c = Counter()
        for u, v in self.edges:
            c[u] += 1
            c[v] += 1
        return c

    def degree(self, v: int) -> int:
        return self.degrees[v]

    def __len__(self):
        return len(self.edges)

    def __iter__(self):
        return iter(self.edges)


# -- text formats -----------------------------------------------------------

def _int_tokens(line: str, count: int, lineno: int) -> list[int]:
    parts = line.split()
    if len(parts) != count:
        raise GraphFormatError(f"expected {count} integers, got {len(parts)} tokens", lineno)
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise GraphFormatError(f"non-integer token in {line.strip()!r}", lineno) from None


def _content_lines(text: str) -> list[str]:
    lines = text.split("\n")
    # one trailing newline (or trailing blank lines) is tolerated, nothing else
    while lines and not lines[-1].strip():
        lines.pop()
    return lines


def parse_graph(text: str) -> Graph:
    """Parse ``n m`` followed by exactly ``m`` lines ``u v`` (0-based ids)."""
    lines = _content_lines(text)
    if not lines:
        raise GraphFormatError("empty graph file", 1)
    n, m = _int_tokens(lines[0], 2, 1)
    if n < 0 or m < 0:
        raise GraphFormatError("negative vertex or edge count", 1)
    if len(lines) - 1 != m:
        where = min(len(lines), m + 2)
        raise GraphFormatError(f"header announces {m} edges but {len(lines) - 1} lines follow", where)
    seen = set()
    edges = []
    for i, line in enumerate(lines[1:], start=2):
        u, v = _int_tokens(line, 2, i)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"vertex id out of range 0..{n - 1}", i)
        if u == v:
            raise GraphFormatError(f"loop at vertex {u}", i)
        key = _norm(u, v)
        if key in seen:
            raise GraphFormatError(f"parallel edge {u} {v}", i)
        seen.add(key)
        edges.append(key)
    return Graph(n, edges)


def format_graph(G: Graph) -> str:
    return "".join([f"{G.n} {G.m}\n"] + [f"{u} {v}\n" for u, v in G.edges])


def parse_constraints(text: str, n: int | None = None, minimum: int = 2) -> DegreeSpec:
    """Parse lines ``v f(v)``; vertices not listed are unconstrained."""
    f = {}
    for i, line in enumerate(_content_lines(text), start=1):
        v, k = _int_tokens(line, 2, i)
        if v < 0 or (n is not None and v >= n):
            raise GraphFormatError(f"vertex {v} out of range", i)
        if v in f:
            raise GraphFormatError(f"vertex {v} constrained twice", i)
        if k < minimum:
            raise GraphFormatError(f"bound {k} for vertex {v} is below {minimum}", i)
        f[v] = k
    return DegreeSpec(f)


def format_constraints(spec: DegreeSpec) -> str:
    return "".join(f"{v} {k}\n" for v, k in spec.f.items())


@dataclass(frozen=True)
class Certificate:
    """Nonempty vertex set on which a stated inequality fails.

    The failed inequality is ``lhs > rhs``; a certificate records ``lhs <= rhs``.
    ``condition`` names it: ``"theorem1"`` compares ``|closed nbhd(X)|`` with
    ``f(X)``, ``"theorem9"`` compares ``|N(X)| + 2|X| - c(G[X])`` with ``f(X)``,
    and ``"lovasz"`` compares ``|N_B(X)|`` with the summed matching caps.
    """

    vertices: frozenset
    condition: str
    lhs: int
    rhs: int

    def __post_init__(self):
        object.__setattr__(self, "vertices", frozenset(self.vertices))
