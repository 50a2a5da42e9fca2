"""Graph fixtures shared by the test modules."""
import itertools
import random

import networkx as nx
from hypothesis import strategies as st

from degforest.graph import DegreeSpec, Graph


def from_nx(g) -> Graph:
    return Graph.from_networkx(nx.convert_node_labels_to_integers(g, ordering="sorted"))


def atlas(max_n, min_n=1, connected=False):
    """Every graph on ``min_n..max_n`` vertices (up to isomorphism; n <= 7)."""
    for g in nx.graph_atlas_g():
        n = g.number_of_nodes()
        if n < min_n:
            continue
        if n > max_n:
            break
        if connected and not nx.is_connected(g):
            continue
        yield from_nx(g)


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])


def random_connected(rng: random.Random, n: int, p: float) -> Graph:
    """Random spanning tree plus independent extra edges."""
    edges = {(min(rng.randrange(v), v), v) for v in range(1, n)}
    edges |= {e for e in itertools.combinations(range(n), 2) if rng.random() < p}
    return Graph(n, sorted(edges))


def octahedron() -> Graph:
    return from_nx(nx.octahedral_graph())


def hex_fragment() -> Graph:
    """24 vertices of a hexagonal lattice, taken in BFS order from a corner."""
    H = nx.convert_node_labels_to_integers(nx.hexagonal_lattice_graph(3, 3), ordering="sorted")
    keep = list(nx.bfs_tree(H, 0))[:24]
    return from_nx(H.subgraph(keep).copy())


def p4_counterexample():
    """Path v1..v4 plus a ~ v1, v4 and b ~ v2, v3, every path vertex bounded by 2.

    Ids: v1..v4 = 0..3, a = 4, b = 5.
    """
    G = Graph(6, [(0, 1), (1, 2), (2, 3), (0, 4), (3, 4), (1, 5), (2, 5)])
    return G, DegreeSpec({0: 2, 1: 2, 2: 2, 3: 2})


@st.composite
def graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [e for e, keep in zip(pairs, mask) if keep])


@st.composite
def graphs_with_subsets(draw, min_n=1, max_n=8, count=1):
    G = draw(graphs(min_n, max_n))
    sets = [frozenset(draw(st.sets(st.integers(0, G.n - 1)))) for _ in range(count)]
    return (G, *sets)


def automorphisms(G: Graph) -> list[tuple[int, ...]]:
    from networkx.algorithms.isomorphism import GraphMatcher

    H = G.to_networkx()
    return [tuple(m[v] for v in range(G.n)) for m in GraphMatcher(H, H).isomorphisms_iter()]


def subset_orbits(G: Graph, max_size=None):
    """One representative subset per automorphism orbit of nonempty vertex sets."""
    autos = automorphisms(G)
    seen = set()
    for mask in range(1, 1 << G.n):
        members = [v for v in range(G.n) if mask >> v & 1]
        if max_size is not None and len(members) > max_size:
            continue
        canon = min(sum(1 << p[v] for v in members) for p in autos)
        if canon not in seen:
            seen.add(canon)
            yield frozenset(v for v in range(G.n) if canon >> v & 1)


def projective_incidence(q: int = 3) -> Graph:
    """Point-line incidence graph of the projective plane over GF(q), q prime.

    (q+1)-regular with girth 6.
    """
    vecs = []
    for v in itertools.product(range(q), repeat=3):
        lead = next((x for x in v if x), 0)
        if lead == 1:
            vecs.append(v)
    k = len(vecs)
    edges = [(i, k + j) for i, p in enumerate(vecs) for j, l in enumerate(vecs)
             if sum(a * b for a, b in zip(p, l)) % q == 0]
    return Graph(2 * k, edges)
