"""Vectorised tables of set functions over all subsets of a small ground set.

Subset ``X`` of ``ground = (g_0, ..., g_{k-1})`` is encoded as the integer
mask with bit ``j`` set iff ``g_j`` is in ``X``; tables are numpy arrays of
length ``2**k`` indexed by that mask.
"""
import numpy as np

from .errors import InstanceTooLarge
from .graph import Graph

MAX_GROUND = 24


def guard(k: int, limit: int = MAX_GROUND) -> None:
    if k > limit:
        raise InstanceTooLarge(f"exhaustive enumeration over 2^{k} subsets (limit 2^{limit})")


def mask_members(mask: int, ground) -> frozenset:
    return frozenset(g for j, g in enumerate(ground) if mask >> j & 1)


def set_mask(X, ground) -> int:
    pos = {g: j for j, g in enumerate(ground)}
    return sum(1 << pos[x] for x in X)


def lex_first(masks, ground) -> int:
    """Mask whose sorted member tuple is lexicographically smallest."""
    return min((int(m) for m in masks), key=lambda m: sorted(mask_members(m, ground)))


def popcounts(k: int) -> np.ndarray:
    return np.bitwise_count(np.arange(1 << k, dtype=np.uint64)).astype(np.int64)


def modular_table(weights) -> np.ndarray:
    """``sum(weights[j] for j in X)`` for every mask."""
    table = np.zeros(1, dtype=np.int64)
    for w in weights:
        table = np.concatenate([table, table + int(w)])
    return table


def union_size_table(G: Graph, ground, closed: bool = True) -> np.ndarray:
    """``|N[X]|`` (closed) or ``|N[X]| - |X|`` (open) for every ``X ⊆ ground``."""
    ground = list(ground)
    k = len(ground)
    guard(k)
    universe = sorted(set(ground).union(*(G.adjacency[g] for g in ground)))
    pos = {v: i for i, v in enumerate(universe)}
    words = max(1, (len(universe) + 63) // 64)
    rows = np.zeros((k, words), dtype=np.uint64)
    for j, g in enumerate(ground):
        for v in (g,) + G.adjacency[g]:
            rows[j, pos[v] // 64] |= np.uint64(1) << np.uint64(pos[v] % 64)
    table = np.zeros((1, words), dtype=np.uint64)
    for j in range(k):
        table = np.concatenate([table, table | rows[j]])
    sizes = np.bitwise_count(table).sum(axis=1).astype(np.int64)
    if not closed:
        sizes -= popcounts(k)
    return sizes


def component_count_table(G: Graph, ground) -> np.ndarray:
    """Number of components of ``G[X]`` for every ``X ⊆ ground`` (0 for the empty set)."""
    ground = list(ground)
    k = len(ground)
    guard(k)
    pos = {g: j for j, g in enumerate(ground)}
    adj = np.zeros(k, dtype=np.int64)
    for j, g in enumerate(ground):
        for v in G.adjacency[g]:
            if v in pos:
                adj[j] |= 1 << pos[v]
    nbr = np.zeros(1, dtype=np.int64)
    for j in range(k):
        nbr = np.concatenate([nbr, nbr | adj[j]])
    masks = np.arange(1 << k, dtype=np.int64)
    # flood-fill the component of each mask's lowest member, all masks at once
    comp = masks & -masks
    while True:
        grown = comp | (nbr[comp] & masks)
        if np.array_equal(grown, comp):
            break
        comp = grown
    counts = np.zeros(1 << k, dtype=np.int64)
    sizes = popcounts(k)
    rest = masks & ~comp
    for p in range(1, k + 1):
        idx = np.nonzero(sizes == p)[0]
        counts[idx] = 1 + counts[rest[idx]]
    return counts
