"""Baseline shortest-path algorithms, independent of the min-plus closure code."""

from __future__ import annotations

import heapq
import math

import numpy as np

from .exceptions import InputError
from .semiring import SquareMatrix

BRUTE_FORCE_LIMIT = 9


def floyd_warshall(M: SquareMatrix) -> SquareMatrix:
    n = len(M)
    D = np.array(M.entries, dtype=np.float64, copy=True)
    np.fill_diagonal(D, 0.0)
    for k in range(n):
        np.minimum(D, D[:, k, None] + D[None, k, :], out=D)
    return SquareMatrix(M.labels, D)


def dijkstra(M: SquareMatrix, s, t) -> float:
    """Shortest ``s -> t`` distance with a binary heap; stops once ``t`` is settled."""
    src, dst = M.index(s), M.index(t)
    W = M.entries
    inf = math.inf
    dist = [inf] * len(M)
    dist[src] = 0.0
    done = [False] * len(M)
    heap = [(0.0, src)]
    while heap:
        d, u = heapq.heappop(heap)
        if done[u]:
            continue
        if u == dst:
            return d
        done[u] = True
        for v, w in enumerate(W[u].tolist()):
            if w == inf or done[v]:
                continue
            nd = d + w
            if nd < dist[v]:
                dist[v] = nd
                heapq.heappush(heap, (nd, v))
    return inf


def brute_force_paths(M: SquareMatrix) -> SquareMatrix:
    """Minimum over every simple path, enumerated explicitly. Tiny graphs only."""
    n = len(M)
    if n > BRUTE_FORCE_LIMIT:
        raise InputError(f"brute force limited to {BRUTE_FORCE_LIMIT} vertices, got {n}")
    W = M.entries.tolist()
    best = [[math.inf] * n for _ in range(n)]

    def walk(src, u, cost, visited):
        if cost < best[src][u]:
            best[src][u] = cost
        for v in range(n):
            if not visited & (1 << v) and W[u][v] != math.inf:
                walk(src, v, cost + W[u][v], visited | (1 << v))

    for s in range(n):
        walk(s, s, 0.0, 1 << s)
    return SquareMatrix(M.labels, best)
