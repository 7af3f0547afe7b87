"""Slow, deliberately naive reference implementations used only by the tests.

None of these touch the package's bitsets, BFS, twin pruning or codecs.
"""

from __future__ import annotations

import random
from collections import Counter
from itertools import combinations

INF = float("inf")


def floyd_warshall(n, edges):
    d = [[0 if i == j else INF for j in range(n)] for i in range(n)]
    for u, v in edges:
        d[u][v] = d[v][u] = 1
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if d[i][k] + d[k][j] < d[i][j]:
                    d[i][j] = d[i][k] + d[k][j]
    return d


def naive_outer_resolving(d, S):
    outside = [u for u in range(len(d)) if u not in S]
    reps = [Counter(d[u][w] for w in S) for u in outside]
    return all(reps[a] != reps[b] for a, b in combinations(range(len(reps)), 2))


def naive_dimension(n, edges):
    """Smallest outer multiset resolving set over all subsets, no pruning."""
    d = floyd_warshall(n, edges)
    for k in range(1, n + 1):
        for S in combinations(range(n), k):
            if naive_outer_resolving(d, set(S)):
                return k, S
    raise AssertionError


def naive_connected(n, edges):
    seen, stack = {0}, [0]
    nbrs = {v: set() for v in range(n)}
    for u, v in edges:
        nbrs[u].add(v)
        nbrs[v].add(u)
    while stack:
        for w in nbrs[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


def count_connected_labeled(n):
    pairs = list(combinations(range(n), 2))
    total = 0
    for r in range(len(pairs) + 1):
        for chosen in combinations(pairs, r):
            total += naive_connected(n, chosen)
    return total


def reference_graph6(n, edges):
    """graph6 via an explicit '0'/'1' bit string; only handles n <= 62."""
    assert n <= 62
    es = {frozenset(e) for e in edges}
    bits = "".join("1" if frozenset((i, j)) in es else "0" for j in range(1, n) for i in range(j))
    bits += "0" * (-len(bits) % 6)
    return chr(n + 63) + "".join(chr(int(bits[k:k + 6], 2) + 63) for k in range(0, len(bits), 6))


def random_connected_edges(rng: random.Random, n: int, p: float):
    """Random spanning tree plus independent extra edges."""
    order = list(range(n))
    rng.shuffle(order)
    edges = {tuple(sorted((order[i], order[rng.randrange(i)]))) for i in range(1, n)}
    for u, v in combinations(range(n), 2):
        if rng.random() < p:
            edges.add((u, v))
    return sorted(edges)
