"""Simple connected graphs on dense vertex sets, BFS distances and twin classes.

Adjacency is stored as one Python ``int`` bitset per vertex: bit ``v`` of
``adj[u]`` is set iff ``uv`` is an edge.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Optional, Sequence

from .errors import DisconnectedGraph, OrderTooSmall, SelfLoop, VertexOutOfRange


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Connected simple undirected graph on vertices ``0..n-1``."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 2:
            raise OrderTooSmall(f"graph needs at least 2 vertices, got {self.n}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match n")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.adj):
            if row & ~full:
                raise VertexOutOfRange(f"vertex {u} has a neighbour outside 0..{self.n - 1}")
            if row >> u & 1:
                raise SelfLoop(f"self-loop at vertex {u}")
            for v in iter_bits(row):
                if not self.adj[v] >> u & 1:
                    raise ValueError(f"adjacency is not symmetric at {u},{v}")
        if _reach(self.adj, 0) != full:
            raise DisconnectedGraph("graph is not connected")

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u]) if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, u: int) -> list[int]:
        return list(iter_bits(self.adj[u]))

    def degree(self, u: int) -> int:
        return self.adj[u].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def is_regular(self) -> bool:
        return len(set(self.degrees())) == 1

    def is_complete(self) -> bool:
        return all(row.bit_count() == self.n - 1 for row in self.adj)

    def is_path(self) -> bool:
        """True iff the graph is a path (``K_2`` included)."""
        degs = sorted(self.degrees())
        return degs[:2] == [1, 1] and all(d == 2 for d in degs[2:])

    @cached_property
    def distances(self) -> "DistanceMatrix":
        """Lazily filled distance table shared by every caller."""
        return DistanceMatrix(self)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def _reach(adj: Sequence[int], source: int) -> int:
    seen = frontier = 1 << source
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a validated graph from an edge list; duplicate edges are merged."""
    if n < 2:
        raise OrderTooSmall(f"graph needs at least 2 vertices, got {n}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


class DistanceMatrix:
    """All-pairs hop distances together with eccentricities and diameter.

    Rows are filled by one BFS each, on first access, so callers that only
    read a few rows pay for a few searches.  Row contents never change once
    computed.
    """

    def __init__(self, g: Graph) -> None:
        self._adj = g.adj
        self._rows: list[Optional[tuple[int, ...]]] = [None] * g.n

    @property
    def n(self) -> int:
        return len(self._rows)

    def __getitem__(self, u: int) -> tuple[int, ...]:
        row = self._rows[u]
        if row is None:
            row = self._rows[u] = _bfs_row(self._adj, u)
        return row

    @cached_property
    def dist(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self[u] for u in range(self.n))

    @cached_property
    def ecc(self) -> tuple[int, ...]:
        return tuple(max(row) for row in self.dist)

    @cached_property
    def diam(self) -> int:
        return max(self.ecc)


def _bfs_row(adj: Sequence[int], source: int) -> tuple[int, ...]:
    row = [0] * len(adj)
    seen = frontier = 1 << source
    depth = 0
    while frontier:
        depth += 1
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= adj[v]
        frontier = nxt & ~seen
        seen |= frontier
        for v in iter_bits(frontier):
            row[v] = depth
    return tuple(row)


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """Full distance table, one bitset BFS per source vertex."""
    dm = DistanceMatrix(g)
    dm.dist  # fill every row
    return dm


@dataclass(frozen=True)
class TwinPartition:
    classes: tuple[tuple[int, ...], ...]
    kinds: tuple[str, ...]  # "true", "false" or "singleton", parallel to classes

    def class_of(self) -> list[int]:
        """Map each vertex to the index of its class."""
        owner = [0] * sum(len(c) for c in self.classes)
        for i, cls in enumerate(self.classes):
            for v in cls:
                owner[v] = i
        return owner


def twin_classes(g: Graph) -> TwinPartition:
    """Maximal classes of pairwise twins.

    A vertex cannot have both a false twin and a true twin, so grouping by
    open neighbourhood first and closed neighbourhood second is well defined.
    """
    by_open: dict[int, list[int]] = defaultdict(list)
    by_closed: dict[int, list[int]] = defaultdict(list)
    for u in range(g.n):
        by_open[g.adj[u]].append(u)
        by_closed[g.adj[u] | 1 << u].append(u)

    found: dict[int, tuple[tuple[int, ...], str]] = {}
    for u in range(g.n):
        if u in found:
            continue
        if len(by_open[g.adj[u]]) > 1:
            cls, kind = tuple(by_open[g.adj[u]]), "false"
        elif len(by_closed[g.adj[u] | 1 << u]) > 1:
            cls, kind = tuple(by_closed[g.adj[u] | 1 << u]), "true"
        else:
            cls, kind = (u,), "singleton"
        for v in cls:
            found[v] = (cls, kind)

    unique = sorted(set(found.values()), key=lambda ck: ck[0][0])
    return TwinPartition(tuple(c for c, _ in unique), tuple(k for _, k in unique))
