"""Multiset representations, resolving-set predicates and the exact solver."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, groupby
from typing import Iterable, Sequence

from .errors import VertexOutOfRange
from .graph import DistanceMatrix, Graph, TwinPartition, twin_classes

FAST_PATH_THEOREM1 = "fast-path-theorem1"
FAST_PATH_PATH = "fast-path-path"
CLOSED_FORM = "closed-form"
SEARCH = "search"


@dataclass(frozen=True, order=True)
class DistanceMultiset:
    """Sorted multiset of distances; equality is equality of ``entries``."""

    entries: tuple[int, ...]

    @classmethod
    def of(cls, values: Iterable[int]) -> "DistanceMultiset":
        return cls(tuple(sorted(values)))

    @property
    def runs(self) -> list[tuple[int, int]]:
        """Run-length view ``[(distance, multiplicity), ...]``."""
        return [(d, len(list(grp))) for d, grp in groupby(self.entries)]

    def __len__(self) -> int:
        return len(self.entries)

    def __str__(self) -> str:
        parts = [str(d) if k == 1 else f"{d}^{k}" for d, k in self.runs]
        return "{{" + ", ".join(parts) + "}}"


@dataclass(frozen=True)
class DimensionResult:
    dimension: int
    basis: tuple[int, ...]
    method: str

    def to_dict(self) -> dict:
        return {"dimension": self.dimension, "basis": list(self.basis), "method": self.method}


def _check_vertices(dm: DistanceMatrix, vertices: Iterable[int]) -> None:
    for v in vertices:
        if not 0 <= v < dm.n:
            raise VertexOutOfRange(f"vertex {v} outside 0..{dm.n - 1}")


def multiset_representation(dm: DistanceMatrix, u: int, S: Iterable[int]) -> DistanceMultiset:
    S = list(S)
    _check_vertices(dm, [u, *S])
    row = dm[u]
    return DistanceMultiset.of(row[w] for w in S)


def _outer_resolving(dm: DistanceMatrix, S: Sequence[int], outside: Iterable[int]) -> bool:
    # reads only the rows of S members (distances are symmetric)
    rows = [dm[w] for w in S]
    seen = set()
    for u in outside:
        key = tuple(sorted([row[u] for row in rows]))
        if key in seen:
            return False
        seen.add(key)
    return True


def is_outer_multiset_resolving(dm: DistanceMatrix, S: Iterable[int]) -> bool:
    """True iff vertices outside ``S`` have pairwise distinct multisets to ``S``."""
    members = set(S)
    _check_vertices(dm, members)
    outside = [u for u in range(dm.n) if u not in members]
    if len(outside) <= 1:
        return True
    return _outer_resolving(dm, sorted(members), outside)


def is_vector_resolving(dm: DistanceMatrix, S: Sequence[int]) -> bool:
    """Classical resolving set: distance vectors of all vertices are distinct."""
    S = list(S)
    if not S:
        raise ValueError("vector resolving check needs a nonempty set")
    _check_vertices(dm, S)
    vectors = {tuple(dm[u][w] for w in S) for u in range(dm.n)}
    return len(vectors) == dm.n


def twin_lower_bound(tp: TwinPartition) -> int:
    # an outer resolving set omits at most one vertex of each twin class
    return sum(len(cls) - 1 for cls in tp.classes)


def _twin_feasible_subsets(n: int, k: int, owner: Sequence[int]) -> Iterable[tuple[int, ...]]:
    """k-subsets in lexicographic order leaving out at most one vertex per twin class."""
    for S in combinations(range(n), k):
        omitted = set(range(n)).difference(S)
        classes = [owner[v] for v in omitted]
        if len(classes) == len(set(classes)):
            yield S


def resolving_sets_of_size(g: Graph, k: int) -> Iterable[tuple[int, ...]]:
    """All outer multiset resolving sets of size ``k``, lexicographically."""
    dm = g.distances
    owner = twin_classes(g).class_of()
    for S in _twin_feasible_subsets(g.n, k, owner):
        outside = [u for u in range(g.n) if u not in S]
        if len(outside) <= 1 or _outer_resolving(dm, S, outside):
            yield S


def outer_multiset_dimension(g: Graph, use_fast_paths: bool = True) -> DimensionResult:
    """Exact outer multiset dimension with the lexicographically first basis.

    The search walks sizes upward from the twin bound and keeps only subsets
    that omit at most one vertex per twin class.  The shortcuts for paths and
    for regular graphs of diameter at most 2 return the same answer as the
    search does, just faster.
    """
    n = g.n
    if use_fast_paths:
        if g.is_path():
            end = min(v for v in range(n) if g.degree(v) <= 1)
            return DimensionResult(1, (end,), FAST_PATH_PATH)
        if g.is_regular() and g.distances.diam <= 2:
            return DimensionResult(n - 1, tuple(range(n - 1)), FAST_PATH_THEOREM1)

    tp = twin_classes(g)
    start = max(1, twin_lower_bound(tp))
    for k in range(start, n):
        for S in resolving_sets_of_size(g, k):
            return DimensionResult(k, S, SEARCH)
    raise AssertionError("unreachable: every (n-1)-subset is resolving")
