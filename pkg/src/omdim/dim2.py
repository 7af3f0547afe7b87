"""Recognition of graphs with outer multiset dimension 2 and the adjacent-basis family."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from .errors import EmptySource, InvalidParams, NotABasis
from .graph import DistanceMatrix, Graph, build_graph
from .multiset import is_outer_multiset_resolving

DIM_IS_1 = "dim_is_1"
DIM_IS_2 = "dim_is_2"
DIM_GT_2 = "dim_gt_2"


@dataclass(frozen=True)
class LayerPartition:
    source: tuple[int, ...]
    layers: tuple[tuple[int, ...], ...]

    def sizes(self) -> list[int]:
        return [len(layer) for layer in self.layers]


def layer_partition(dm: DistanceMatrix, X: Iterable[int]) -> LayerPartition:
    """Group vertices by their distance to the nearest member of ``X``."""
    X = tuple(sorted(set(X)))
    if not X:
        raise EmptySource("layer partition needs a nonempty source set")
    level = [min(dm[x][u] for x in X) for u in range(dm.n)]
    layers: list[list[int]] = [[] for _ in range(max(level) + 1)]
    for u, k in enumerate(level):
        layers[k].append(u)
    return LayerPartition(X, tuple(tuple(layer) for layer in layers))


def check_layer_lemma(dm: DistanceMatrix, S: Iterable[int]) -> bool:
    """Layer-size conditions satisfied by any 2-element outer multiset basis.

    Every layer ``L_k(S)`` with ``k >= 1`` has at most 3 vertices; when the two
    basis vertices are adjacent, at most 2 and the sizes never increase.
    Raises :class:`NotABasis` when ``S`` is not a basis of size 2.
    """
    S = tuple(sorted(set(S)))
    if len(S) != 2 or not is_outer_multiset_resolving(dm, S):
        raise NotABasis(f"{S} is not an outer multiset resolving pair")
    if any(is_outer_multiset_resolving(dm, [w]) for w in range(dm.n)):
        raise NotABasis("a single vertex already resolves this graph")
    sizes = layer_partition(dm, S).sizes()
    if any(size > 3 for size in sizes[1:]):
        return False
    if dm[S[0]][S[1]] == 1:
        if any(size > 2 for size in sizes[1:]):
            return False
        if any(sizes[k + 1] > sizes[k] for k in range(1, len(sizes) - 1)):
            return False
    return True


@dataclass(frozen=True)
class Dim2Decision:
    outcome: str
    basis: Optional[tuple[int, int]] = None

    def to_dict(self) -> dict:
        return {"outcome": self.outcome, "basis": list(self.basis) if self.basis else None}


def _pair_resolves(dist, u: int, v: int) -> bool:
    du, dv = dist[u], dist[v]
    seen = set()
    for x in range(len(dist)):
        if x == u or x == v:
            continue
        a, b = du[x], dv[x]
        key = (a, b) if a <= b else (b, a)
        if key in seen:
            return False
        seen.add(key)
    return True


def decide_dim2(g: Graph) -> Dim2Decision:
    """Decide whether the outer multiset dimension equals 2.

    Only pairs at distance at most 2 can form a 2-element basis, so those are
    the only candidates examined; the first resolving pair in lexicographic
    order is reported.
    """
    if g.is_path():
        return Dim2Decision(DIM_IS_1)
    dist = g.distances.dist
    n = g.n
    for u in range(n):
        row = dist[u]
        for v in range(u + 1, n):
            if row[v] <= 2 and _pair_resolves(dist, u, v):
                return Dim2Decision(DIM_IS_2, (u, v))
    return Dim2Decision(DIM_GT_2)


@dataclass(frozen=True)
class FamilyFParams:
    """Parameters of a member of the two-path family with triangle base.

    Vertices ``u_0..u_r`` are numbered ``0..r`` and ``v_0..v_s`` are numbered
    ``r+1..r+1+s``.  ``cross_i`` selects optional edges ``u_i v_i`` and
    ``cross_j`` selects optional edges ``u_i v_{i+1}``.
    """

    r: int
    s: int
    cross_i: frozenset[int] = field(default_factory=frozenset)
    cross_j: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        object.__setattr__(self, "cross_i", frozenset(self.cross_i))
        object.__setattr__(self, "cross_j", frozenset(self.cross_j))

    def u(self, i: int) -> int:
        return i

    def v(self, j: int) -> int:
        return self.r + 1 + j


def generate_family_F(p: FamilyFParams) -> Graph:
    if p.r < 0 or p.s < 1:
        raise InvalidParams(f"need r >= 0 and s >= 1, got r={p.r}, s={p.s}")
    if not p.cross_i <= set(range(1, min(p.r, p.s) + 1)):
        raise InvalidParams(f"cross_i must lie in 1..{min(p.r, p.s)}")
    if not p.cross_j <= set(range(1, min(p.r, p.s - 1) + 1)):
        raise InvalidParams(f"cross_j must lie in 1..{min(p.r, p.s - 1)}")
    edges = [(p.u(0), p.v(0)), (p.u(0), p.v(1))]
    edges += [(p.u(i - 1), p.u(i)) for i in range(1, p.r + 1)]
    edges += [(p.v(j - 1), p.v(j)) for j in range(1, p.s + 1)]
    edges += [(p.u(i), p.v(i)) for i in sorted(p.cross_i)]
    edges += [(p.u(i), p.v(i + 1)) for i in sorted(p.cross_j)]
    return build_graph(p.r + p.s + 2, edges)


def all_family_F_params(r: int, s: int) -> list[FamilyFParams]:
    """Every optional-edge selection for fixed ``r`` and ``s``."""
    ci = list(range(1, min(r, s) + 1))
    cj = list(range(1, min(r, s - 1) + 1))
    out = []
    for a in range(1 << len(ci)):
        for b in range(1 << len(cj)):
            out.append(FamilyFParams(
                r, s,
                frozenset(x for k, x in enumerate(ci) if a >> k & 1),
                frozenset(x for k, x in enumerate(cj) if b >> k & 1),
            ))
    return out


def has_adjacent_2_basis(g: Graph) -> Optional[tuple[int, int]]:
    """Lexicographically first adjacent pair forming an outer multiset basis."""
    if g.is_path():
        return None
    dist = g.distances.dist
    for u, v in g.edges():
        if _pair_resolves(dist, u, v):
            return (u, v)
    return None
