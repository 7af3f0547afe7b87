"""Named graph families, Cartesian and lexicographic products, closed forms.

Product vertices ``(a, b)`` are flattened to ``a * n(H) + b``.  Grid vertex
``(i, j)`` of ``P_s x P_t`` is therefore ``i * t + j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Union

from .errors import DisconnectedResult, InvalidParams, OutOfTheoremRange
from .graph import Graph, build_graph
from .irregularity import is_multiset_distance_irregular
from .multiset import is_outer_multiset_resolving

FAMILY_ARITY = {
    "path": 1,
    "cycle": 1,
    "complete": 1,
    "complete_multipartite": None,  # one or more part sizes
    "empty": 1,
    "petersen": 0,
    "grid": 2,
    "hypercube": 1,
}


@dataclass(frozen=True)
class NamedFamily:
    tag: str
    params: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))
        if self.tag not in FAMILY_ARITY:
            raise InvalidParams(f"unknown family {self.tag!r}")
        arity = FAMILY_ARITY[self.tag]
        if arity is not None and len(self.params) != arity:
            raise InvalidParams(f"{self.tag} takes {arity} parameter(s), got {len(self.params)}")
        if arity is None and not self.params:
            raise InvalidParams(f"{self.tag} needs at least one part size")
        if any(p < 1 for p in self.params):
            raise InvalidParams(f"{self.tag} parameters must be positive")

    def __str__(self) -> str:
        return self.tag + "".join(f":{p}" if i == 0 else f",{p}" for i, p in enumerate(self.params))


@dataclass(frozen=True)
class EmptyFactor:
    """Edgeless graph on ``k`` vertices; only usable as a product factor."""

    k: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise InvalidParams("edgeless factor needs k >= 1")

    @property
    def n(self) -> int:
        return self.k

    def has_edge(self, u: int, v: int) -> bool:
        return False


Factor = Union[Graph, EmptyFactor]


def complete_graph(n: int) -> Graph:
    return build_graph(n, combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def generate(f: NamedFamily) -> Graph:
    p = f.params
    if f.tag == "path":
        return path_graph(p[0])
    if f.tag == "cycle":
        if p[0] < 3:
            raise InvalidParams("cycles need at least 3 vertices")
        return cycle_graph(p[0])
    if f.tag == "complete":
        return complete_graph(p[0])
    if f.tag == "complete_multipartite":
        if len(p) < 2:
            raise DisconnectedResult("a complete multipartite graph needs at least two parts")
        starts = [sum(p[:i]) for i in range(len(p))]
        edges = [
            (a, b)
            for i, j in combinations(range(len(p)), 2)
            for a in range(starts[i], starts[i] + p[i])
            for b in range(starts[j], starts[j] + p[j])
        ]
        return build_graph(sum(p), edges)
    if f.tag == "empty":
        raise DisconnectedResult("edgeless graphs exist only as product factors")
    if f.tag == "petersen":
        edges = [(i, (i + 1) % 5) for i in range(5)]
        edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        edges += [(i, i + 5) for i in range(5)]
        return build_graph(10, edges)
    if f.tag == "grid":
        return cartesian_product(_path_or_k1(p[0]), _path_or_k1(p[1]))
    if f.tag == "hypercube":
        g = path_graph(2)
        for _ in range(p[0] - 1):
            g = cartesian_product(g, path_graph(2))
        return g
    raise InvalidParams(f"unknown family {f.tag!r}")


class _SingleVertex:
    n = 1

    @staticmethod
    def has_edge(u: int, v: int) -> bool:
        return False


def _path_or_k1(n: int):
    return _SingleVertex() if n == 1 else path_graph(n)


def cartesian_product(g, h) -> Graph:
    """``(a,b) ~ (c,d)`` iff one coordinate is equal and the other is an edge."""
    nh = h.n
    edges = []
    for a in range(g.n):
        for b in range(nh):
            for d in range(b + 1, nh):
                if h.has_edge(b, d):
                    edges.append((a * nh + b, a * nh + d))
    for a, c in combinations(range(g.n), 2):
        if g.has_edge(a, c):
            for b in range(nh):
                edges.append((a * nh + b, c * nh + b))
    return build_graph(g.n * nh, edges)


def lexicographic_product(g: Graph, h: Factor) -> Graph:
    """``(a,b) ~ (c,d)`` iff ``ac`` is an edge, or ``a == c`` and ``bd`` is an edge."""
    nh = h.n
    edges = []
    for a in range(g.n):
        for b, d in combinations(range(nh), 2):
            if h.has_edge(b, d):
                edges.append((a * nh + b, a * nh + d))
    for a, c in combinations(range(g.n), 2):
        if g.has_edge(a, c):
            edges.extend((a * nh + b, c * nh + d) for b in range(nh) for d in range(nh))
    return build_graph(g.n * nh, edges)


def closed_form_dimension(f: NamedFamily) -> Optional[int]:
    """Known exact value for the family, or ``None`` when none is known."""
    p = f.params
    if f.tag == "path":
        if p[0] < 2:
            raise InvalidParams("paths need at least 2 vertices")
        return 1
    if f.tag == "cycle":
        n = p[0]
        if n < 3:
            raise InvalidParams("cycles need at least 3 vertices")
        return {3: 2, 4: 3, 5: 4}.get(n, 3)
    if f.tag == "complete":
        if p[0] < 2:
            raise InvalidParams("complete graphs need at least 2 vertices")
        return p[0] - 1
    if f.tag == "complete_multipartite":
        k = len(p)
        if k < 2:
            raise DisconnectedResult("a complete multipartite graph needs at least two parts")
        parts = sorted(p)
        if len(set(parts)) == 1:
            return k * parts[0] - 1
        if len(set(parts)) == k and parts[0] >= 2:
            return sum(parts) - k
        raise OutOfTheoremRange(f"no closed form for part sizes {p}")
    if f.tag == "petersen":
        return 9
    if f.tag == "grid":
        s, t = max(p), min(p)
        if s * t < 2:
            raise InvalidParams("grid needs at least 2 vertices")
        return 1 if t == 1 else 3
    if f.tag == "hypercube":
        return {1: 1, 2: 3}.get(p[0])
    if f.tag == "empty":
        raise DisconnectedResult("edgeless graphs are not connected")
    return None


def grid_certificate(s: int, t: int) -> tuple[int, ...]:
    """A 3-element outer multiset resolving set of ``P_s x P_t`` (flattened)."""
    if not s >= t >= 2:
        raise InvalidParams(f"need s >= t >= 2, got s={s}, t={t}")
    if s == 2:
        cells = [(0, 0), (0, 1), (1, 0)]
    elif s == 3:
        cells = [(0, 0), (2, 0), (2, 1)]
    else:
        cells = [(0, 0), (1, 0), (s - 1, 0)]
    return tuple(sorted(i * t + j for i, j in cells))


@dataclass(frozen=True)
class LexBound:
    lower_bound: int
    equality: bool
    certificate: Optional[tuple[int, ...]]

    def to_dict(self) -> dict:
        cert = list(self.certificate) if self.certificate is not None else None
        return {"lower_bound": self.lower_bound, "equality": self.equality, "certificate": cert}


def lex_bound_and_equality(g: Graph, h: Factor) -> LexBound:
    """Twin bound for ``g o h`` with ``h`` complete or edgeless, and whether it is tight.

    Tightness is predicted by multiset distance irregularity of ``g``.  When
    tight, the certificate keeps every vertex of each layer except the one with
    second coordinate 0 and is checked to be resolving before being returned.
    """
    k = h.n
    if k < 2:
        raise InvalidParams("second factor needs at least 2 vertices")
    if isinstance(h, Graph) and not h.is_complete():
        raise InvalidParams("second factor must be complete or edgeless")
    bound = g.n * (k - 1)
    equality = is_multiset_distance_irregular(g.distances)
    certificate = None
    if equality:
        cand = tuple(a * k + b for a in range(g.n) for b in range(1, k))
        product = lexicographic_product(g, h)
        if is_outer_multiset_resolving(product.distances, cand):
            certificate = cand
    return LexBound(bound, equality, certificate)


def parse_family(text: str) -> NamedFamily:
    """Parse ``tag`` or ``tag:p1,p2,...`` into a :class:`NamedFamily`."""
    tag, _, rest = text.partition(":")
    try:
        params = tuple(int(x) for x in rest.split(",") if x.strip())
    except ValueError as exc:
        raise InvalidParams(f"bad family parameters in {text!r}") from exc
    return NamedFamily(tag.strip(), params)
