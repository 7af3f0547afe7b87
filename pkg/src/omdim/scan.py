"""Exhaustive labelled-graph enumeration and the claim-verification scan."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from itertools import combinations
from typing import Iterable, Iterator, Optional, Sequence

from .codecs import encode_graph6, read_graphs
from .dim2 import DIM_GT_2, DIM_IS_1, DIM_IS_2, check_layer_lemma, decide_dim2
from .errors import InvalidParams, OrderOutOfRange
from .families import EmptyFactor, complete_graph, lexicographic_product
from .graph import Graph, _reach
from .irregularity import is_multiset_distance_irregular, is_transmission_irregular
from .multiset import is_outer_multiset_resolving, outer_multiset_dimension, resolving_sets_of_size

CLAIMS = {
    "t1": "dimension n-1 iff regular with diameter at most 2",
    "alg1": "dim-2 recognition agrees with exhaustive search",
    "lem1": "both vertices of a 2-element basis are at distance at most 2",
    "lem2": "layer sizes around a 2-element basis obey the layer bounds",
    "incl": "transmission irregular implies multiset distance irregular",
    "t4": "lexicographic product bound, tight iff multiset distance irregular",
}
DEFAULT_CLAIMS = ("t1", "alg1", "lem1", "lem2", "incl", "t4")
T4_MAX_ORDER = 4


def enumerate_connected_labeled(n: int) -> Iterator[Graph]:
    """Every connected simple graph on ``{0..n-1}``, one per edge subset."""
    if not 2 <= n <= 7:
        raise OrderOutOfRange(f"enumeration supports 2 <= n <= 7, got {n}")
    pairs = list(combinations(range(n), 2))
    full = (1 << n) - 1
    for mask in range(1 << len(pairs)):
        adj = [0] * n
        for k, (u, v) in enumerate(pairs):
            if mask >> k & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        if _reach(adj, 0) == full:
            yield Graph(n, tuple(adj))


@dataclass(frozen=True)
class Counterexample:
    graph6: str
    claim: str
    details: str

    def to_dict(self) -> dict:
        return {"graph6": self.graph6, "claim": self.claim, "details": self.details}


@dataclass
class ScanReport:
    claims: tuple[str, ...]
    graphs_checked: int = 0
    counterexamples: list[Counterexample] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def to_dict(self) -> dict:
        return {
            "claims": list(self.claims),
            "graphs_checked": self.graphs_checked,
            "counterexamples": [c.to_dict() for c in self.counterexamples],
            "elapsed": round(self.elapsed, 3),
        }


def _lex_factors() -> list[tuple[str, object]]:
    return [("K2", complete_graph(2)), ("K3", complete_graph(3)), ("empty2", EmptyFactor(2))]


def check_graph(g: Graph, claims: Sequence[str], t4_max_order: int = T4_MAX_ORDER) -> list[tuple[str, str]]:
    """Run the selected claim checks on one graph; returns ``(claim, details)`` failures."""
    failures: list[tuple[str, str]] = []
    dm = g.distances
    need_dim = {"t1", "alg1", "lem1", "lem2"} & set(claims)
    dim = outer_multiset_dimension(g, use_fast_paths=False).dimension if need_dim else None

    if "t1" in claims:
        predicted = g.is_regular() and dm.diam <= 2
        if (dim == g.n - 1) != predicted:
            failures.append(("t1", f"dim={dim}, regular={g.is_regular()}, diam={dm.diam}"))

    if "alg1" in claims:
        decision = decide_dim2(g)
        expected = DIM_IS_1 if dim == 1 else DIM_IS_2 if dim == 2 else DIM_GT_2
        if decision.outcome != expected:
            failures.append(("alg1", f"decide_dim2={decision.outcome}, search dim={dim}"))
        elif decision.basis is not None and not is_outer_multiset_resolving(dm, decision.basis):
            failures.append(("alg1", f"reported pair {decision.basis} does not resolve"))

    if dim == 2 and {"lem1", "lem2"} & set(claims):
        for pair in resolving_sets_of_size(g, 2):
            u, v = pair
            if "lem1" in claims and dm[u][v] > 2:
                failures.append(("lem1", f"basis {pair} at distance {dm[u][v]}"))
            if "lem2" in claims and not check_layer_lemma(dm, pair):
                failures.append(("lem2", f"layer bound fails for basis {pair}"))

    if "incl" in claims:
        if is_transmission_irregular(dm) and not is_multiset_distance_irregular(dm):
            failures.append(("incl", "transmission irregular but not multiset distance irregular"))

    if "t4" in claims and g.n <= t4_max_order:
        irregular = is_multiset_distance_irregular(dm)
        for name, h in _lex_factors():
            bound = g.n * (h.n - 1)
            d = outer_multiset_dimension(lexicographic_product(g, h)).dimension
            if d < bound or (d == bound) != irregular:
                failures.append(("t4", f"h={name}: dim={d}, bound={bound}, irregular={irregular}"))
    return failures


def _check_one(g: Graph, claims: Sequence[str], t4_max_order: int) -> list[Counterexample]:
    return [Counterexample(encode_graph6(g), c, d) for c, d in check_graph(g, claims, t4_max_order)]


def _source_graphs(n_max: Optional[int], n_min: int, corpus: Optional[str]) -> Iterable[Graph]:
    if corpus is not None:
        return read_graphs(corpus)
    if n_max is None:
        raise InvalidParams("scan needs either n_max or a corpus")
    return (g for n in range(n_min, n_max + 1) for g in enumerate_connected_labeled(n))


def scan_verify(
    claims: Iterable[str] = DEFAULT_CLAIMS,
    n_max: Optional[int] = 6,
    *,
    n_min: int = 2,
    corpus: Optional[str] = None,
    workers: int = 1,
    t4_max_order: int = T4_MAX_ORDER,
) -> ScanReport:
    """Check claims on every enumerated graph (or every graph of a corpus).

    Counterexamples are reported in source order whatever the worker count.
    """
    claims = tuple(dict.fromkeys(claims))
    unknown = set(claims) - set(CLAIMS)
    if unknown:
        raise InvalidParams(f"unknown claim tag(s): {', '.join(sorted(unknown))}")
    report = ScanReport(claims)
    start = time.perf_counter()
    graphs = _source_graphs(n_max, n_min, corpus)
    check = partial(_check_one, claims=claims, t4_max_order=t4_max_order)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = pool.map(check, graphs, chunksize=256)
            for found in results:
                report.graphs_checked += 1
                report.counterexamples.extend(found)
    else:
        for g in graphs:
            report.graphs_checked += 1
            report.counterexamples.extend(check(g))
    report.elapsed = time.perf_counter() - start
    return report
