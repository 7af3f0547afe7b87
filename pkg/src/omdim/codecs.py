"""graph6 and edge-list codecs, DOT export."""

from __future__ import annotations

import sys
from typing import Iterable, TextIO

from .errors import MalformedGraph6, OmdimError, SourceReadError, UnsupportedOrder
from .graph import Graph, build_graph

MAX_ORDER = 258047  # largest order expressible with the 4-byte header
_HEADER = ">>graph6<<"


def _encode_order(n: int) -> str:
    if n <= 62:
        return chr(63 + n)
    if n <= MAX_ORDER:
        return "~" + "".join(chr(63 + (n >> shift & 63)) for shift in (12, 6, 0))
    raise UnsupportedOrder(f"order {n} exceeds {MAX_ORDER}")


def encode_graph6(g: Graph) -> str:
    """graph6 string of the labelled graph (no canonical relabelling)."""
    out = [_encode_order(g.n)]
    acc = nbits = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def decode_graph6(s: str) -> Graph:
    s = s.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
    if not s:
        raise MalformedGraph6("empty graph6 string")
    if any(not 63 <= ord(c) <= 126 for c in s):
        raise MalformedGraph6(f"character outside 63..126 in {s!r}")
    vals = [ord(c) - 63 for c in s]
    if vals[0] != 63:
        n, body = vals[0], vals[1:]
    elif len(vals) >= 2 and vals[1] != 63:
        if len(vals) < 4:
            raise MalformedGraph6("truncated order header")
        n = vals[1] << 12 | vals[2] << 6 | vals[3]
        body = vals[4:]
    else:
        if len(vals) < 8:
            raise MalformedGraph6("truncated order header")
        n = 0
        for v in vals[2:8]:
            n = n << 6 | v
        body = vals[8:]
    if n > MAX_ORDER:
        raise UnsupportedOrder(f"order {n} exceeds {MAX_ORDER}")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise MalformedGraph6(f"expected {(nbits + 5) // 6} data characters, got {len(body)}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    if nbits % 6 and body[-1] & ((1 << (6 - nbits % 6)) - 1):
        raise MalformedGraph6("nonzero padding bits")
    return build_graph(n, edges)


def parse_edge_list(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines ``u v`` (0-based); ``#`` starts a comment."""
    rows = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    if not rows:
        raise SourceReadError("empty edge list")
    try:
        n, m = (int(x) for x in rows[0])
        edges = [(int(a), int(b)) for a, b in rows[1:]]
    except ValueError as exc:
        raise SourceReadError(f"malformed edge list: {exc}") from exc
    if len(edges) != m:
        raise SourceReadError(f"header announces {m} edges, found {len(edges)}")
    return build_graph(n, edges)


def format_edge_list(g: Graph) -> str:
    edges = g.edges()
    return "\n".join([f"{g.n} {len(edges)}", *(f"{u} {v}" for u, v in edges)]) + "\n"


def format_dot(g: Graph, name: str = "G", highlight: Iterable[int] = ()) -> str:
    marked = set(highlight)
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        style = ' [style=filled, fillcolor=black, fontcolor=white]' if v in marked else ""
        lines.append(f"  {v}{style};")
    lines += [f"  {u} -- {v};" for u, v in g.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def _looks_like_edge_list(text: str) -> bool:
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            parts = line.split()
            return len(parts) == 2 and all(p.isdigit() for p in parts)
    return False


def parse_graphs(text: str) -> list[Graph]:
    """Parse either one edge list or a graph6 corpus (one graph per line)."""
    if _looks_like_edge_list(text):
        return [parse_edge_list(text)]
    graphs = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line:
            continue
        try:
            graphs.append(decode_graph6(line))
        except OmdimError as exc:
            raise type(exc)(f"line {lineno}: {exc}") from exc
    if not graphs:
        raise SourceReadError("no graphs found")
    return graphs


def read_graphs(source: str | TextIO) -> list[Graph]:
    """Read graphs from a path, ``-`` (stdin) or an open text stream."""
    try:
        if source == "-":
            text = sys.stdin.read()
        elif isinstance(source, str):
            with open(source, encoding="ascii") as fh:
                text = fh.read()
        else:
            text = source.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise SourceReadError(f"cannot read {source}: {exc}") from exc
    return parse_graphs(text)

