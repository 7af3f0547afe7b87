"""Command line interface: ``omdim <command> ...``.

Inputs are a graph6 file (one graph per line), an edge-list file, ``-`` for
standard input, or a family spec such as ``cycle:5`` or ``grid:4,3``.
Exit status: 0 success, 1 counterexamples found, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import __version__
from .codecs import encode_graph6, format_dot, format_edge_list, read_graphs
from .dim2 import FamilyFParams, decide_dim2, generate_family_F
from .errors import InvalidParams, OmdimError, SourceReadError
from .families import (
    EmptyFactor,
    NamedFamily,
    cartesian_product,
    generate,
    lex_bound_and_equality,
    lexicographic_product,
    parse_family,
)
from .graph import Graph
from .irregularity import (
    full_multiset,
    is_multiset_distance_irregular,
    is_transmission_irregular,
    transmission_profile,
)
from .multiset import (
    is_outer_multiset_resolving,
    is_vector_resolving,
    multiset_representation,
    outer_multiset_dimension,
)
from .scan import CLAIMS, DEFAULT_CLAIMS, scan_verify


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def load_inputs(spec: str) -> list[Graph]:
    if spec == "-" or os.path.exists(spec):
        return read_graphs(spec)
    if ":" in spec or spec == "petersen":
        return [generate(parse_family(spec))]
    raise SourceReadError(f"no such file or family spec: {spec}")


def _load_factor(spec: str):
    tag, _, rest = spec.partition(":")
    if tag == "empty" and not os.path.exists(spec):
        return EmptyFactor(int(rest))
    graphs = load_inputs(spec)
    if len(graphs) != 1:
        raise InvalidParams(f"{spec} must hold exactly one graph")
    return graphs[0]


def _emit_graph(g: Graph, fmt: str) -> str:
    if fmt == "edges":
        return format_edge_list(g).rstrip("\n")
    if fmt == "dot":
        return format_dot(g).rstrip("\n")
    return encode_graph6(g)


def cmd_dim(args) -> int:
    for g in load_inputs(args.input):
        res = outer_multiset_dimension(g, use_fast_paths=not args.no_fast_paths)
        if args.json:
            print(json.dumps({"graph6": encode_graph6(g), **res.to_dict()}))
        else:
            basis = ",".join(map(str, res.basis))
            print(f"{encode_graph6(g)}\tdim_ms={res.dimension}\tbasis={basis}\tmethod={res.method}")
    return 0


def cmd_check_set(args) -> int:
    for g in load_inputs(args.input):
        dm = g.distances
        S = args.set
        ok = is_vector_resolving(dm, S) if args.vector else is_outer_multiset_resolving(dm, S)
        kind = "vector" if args.vector else "outer-multiset"
        if args.json:
            reps = {str(u): list(multiset_representation(dm, u, S).entries)
                    for u in range(g.n) if u not in S}
            print(json.dumps({"graph6": encode_graph6(g), "set": S, "kind": kind,
                              "resolving": ok, "representations": reps}))
        else:
            print(f"{encode_graph6(g)}\t{kind} resolving={ok}")
            if not args.vector:
                for u in range(g.n):
                    if u not in S:
                        print(f"  {u}: {multiset_representation(dm, u, S)}")
    return 0


def cmd_is_dim2(args) -> int:
    for g in load_inputs(args.input):
        d = decide_dim2(g)
        if args.json:
            print(json.dumps({"graph6": encode_graph6(g), **d.to_dict()}))
        else:
            extra = f"\tbasis={d.basis[0]},{d.basis[1]}" if d.basis else ""
            print(f"{encode_graph6(g)}\t{d.outcome}{extra}")
    return 0


def cmd_gen(args) -> int:
    if args.family == "family_f":
        if len(args.params) != 2:
            raise InvalidParams("family_f takes r and s")
        g = generate_family_F(FamilyFParams(args.params[0], args.params[1],
                                            frozenset(args.cross_i), frozenset(args.cross_j)))
    else:
        g = generate(NamedFamily(args.family, tuple(args.params)))
    print(_emit_graph(g, args.out))
    return 0


def cmd_product(args) -> int:
    a = _load_factor(args.a)
    b = _load_factor(args.b)
    if isinstance(a, EmptyFactor):
        raise InvalidParams("the first factor must be a connected graph")
    if args.kind == "cartesian":
        if isinstance(b, EmptyFactor):
            raise InvalidParams("Cartesian product with an edgeless factor is disconnected")
        g = cartesian_product(a, b)
    else:
        g = lexicographic_product(a, b)
    print(_emit_graph(g, args.out))
    return 0


def cmd_irregular(args) -> int:
    for g in load_inputs(args.input):
        dm = g.distances
        tr = transmission_profile(dm).values
        out = {
            "graph6": encode_graph6(g),
            "transmissions": list(tr),
            "multisets": [str(full_multiset(dm, v)) for v in range(g.n)],
            "transmission_irregular": is_transmission_irregular(dm),
            "multiset_distance_irregular": is_multiset_distance_irregular(dm),
        }
        if args.lex_k:
            out["lex_bound"] = lex_bound_and_equality(g, EmptyFactor(args.lex_k)).to_dict()
        if args.json:
            print(json.dumps(out))
        else:
            print(out["graph6"])
            for v in range(g.n):
                print(f"  {v}: Tr={tr[v]}  m={out['multisets'][v]}")
            print(f"  transmission irregular: {out['transmission_irregular']}")
            print(f"  multiset distance irregular: {out['multiset_distance_irregular']}")
            if args.lex_k:
                print(f"  lexicographic bound: {out['lex_bound']}")
    return 0


def cmd_scan(args) -> int:
    report = scan_verify(
        args.claims,
        None if args.corpus else args.n_max,
        n_min=args.n_min,
        corpus=args.corpus,
        workers=args.workers,
    )
    if args.json:
        print(json.dumps(report.to_dict()))
    else:
        print(f"claims: {', '.join(report.claims)}")
        print(f"graphs checked: {report.graphs_checked}")
        print(f"counterexamples: {len(report.counterexamples)}")
        for c in report.counterexamples:
            print(f"  {c.graph6}\t{c.claim}\t{c.details}")
        print(f"elapsed: {report.elapsed:.2f}s")
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="omdim", description="Outer multiset dimension toolkit.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dim", help="exact outer multiset dimension and a basis")
    p.add_argument("input")
    p.add_argument("--no-fast-paths", action="store_true", help="always run the subset search")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("check-set", help="test whether a vertex set resolves the graph")
    p.add_argument("input")
    p.add_argument("--set", type=_int_list, required=True)
    p.add_argument("--vector", action="store_true", help="classical (vector) resolving instead")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check_set)

    p = sub.add_parser("is-dim2", help="decide whether the dimension equals 2")
    p.add_argument("input")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_is_dim2)

    p = sub.add_parser("gen", help="generate a named family member")
    p.add_argument("family", help="path, cycle, complete, complete_multipartite, petersen, "
                                  "grid, hypercube or family_f")
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--cross-i", type=_int_list, default=[], help="family_f: optional u_i v_i edges")
    p.add_argument("--cross-j", type=_int_list, default=[], help="family_f: optional u_i v_(i+1) edges")
    p.add_argument("--out", choices=["graph6", "edges", "dot"], default="graph6")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("product", help="Cartesian or lexicographic product of two graphs")
    p.add_argument("kind", choices=["cartesian", "lex"])
    p.add_argument("a")
    p.add_argument("b", help="input, family spec, or empty:K for an edgeless factor")
    p.add_argument("--out", choices=["graph6", "edges", "dot"], default="graph6")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("irregular", help="transmissions and distance-multiset irregularity")
    p.add_argument("input")
    p.add_argument("--lex-k", type=int, default=0,
                   help="also report the lexicographic product bound for this k")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_irregular)

    p = sub.add_parser("scan", help="verify claims over all small labelled graphs or a corpus")
    p.add_argument("--claims", type=lambda s: [c for c in s.split(",") if c],
                   default=list(DEFAULT_CLAIMS), help="subset of " + ",".join(CLAIMS))
    p.add_argument("--n-max", type=int, default=6)
    p.add_argument("--n-min", type=int, default=2)
    p.add_argument("--corpus", help="graph6 file to scan instead of the enumeration")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_scan)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (OmdimError, ValueError) as exc:
        print(f"omdim: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
