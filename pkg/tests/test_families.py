from itertools import combinations, product

import networkx as nx
import pytest

from omdim.errors import DisconnectedResult, InvalidParams, OutOfTheoremRange
from omdim.families import (
    EmptyFactor,
    NamedFamily,
    cartesian_product,
    closed_form_dimension,
    complete_graph,
    cycle_graph,
    generate,
    grid_certificate,
    lex_bound_and_equality,
    lexicographic_product,
    parse_family,
    path_graph,
)
from omdim.graph import build_graph, twin_classes
from omdim.irregularity import fixture_graph_X, is_multiset_distance_irregular
from omdim.multiset import is_outer_multiset_resolving, outer_multiset_dimension
from omdim.scan import enumerate_connected_labeled


def fam(tag, *params):
    return NamedFamily(tag, params)


def test_generate_cycle():
    g = generate(fam("cycle", 4))
    assert (g.n, g.m) == (4, 4)


def test_generate_petersen():
    g = generate(fam("petersen"))
    assert (g.n, g.m) == (10, 15)
    assert g.degrees() == [3] * 10
    assert g.distances.diam == 2
    assert nx.is_isomorphic(nx.Graph(g.edges()), nx.petersen_graph())


def test_generate_complete_multipartite():
    g = generate(fam("complete_multipartite", 2, 3))
    assert (g.n, g.m) == (5, 6)


def test_generate_hypercube_matches_networkx():
    g = generate(fam("hypercube", 3))
    assert nx.is_isomorphic(nx.Graph(g.edges()), nx.hypercube_graph(3))


@pytest.mark.parametrize(
    "f, exc",
    [
        (lambda: generate(fam("empty", 3)), DisconnectedResult),
        (lambda: generate(fam("complete_multipartite", 4)), DisconnectedResult),
        (lambda: generate(fam("cycle", 2)), InvalidParams),
        (lambda: fam("grid", 3), InvalidParams),
        (lambda: fam("torus", 3, 3), InvalidParams),
        (lambda: fam("path", 0), InvalidParams),
    ],
)
def test_generate_errors(f, exc):
    with pytest.raises(exc):
        f()


def test_parse_family():
    assert parse_family("grid:8,5") == fam("grid", 8, 5)
    assert parse_family("petersen") == fam("petersen")


def test_cartesian_small():
    assert nx.is_isomorphic(nx.Graph(cartesian_product(path_graph(2), path_graph(2)).edges()), nx.cycle_graph(4))
    g = cartesian_product(path_graph(3), path_graph(2))
    assert (g.n, g.m) == (6, 7)


def test_hamming_k3_k3():
    g = cartesian_product(complete_graph(3), complete_graph(3))
    assert g.degrees() == [4] * 9
    assert g.distances.diam == 2
    assert outer_multiset_dimension(g, use_fast_paths=False).dimension == 8


def test_grid_flattening_matches_cartesian_adjacency():
    s, t = 4, 3
    g = generate(fam("grid", s, t))
    for (i, j), (k, l) in combinations(product(range(s), range(t)), 2):
        assert g.has_edge(i * t + j, k * t + l) == (abs(i - k) + abs(j - l) == 1)


def test_lex_small():
    assert lexicographic_product(path_graph(2), complete_graph(2)).edges() == complete_graph(4).edges()
    c4 = lexicographic_product(path_graph(2), EmptyFactor(2))
    assert nx.is_isomorphic(nx.Graph(c4.edges()), nx.cycle_graph(4))


def test_lex_p3_empty2_edge_count():
    g = lexicographic_product(path_graph(3), EmptyFactor(2))
    # brute-force edge enumeration straight from the adjacency rule
    expected = sum(
        1
        for (a, b), (c, d) in combinations(product(range(3), range(2)), 2)
        if abs(a - c) == 1
    )
    assert expected == 8
    assert (g.n, g.m) == (6, expected)


def test_lex_matches_networkx():
    g = fixture_graph_X()
    ours = lexicographic_product(g, complete_graph(3))
    ref = nx.lexicographic_product(nx.Graph(g.edges()), nx.complete_graph(3))
    relabel = {(a, b): a * 3 + b for a, b in ref.nodes}
    assert sorted(tuple(sorted((relabel[x], relabel[y]))) for x, y in ref.edges) == ours.edges()


def test_lex_layers_are_twins():
    for g in [path_graph(3), cycle_graph(5), fixture_graph_X()]:
        for h, kind in [(complete_graph(3), "true"), (EmptyFactor(3), "false")]:
            prod = lexicographic_product(g, h)
            owner = twin_classes(prod).class_of()
            for a in range(g.n):
                assert len({owner[a * 3 + b] for b in range(3)}) == 1


@pytest.mark.parametrize(
    "f, value",
    [
        (fam("complete", 5), 4),
        (fam("cycle", 7), 3),
        (fam("complete_multipartite", 2, 3, 4), 6),
        (fam("grid", 8, 5), 3),
        (fam("cycle", 4), 3),
        (fam("cycle", 5), 4),
        (fam("complete_multipartite", 3, 3, 3), 8),
        (fam("petersen"), 9),
        (fam("path", 6), 1),
    ],
)
def test_closed_forms(f, value):
    assert closed_form_dimension(f) == value


def test_closed_form_absent_for_large_hypercube():
    assert closed_form_dimension(fam("hypercube", 3)) is None


def test_closed_form_out_of_range():
    with pytest.raises(OutOfTheoremRange):
        closed_form_dimension(fam("complete_multipartite", 1, 3))
    with pytest.raises(OutOfTheoremRange):
        closed_form_dimension(fam("complete_multipartite", 2, 2, 3))


def _multipartite_params(total):
    out = []
    for k in range(2, total + 1):
        for r in range(1, total // k + 1):
            out.append((r,) * k)
    def distinct(prefix, lo, left):
        if len(prefix) >= 2:
            out.append(tuple(prefix))
        for r in range(lo, left + 1):
            distinct(prefix + [r], r + 1, left - r)
    distinct([], 2, total)
    return out


def test_closed_forms_agree_with_search():
    cases = [fam("path", n) for n in range(2, 9)]
    cases += [fam("cycle", n) for n in range(3, 9)]
    cases += [fam("complete", n) for n in range(2, 8)]
    cases += [fam("complete_multipartite", *p) for p in _multipartite_params(8)]
    cases += [fam("grid", s, t) for s in range(2, 9) for t in range(2, s + 1) if s * t <= 16]
    for f in cases:
        assert outer_multiset_dimension(generate(f), use_fast_paths=False).dimension == closed_form_dimension(f), f


def test_grid_certificates_examples():
    assert grid_certificate(8, 5) == (0, 5, 35)
    assert grid_certificate(3, 2) == (0, 4, 5)
    assert len(grid_certificate(2, 2)) == 3
    for s, t in [(8, 5), (3, 2), (2, 2), (3, 3)]:
        assert is_outer_multiset_resolving(generate(fam("grid", s, t)).distances, grid_certificate(s, t))


def test_grid_certificate_params():
    with pytest.raises(InvalidParams):
        grid_certificate(3, 4)
    with pytest.raises(InvalidParams):
        grid_certificate(1, 1)


def test_lex_bound_p2_k2():
    res = lex_bound_and_equality(path_graph(2), complete_graph(2))
    assert (res.lower_bound, res.equality, res.certificate) == (2, False, None)
    assert outer_multiset_dimension(complete_graph(4)).dimension == 3


def test_lex_bound_fixture_x():
    g = fixture_graph_X()
    res = lex_bound_and_equality(g, complete_graph(2))
    assert (res.lower_bound, res.equality) == (8, True)
    prod = lexicographic_product(g, complete_graph(2))
    assert len(res.certificate) == 8
    assert is_outer_multiset_resolving(prod.distances, res.certificate)


def test_lex_bound_p3_empty2():
    res = lex_bound_and_equality(path_graph(3), EmptyFactor(2))
    assert (res.lower_bound, res.equality) == (3, False)


def test_lex_bound_rejects_other_factors():
    with pytest.raises(InvalidParams):
        lex_bound_and_equality(path_graph(3), path_graph(3))


def test_lex_bound_theorem_small():
    factors = [complete_graph(2), complete_graph(3), EmptyFactor(2)]
    for n in range(2, 5):
        for g in enumerate_connected_labeled(n):
            for h in factors:
                res = lex_bound_and_equality(g, h)
                dim = outer_multiset_dimension(lexicographic_product(g, h)).dimension
                assert dim >= res.lower_bound
                assert (dim == res.lower_bound) == res.equality == is_multiset_distance_irregular(g.distances)
                assert (res.certificate is not None) == res.equality
