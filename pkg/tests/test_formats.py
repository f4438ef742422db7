import random

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from homlab.formats import ParseError, parse_graph6, parse_hgraph, serialize_graph6, serialize_hgraph
from homlab.graphs import SimpleGraph, hard_core, looped_complete, complete, HGraph

from conftest import random_graph


def nx_edges(text: str):
    g = nx.from_graph6_bytes(text.encode())
    return g.number_of_nodes(), {tuple(sorted(e)) for e in g.edges()}


def test_d_question_brace_matches_independent_decoder():
    g = parse_graph6("D?{")
    n, edges = nx_edges("D?{")
    assert g.n == n == 5
    assert set(g.edges) == edges
    # bits 000000 1111|00: columns 1-3 empty, column 4 full
    assert set(g.edges) == {(0, 4), (1, 4), (2, 4), (3, 4)}


def test_single_vertex():
    g = parse_graph6("@")
    assert g.n == 1 and not g.edges
    assert serialize_graph6(SimpleGraph(1)) == "@"


def test_empty_and_header():
    assert parse_graph6("?").n == 0
    assert parse_graph6(">>graph6<<Bw").m == 3


def test_round_trip_random_strings():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randrange(0, 20)
        g = random_graph(rng, n, rng.random())
        s = serialize_graph6(g)
        assert parse_graph6(s) == g
        assert serialize_graph6(parse_graph6(s)) == s
        assert nx.to_graph6_bytes(_to_nx(g), header=False).strip().decode() == s


def _to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def test_long_form_size():
    g = SimpleGraph(70, [(0, 69), (3, 4)])
    s = serialize_graph6(g)
    assert s[0] == "~"
    assert parse_graph6(s) == g
    n, edges = nx_edges(s)
    assert n == 70 and edges == set(g.edges)


@given(st.integers(0, 12).flatmap(lambda n: st.tuples(st.just(n), st.sets(st.tuples(st.integers(0, max(n - 1, 0)), st.integers(0, max(n - 1, 0)))))))
def test_round_trip_property(data):
    n, pairs = data
    g = SimpleGraph(n, {tuple(sorted(p)) for p in pairs if p[0] != p[1]})
    assert parse_graph6(serialize_graph6(g)) == g


@pytest.mark.parametrize(
    "text, offset",
    [
        ("D?", 2),  # truncated bit field
        ("D?{{", 3),  # trailing data
        ("D?\x7f", 2),  # out-of-range character
        ("D? {", 2),  # space is below 63
        ("", 0),
        ("Bx", 1),  # nonzero padding bits
        ("~??", 3),  # truncated long-form size
    ],
)
def test_graph6_errors_name_offset(text, offset):
    with pytest.raises(ParseError) as info:
        parse_graph6(text)
    assert info.value.offset == offset
    assert f"byte {offset}" in str(info.value)


def test_parse_hgraph_examples():
    assert parse_hgraph("2\n11\n10") == hard_core()
    assert parse_hgraph("1\n1") == looped_complete(1)
    assert parse_hgraph("3\n011\n101\n110\n") == HGraph.from_simple(complete(3))


def test_hgraph_round_trip():
    h = hard_core()
    assert parse_hgraph(serialize_hgraph(h)) == h


@pytest.mark.parametrize(
    "text, row",
    [
        ("2\n11\n00", 1),  # asymmetric
        ("2\n110\n10", 0),  # non-square
        ("2\n1a\n10", 0),  # bad character
        ("3\n011\n101", 2),  # missing row
        ("x\n1", 0),
    ],
)
def test_hgraph_errors_name_row(text, row):
    with pytest.raises(ParseError) as info:
        parse_hgraph(text)
    assert info.value.offset == row
