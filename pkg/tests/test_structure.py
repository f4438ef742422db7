import networkx as nx
import pytest

from homlab.families import gen_graphs
from homlab.graphs import SimpleGraph, complete, complete_bipartite, cycle, path, star
from homlab.structure import (
    StructureError,
    check_ear_decomposition,
    check_normal_form,
    ear_decomposition,
    find_attached_path,
    is_2_connected,
    is_2_edge_connected,
    is_minimally_2_connected,
    is_minimally_2_connected_by_chords,
    normal_form_ears,
    open_ear_decomposition,
)

BOWTIE = SimpleGraph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
PRISM = SimpleGraph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])


def atlas():
    for g in nx.graph_atlas_g()[1:]:
        yield g, SimpleGraph(g.number_of_nodes(), g.edges())


def test_two_connected_examples():
    assert is_2_connected(cycle(5))
    assert not is_2_connected(path(4))
    assert not is_2_connected(BOWTIE)


def test_two_edge_connected_examples():
    assert is_2_edge_connected(BOWTIE)
    assert is_2_edge_connected(cycle(6))
    for n in range(1, 8):
        assert not is_2_edge_connected(path(n))
        assert not is_2_edge_connected(star(n))


def test_connectivity_matches_networkx_on_atlas():
    for ng, g in atlas():
        conn = nx.is_connected(ng)
        assert is_2_connected(g) == (g.n >= 3 and nx.is_biconnected(ng))
        assert is_2_edge_connected(g) == (g.n >= 2 and conn and not nx.has_bridges(ng))


def test_open_ear_examples():
    d = open_ear_decomposition(cycle(5))
    assert len(d.cycle) == 5 and d.ears == ()
    d = open_ear_decomposition(complete(4))
    assert check_ear_decomposition(complete(4), d, require_open=True) == []
    assert sum(len(p) for p in d.parts()) == 6
    d = open_ear_decomposition(complete_bipartite(2, 3))
    assert len(d.cycle) == 4 and [len(e) for e in d.ears] == [3]
    assert d.open_flags == (True,)


def test_closed_ear_examples():
    d = ear_decomposition(BOWTIE)
    assert len(d.cycle) == 3 and len(d.ears) == 1
    assert d.ears[0][0] == d.ears[0][-1] == 2
    assert check_ear_decomposition(BOWTIE, d) == []
    assert ear_decomposition(cycle(7)).ears == ()
    assert check_ear_decomposition(complete(4), ear_decomposition(complete(4))) == []


def test_decomposition_preconditions():
    with pytest.raises(StructureError):
        open_ear_decomposition(BOWTIE)
    with pytest.raises(StructureError):
        ear_decomposition(path(4))


def test_checker_catches_bad_decompositions():
    from homlab.structure import EarDecomposition

    g = complete_bipartite(2, 3)
    assert check_ear_decomposition(g, EarDecomposition((0, 2, 1, 3), ()))  # misses edges
    assert check_ear_decomposition(g, EarDecomposition((0, 2, 1, 3), ((0, 4, 1), (0, 4, 1))))
    assert check_ear_decomposition(BOWTIE, ear_decomposition(BOWTIE), require_open=True)


@pytest.mark.parametrize("n", range(3, 8))
def test_ear_decompositions_pass_checker(n):
    for g in gen_graphs("two_connected", n):
        assert check_ear_decomposition(g, open_ear_decomposition(g), require_open=True) == []
    for g in gen_graphs("two_edge_connected", n):
        assert check_ear_decomposition(g, ear_decomposition(g)) == []


def test_minimality_examples():
    for n in range(3, 9):
        assert is_minimally_2_connected(cycle(n))
    assert not is_minimally_2_connected(complete(4))
    assert is_minimally_2_connected(complete_bipartite(2, 3))
    with pytest.raises(StructureError):
        is_minimally_2_connected(path(4))


@pytest.mark.parametrize("n", range(3, 8))
def test_deletion_and_chord_minimality_agree(n):
    for g in gen_graphs("two_connected", n):
        assert is_minimally_2_connected(g) == is_minimally_2_connected_by_chords(g)


def test_normal_form_examples():
    nf = normal_form_ears(complete_bipartite(2, 3))
    assert nf.c == 0 and len(nf.short_ears) == 1
    nf = normal_form_ears(cycle(6))
    assert nf.c == 0 and nf.decomposition.ears == ()
    with pytest.raises(StructureError):
        normal_form_ears(PRISM)  # prism has a chorded cycle
    assert not is_minimally_2_connected(PRISM)


@pytest.mark.parametrize("n", range(3, 8))
def test_normal_form_on_minimal_graphs(n):
    for g in gen_graphs("minimally_two_connected", n):
        nf = normal_form_ears(g)
        assert check_normal_form(g, nf) == []
        for ear in nf.short_ears:
            assert g.degree(ear[1]) == 2


def test_normal_form_reorders_long_ears_first():
    # four internally disjoint 0-1 paths: two of length 3, two of length 2
    g = SimpleGraph(8, [(0, 2), (2, 3), (3, 1), (0, 4), (4, 5), (5, 1), (0, 6), (6, 1), (0, 7), (7, 1)])
    assert is_minimally_2_connected(g)
    nf = normal_form_ears(g)
    assert check_normal_form(g, nf) == []
    assert all(len(e) >= 4 for e in nf.long_ears)
    assert all(len(e) == 3 for e in nf.short_ears)
    assert len(nf.short_ears) >= 1


def test_find_attached_path():
    k23 = complete_bipartite(2, 3)
    p = find_attached_path(k23, (0, 2, 1, 3))
    assert p is not None and len(p) == 3 and p[1] == 4 and {p[0], p[2]} == {0, 1}
    assert find_attached_path(cycle(6), tuple(range(6))) is None
    # C_4 plus one chord only
    assert find_attached_path(SimpleGraph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]), (0, 1, 2, 3)) is None
    closed = find_attached_path(BOWTIE, (0, 1, 2))
    assert closed == (2, 3, 4, 2)
    with pytest.raises(StructureError):
        find_attached_path(k23, (0, 1, 2))
