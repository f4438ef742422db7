import random
from itertools import combinations, permutations

import pytest
from hypothesis import given, settings, strategies as st

from homlab.canon import CANON_LIMIT, CanonLimitError, canonical_certificate, canonical_form, certificate, tree_code
from homlab.graphs import HGraph, SimpleGraph, complete, complete_bipartite, cycle, path, petersen, star

from conftest import random_forest, random_graph


def brute_key(g: SimpleGraph):
    """Smallest relabelled edge set over all n! permutations."""
    best = None
    for p in permutations(range(g.n)):
        key = tuple(sorted(tuple(sorted((p[u], p[v]))) for u, v in g.edges))
        if best is None or key < best:
            best = key
    return best


def shuffled(g, rng):
    perm = list(range(g.n))
    rng.shuffle(perm)
    return g.relabel(perm)


def test_p4_invariant_under_all_relabelings():
    p4 = path(4)
    c = canonical_certificate(p4)
    for perm in permutations(range(4)):
        assert canonical_certificate(p4.relabel(perm)) == c


def test_star_differs_from_path():
    assert canonical_certificate(star(4)) != canonical_certificate(path(4))


def test_eleven_classes_on_four_vertices():
    pairs = list(combinations(range(4), 2))
    graphs = [SimpleGraph(4, [pairs[i] for i in range(6) if m >> i & 1]) for m in range(64)]
    certs = {canonical_certificate(g) for g in graphs}
    assert len(certs) == 11
    # the partition must agree with the brute-force one, not just its size
    by_brute = {}
    for g in graphs:
        by_brute.setdefault(brute_key(g), set()).add(canonical_certificate(g))
    assert len(by_brute) == 11
    assert all(len(s) == 1 for s in by_brute.values())


def test_partition_matches_brute_force_on_five_vertices():
    rng = random.Random(3)
    graphs = [random_graph(rng, 5, rng.random()) for _ in range(150)]
    cert_classes = {}
    brute_classes = {}
    for idx, g in enumerate(graphs):
        cert_classes.setdefault(canonical_certificate(g), set()).add(idx)
        brute_classes.setdefault(brute_key(g), set()).add(idx)
    assert sorted(map(sorted, cert_classes.values())) == sorted(map(sorted, brute_classes.values()))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32), st.integers(1, 11), st.floats(0, 1))
def test_certificate_invariant_under_relabeling(seed, n, p):
    rng = random.Random(seed)
    g = random_graph(rng, n, p)
    assert canonical_certificate(shuffled(g, rng)) == canonical_certificate(g)
    f = canonical_form(g)
    assert canonical_certificate(f) == canonical_certificate(g)


def test_tree_certificates():
    rng = random.Random(11)
    for _ in range(50):
        t = random_forest(rng, 12)
        if not t.is_tree():
            continue
        assert canonical_certificate(shuffled(t, rng)) == canonical_certificate(t)
        assert tree_code(shuffled(t, rng)) == tree_code(t)


def test_symmetric_graphs_at_limit_sizes():
    rng = random.Random(5)
    matching = SimpleGraph(16, [(2 * i, 2 * i + 1) for i in range(8)])
    cube_edges = [(v, v ^ (1 << b)) for v in range(16) for b in range(4) if v < v ^ (1 << b)]
    for g in [SimpleGraph(16), complete(16), matching, SimpleGraph(16, cube_edges), complete_bipartite(8, 8), cycle(16)]:
        assert canonical_certificate(shuffled(g, rng)) == canonical_certificate(g)
    assert canonical_certificate(SimpleGraph(16, cube_edges)) != canonical_certificate(
        SimpleGraph(16, [(2 * i, 2 * i + 1) for i in range(8)] + [(i, (i + 2) % 16) for i in range(16)])
    )


def test_limit_enforced():
    with pytest.raises(CanonLimitError):
        canonical_certificate(cycle(CANON_LIMIT + 1))
    assert canonical_certificate(path(CANON_LIMIT + 5))  # trees are unlimited


def test_hgraph_certificate_respects_loops():
    a = HGraph([[1, 1], [1, 0]])
    b = HGraph([[0, 1], [1, 1]])
    c = HGraph([[0, 1], [1, 0]])
    assert certificate(a) == certificate(b)
    assert certificate(a) != certificate(c)
    h = petersen()
    rng = random.Random(2)
    perm = list(range(10))
    rng.shuffle(perm)
    assert certificate(h.relabel(perm)) == certificate(h)
