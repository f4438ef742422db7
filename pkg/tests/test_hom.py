import random
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from homlab import kernels
from homlab.graphs import (
    HGraph,
    SimpleGraph,
    complete,
    complete_bipartite,
    cycle,
    disjoint_union,
    hard_core,
    looped_complete,
    path,
    star,
)
from homlab.hom import (
    closed_form_cycle_kq,
    closed_form_k2,
    closed_form_star,
    count_hom,
    count_hom_cycle,
    count_hom_path,
    count_hom_restricted,
    count_path_endpoints,
    leaf_recurrence,
)

from conftest import random_forest, random_graph

K3 = HGraph.from_simple(complete(3))
P3H = HGraph.from_simple(path(3))
HIND = hard_core()
SMALL_POOL = ["K1", "K2", "K3", "P3", "Hind", "HWR2", "K2o", "K22", "C5"]


def brute(g, h, pins=None):
    """Independent oracle: test every map V(G) -> V(H)."""
    pins = pins or {}
    total = 0
    for f in product(range(h.q), repeat=g.n):
        if all(f[x] == i for x, i in pins.items()) and all(h.matrix[f[u]][f[v]] for u, v in g.edges):
            total += 1
    return total


def test_brute_force_frozen_values():
    # frozen from the oracle above
    assert brute(path(3), HIND) == 5
    assert brute(path(3), HIND, {1: 1}) == 1
    assert brute(star(5), K3) == 48
    assert brute(complete_bipartite(2, 4), HIND) == 19
    assert brute(cycle(5), K3) == 30


@pytest.mark.parametrize("backend", ["python", kernels.BACKEND])
def test_count_hom_examples(backend):
    assert count_hom(cycle(5), K3, backend=backend) == 30
    assert count_hom(star(5), looped_complete(2), backend=backend) == 32
    assert count_hom(path(3), HIND, strategy="backtrack", backend=backend) == 5
    assert count_hom(path(3), HIND) == 5


def test_empty_graph_counts_one():
    assert count_hom(SimpleGraph(0), K3) == 1
    assert count_hom(SimpleGraph(3), K3) == 27


def test_restricted_examples():
    assert count_hom_restricted(path(2), K3, {0: 0}) == 2
    assert count_hom_restricted(path(3), HIND, {1: 1}) == 1
    assert count_hom_restricted(cycle(5), K3, {0: 0, 1: 1, 2: 0, 3: 1, 4: 2}) == 1
    assert count_hom_restricted(path(2), K3, {0: 0, 1: 0}) == 0


def test_path_examples():
    assert count_hom_path(2, K3) == 6
    assert count_hom_path(7, P3H) == 24
    for h in (K3, P3H, HIND):
        assert count_hom_path(1, h) == h.q


def test_cycle_examples():
    assert count_hom_cycle(5, K3) == 30
    assert count_hom_cycle(4, K3) == 18
    assert count_hom_cycle(3, HIND) == 4


def test_endpoint_examples():
    assert count_path_endpoints(2, K3, 0, 1) == 1
    assert count_path_endpoints(4, K3, 0, 0) == 2
    assert count_path_endpoints(3, K3, 0, 1) == 1


def test_endpoint_sum_is_path_count(pool):
    for name in SMALL_POOL:
        h = pool[name]
        for k in range(2, 8):
            assert sum(count_path_endpoints(k, h, i, j) for i in range(h.q) for j in range(h.q)) == count_hom_path(k, h)


def test_star_closed_form():
    assert closed_form_star(5, K3) == 48
    assert closed_form_star(2, K3) == 6
    for h in (K3, looped_complete(3), HGraph.from_simple(cycle(5))):
        d = h.max_degree
        assert all(closed_form_star(n, h) == h.q * d ** (n - 1) for n in range(2, 9))


def test_k2_closed_form():
    assert closed_form_k2(5, K3) == 30
    assert closed_form_k2(4, looped_complete(2)) == 16
    assert closed_form_k2(6, HIND) == 19


def test_cycle_kq_closed_form():
    assert closed_form_cycle_kq(5, 3) == 30
    assert closed_form_cycle_kq(4, 3) == 18
    assert closed_form_cycle_kq(3, 2) == 0


def test_walk_counts_match_brute(pool):
    for name in SMALL_POOL:
        h = pool[name]
        for k in range(1, 6):
            assert count_hom_path(k, h) == brute(path(k), h)
        for k in range(3, 6):
            assert count_hom_cycle(k, h) == brute(cycle(k), h)
        for n in range(2, 6):
            assert closed_form_star(n, h) == brute(star(n), h)
        for n in range(3, 6):
            assert closed_form_k2(n, h) == brute(complete_bipartite(2, n - 2), h)


def test_strategies_agree_with_brute(pool):
    rng = random.Random(1)
    for _ in range(60):
        n = rng.randrange(1, 6)
        g = random_graph(rng, n, rng.random())
        for name in SMALL_POOL:
            h = pool[name]
            expected = brute(g, h)
            assert count_hom(g, h, strategy="backtrack", backend="python") == expected
            assert count_hom(g, h, strategy="backtrack") == expected
            assert count_hom(g, h) == expected
            if g.is_forest():
                assert count_hom(g, h, strategy="dp") == expected


def test_restricted_agrees_with_brute(pool):
    rng = random.Random(2)
    for _ in range(40):
        g = random_graph(rng, rng.randrange(2, 6), 0.5)
        h = pool[rng.choice(SMALL_POOL)]
        x = rng.randrange(g.n)
        i = rng.randrange(h.q)
        assert count_hom_restricted(g, h, {x: i}) == brute(g, h, {x: i})


def test_dp_rejects_cycles():
    with pytest.raises(ValueError):
        count_hom(cycle(4), K3, strategy="dp")


def test_overflow_falls_back_to_exact_python():
    big = HGraph.from_simple(complete(50))
    g = SimpleGraph(20, [(0, i) for i in range(1, 20)] + [(1, 2)])
    # centre and the triangle vertices are coloured by backtracking, the rest multiply
    expected = 50 * 49 * 48 * 49 ** 17
    assert expected > 2 ** 64
    assert count_hom(g, big, strategy="backtrack") == expected
    assert count_hom(g, big, strategy="backtrack", backend="python") == expected


@pytest.mark.skipif(kernels.BACKEND != "cython", reason="compiled kernel not built")
def test_compiled_and_python_kernels_agree(pool):
    rng = random.Random(4)
    for _ in range(200):
        g = random_graph(rng, rng.randrange(1, 9), rng.random())
        h = pool[rng.choice(list(pool))]
        assert count_hom(g, h, strategy="backtrack", backend="cython") == count_hom(
            g, h, strategy="backtrack", backend="python"
        )


# -- invariants --------------------------------------------------------------

@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32))
def test_edge_deletion_monotone(seed):
    rng = random.Random(seed)
    g = random_graph(rng, rng.randrange(2, 8), 0.6)
    for name in ("K3", "Hind", "HWR2", "P3", "K22"):
        from homlab.extremal import POOL

        h = POOL[name]
        c = count_hom(g, h)
        for u, v in g.edges:
            assert count_hom(g.remove_edge(u, v), h) >= c


def test_disjoint_union_additivity(pool):
    rng = random.Random(5)
    pairs = [("K3", "Hind"), ("P3", "K2o"), ("C5", "HWR2"), ("K22", "K3")]
    checked = 0
    while checked < 30:
        g = random_graph(rng, rng.randrange(1, 7), 0.6)
        if not g.is_connected():
            continue
        checked += 1
        for a, b in pairs:
            u = disjoint_union(pool[a], pool[b])
            assert count_hom(g, u) == count_hom(g, pool[a]) + count_hom(g, pool[b])


def test_complete_looped_target_gives_delta_power():
    rng = random.Random(6)
    for _ in range(30):
        g = random_graph(rng, rng.randrange(0, 8), rng.random())
        for d in range(1, 5):
            assert count_hom(g, looped_complete(d)) == d ** g.n


def test_complete_bipartite_target():
    rng = random.Random(7)
    checked = 0
    while checked < 40:
        g = random_graph(rng, rng.randrange(1, 8), 0.5)
        if not g.is_connected():
            continue
        checked += 1
        for d in range(1, 4):
            h = HGraph.from_simple(complete_bipartite(d, d))
            expected = 2 * d ** g.n if g.is_bipartite() else 0
            assert count_hom(g, h) == expected


def test_pinning_decomposition(pool):
    rng = random.Random(8)
    for _ in range(30):
        g = random_graph(rng, rng.randrange(1, 7), 0.5)
        for name in ("K3", "Hind", "HWR3", "Petersen"):
            h = pool[name]
            x = rng.randrange(g.n)
            assert sum(count_hom_restricted(g, h, {x: i}) for i in range(h.q)) == count_hom(g, h)


def test_leaf_recurrence(pool):
    rng = random.Random(9)
    from homlab.graphs import h_circ_ell

    bases = ["K1", "K2", "K3", "C5", "K2o"]
    done = 0
    while done < 60:
        f = random_forest(rng, rng.randrange(2, 11))
        leaves = f.leaves()
        if not leaves:
            continue
        done += 1
        x = rng.choice(leaves)
        for name in bases:
            for ell in (1, 2, 3):
                assert count_hom(f, h_circ_ell(pool[name], ell)) == leaf_recurrence(f, x, pool[name], ell)


def test_leaf_recurrence_without_ell_factor_only_holds_for_one_dominating_vertex(pool):
    from homlab.graphs import h_circ_ell

    f, x, y = path(4), 0, 1
    base = pool["K1"]
    for ell, identity_holds in ((1, True), (2, False)):
        h = h_circ_ell(base, ell)
        printed = (base.q - 0) * count_hom(f.remove_vertices([x, y]), h) + ell * count_hom(f.remove_vertices([x]), h)
        assert (count_hom(f, h) == printed) is identity_holds
    # P_4 into K1 joined with two looped vertices: 60 colourings, printed form gives 52
    assert count_hom(f, h_circ_ell(base, 2)) == 60


def test_hoffman_london(pool):
    for h in pool.values():
        for n in range(2, 13):
            assert count_hom_path(n, h) <= closed_form_star(n, h)
