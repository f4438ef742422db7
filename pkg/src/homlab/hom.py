"""Exact homomorphism counts hom(G, H).

All counts are Python ints.  ``count_hom`` splits G into components and
multiplies; each component goes to the rooted tree DP when it is a tree and
to the backtracking kernel otherwise.  The walk-based counters (paths,
cycles, pinned path endpoints) iterate exact matrix-vector products.
"""

from __future__ import annotations

from itertools import product
from typing import Mapping

from . import kernels
from .graphs import HGraph, SimpleGraph, h_circ_ell

STRATEGIES = ("auto", "backtrack", "dp", "brute")


def _domains(g: SimpleGraph, h: HGraph, assignment: Mapping[int, int] | None) -> list[int]:
    full = (1 << h.q) - 1
    doms = [full] * g.n
    for x, i in (assignment or {}).items():
        if not 0 <= x < g.n:
            raise ValueError(f"pinned vertex {x} not in G (n={g.n})")
        if not 0 <= i < h.q:
            raise ValueError(f"pinned colour {i} not in H (q={h.q})")
        doms[x] = 1 << i
    return doms


def backtrack_order(g: SimpleGraph, comp: list[int]) -> list[int]:
    """Reverse degeneracy order: minimum-degree vertices are coloured last."""
    live = set(comp)
    deg = {v: len(g.adjacency[v]) for v in comp}
    removed = []
    while live:
        v = min(live, key=lambda x: (deg[x], x))
        live.remove(v)
        removed.append(v)
        for w in g.adjacency[v]:
            if w in live:
                deg[w] -= 1
    return removed[::-1]


def _count_component_backtrack(g, comp, h, doms, backend=None) -> int:
    order = backtrack_order(g, comp)
    pos = {v: p for p, v in enumerate(order)}
    m = len(order)
    later = [sorted(pos[w] for w in g.adjacency[v] if pos[w] > p) for p, v in enumerate(order)]
    tail = m
    # shrink while the suffix stays independent
    while tail > 0 and not any(f >= tail for f in later[tail - 1]):
        tail -= 1
    return kernels.count_backtrack(list(h.nbr_masks), [doms[v] for v in order], later, tail, backend)


def _count_component_dp(g, comp, h, doms) -> int:
    root = comp[0]
    parent = {root: -1}
    order = [root]
    for v in order:
        for w in g.adjacency[v]:
            if w != parent[v]:
                if w in parent:
                    raise ValueError("tree DP applied to a component with a cycle")
                parent[w] = v
                order.append(w)
    nbrs = [h.neighbors(i) for i in range(h.q)]
    vec: dict[int, list[int]] = {}
    for v in reversed(order):
        d = doms[v]
        cur = [1 if d >> i & 1 else 0 for i in range(h.q)]
        for w in g.adjacency[v]:
            if w == parent[v]:
                continue
            cv = vec.pop(w)
            for i in range(h.q):
                if cur[i]:
                    cur[i] *= sum(cv[j] for j in nbrs[i])
        vec[v] = cur
    return sum(vec[root])


def count_hom_brute(g: SimpleGraph, h: HGraph, assignment: Mapping[int, int] | None = None) -> int:
    """Enumerate all q^n maps; independent oracle for small inputs."""
    pins = dict(assignment or {})
    edges = g.sorted_edges()
    total = 0
    for f in product(range(h.q), repeat=g.n):
        if any(f[x] != i for x, i in pins.items()):
            continue
        if all(h.matrix[f[u]][f[v]] for u, v in edges):
            total += 1
    return total


def count_hom(g: SimpleGraph, h: HGraph, strategy: str = "auto", backend: str | None = None) -> int:
    """Number of homomorphisms G -> H; the empty graph has exactly one."""
    return count_hom_restricted(g, h, None, strategy=strategy, backend=backend)


def count_hom_restricted(
    g: SimpleGraph,
    h: HGraph,
    assignment: Mapping[int, int] | None,
    strategy: str = "auto",
    backend: str | None = None,
) -> int:
    """Homomorphisms G -> H extending the partial map ``assignment``."""
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}")
    doms = _domains(g, h, assignment)
    if strategy == "brute":
        return count_hom_brute(g, h, assignment)
    total = 1
    for comp in g.components():
        sub_tree = len(comp) - 1 == sum(len(g.adjacency[v]) for v in comp) // 2
        if strategy == "dp" or (strategy == "auto" and sub_tree):
            if not sub_tree:
                raise ValueError("dp strategy needs a forest")
            c = _count_component_dp(g, comp, h, doms)
        else:
            c = _count_component_backtrack(g, comp, h, doms, backend)
        if c == 0:
            return 0
        total *= c
    return total


# ---------------------------------------------------------------------------
# walk counts

def _step(h: HGraph, vec: list[int], nbrs: list[list[int]]) -> list[int]:
    return [sum(vec[j] for j in nbrs[i]) for i in range(h.q)]


def count_hom_path(k: int, h: HGraph) -> int:
    """hom(P_k, H) for the path on ``k`` vertices: all entries of A^(k-1) summed."""
    if k < 1:
        raise ValueError("path needs k >= 1 vertices")
    nbrs = [h.neighbors(i) for i in range(h.q)]
    vec = [1] * h.q
    for _ in range(k - 1):
        vec = _step(h, vec, nbrs)
    return sum(vec)


def count_path_endpoints(k: int, h: HGraph, i: int, j: int) -> int:
    """Colourings of P_k with first vertex at ``i`` and last at ``j``: (A^(k-1))_ij."""
    if k < 2:
        raise ValueError("endpoint-pinned path needs k >= 2")
    if not (0 <= i < h.q and 0 <= j < h.q):
        raise ValueError("endpoint colour out of range")
    return path_endpoint_matrix(k, h)[i][j]


def path_endpoint_matrix(k: int, h: HGraph) -> list[list[int]]:
    """The full matrix A^(k-1), one row at a time."""
    nbrs = [h.neighbors(i) for i in range(h.q)]
    rows = []
    for i in range(h.q):
        vec = [0] * h.q
        vec[i] = 1
        for _ in range(k - 1):
            vec = _step(h, vec, nbrs)
        rows.append(vec)
    return rows


def count_hom_cycle(n: int, h: HGraph) -> int:
    """hom(C_n, H) = trace(A^n)."""
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    nbrs = [h.neighbors(i) for i in range(h.q)]
    total = 0
    for i in range(h.q):
        vec = [0] * h.q
        vec[i] = 1
        for _ in range(n):
            vec = _step(h, vec, nbrs)
        total += vec[i]
    return total


# ---------------------------------------------------------------------------
# closed forms

def closed_form_star(n: int, h: HGraph) -> int:
    """hom(K_{1,n-1}, H) = sum of d(i)^(n-1)."""
    if n < 2:
        raise ValueError("star closed form needs n >= 2")
    return sum(d ** (n - 1) for d in h.degrees())


def common_neighbourhoods(h: HGraph) -> list[list[int]]:
    m = h.nbr_masks
    return [[(m[i] & m[j]).bit_count() for j in range(h.q)] for i in range(h.q)]


def closed_form_k2(n: int, h: HGraph) -> int:
    """hom(K_{2,n-2}, H) = sum over ordered pairs of |N(i) & N(j)|^(n-2)."""
    if n < 3:
        raise ValueError("K_{2,n-2} closed form needs n >= 3")
    return sum(c ** (n - 2) for row in common_neighbourhoods(h) for c in row)


def closed_form_cycle_kq(n: int, q: int) -> int:
    """Proper q-colourings of C_n: (q-1)^n + (-1)^n (q-1)."""
    if n < 3 or q < 2:
        raise ValueError("needs n >= 3 and q >= 2")
    return (q - 1) ** n + (-1) ** n * (q - 1)


def closed_form_k23_kq(q: int) -> int:
    """Proper q-colourings of K_{2,3}."""
    return q * (q - 1) ** 3 + q * (q - 1) * (q - 2) ** 3


def leaf_recurrence(forest: SimpleGraph, leaf: int, base: HGraph, ell: int) -> int:
    """Right-hand side of the leaf-removal identity for H = base joined with ell looped vertices.

    With ``y`` the neighbour of ``leaf``, q = |V(base)| and Delta the degree
    of the regular ``base``::

        hom(F, H) = ell (q - Delta) hom(F - x - y, H) + (Delta + ell) hom(F - x, H)

    Each of the ``ell`` dominating colours for ``y`` leaves ``F - x - y`` free,
    hence the factor ``ell`` on the first term.
    """
    if len(forest.adjacency[leaf]) != 1:
        raise ValueError(f"vertex {leaf} is not a leaf")
    h = h_circ_ell(base, ell)
    y = forest.adjacency[leaf][0]
    delta = base.max_degree
    return ell * (base.q - delta) * count_hom(forest.remove_vertices([leaf, y]), h) + (delta + ell) * count_hom(
        forest.remove_vertices([leaf]), h
    )
