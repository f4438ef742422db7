"""Graph value types and the standard constructions used throughout homlab.

Two kinds of graph are kept apart on purpose:

``SimpleGraph``
    the source graph G: simple, loopless, vertices ``0..n-1``.
``HGraph``
    the target graph H: a symmetric 0/1 matrix whose diagonal marks loops.

Degrees of ``HGraph`` vertices follow the loop convention: a loop adds exactly
one to the degree, so ``degree(v) == |N(v)|`` with ``v in N(v)`` when looped.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Raised for structurally invalid graph input."""


@dataclass(frozen=True)
class SimpleGraph:
    n: int
    edges: frozenset[tuple[int, int]]
    adjacency: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        norm: set[tuple[int, int]] = set()
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for e in edges:
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {tuple(e)} out of range for n={n}")
            if u == v:
                raise GraphError(f"loop at vertex {u} not allowed in a simple graph")
            key = (u, v) if u < v else (v, u)
            if key in norm:
                raise GraphError(f"duplicate edge {key}")
            norm.add(key)
            nbrs[u].append(v)
            nbrs[v].append(u)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(norm))
        object.__setattr__(self, "adjacency", tuple(tuple(sorted(a)) for a in nbrs))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edges

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def masks(self) -> list[int]:
        """Neighbourhood of each vertex as an int bitmask."""
        out = [0] * self.n
        for u, v in self.edges:
            out[u] |= 1 << v
            out[v] |= 1 << u
        return out

    def relabel(self, perm: Sequence[int]) -> "SimpleGraph":
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        return SimpleGraph(self.n, ((perm[u], perm[v]) for u, v in self.edges))

    def remove_edge(self, u: int, v: int) -> "SimpleGraph":
        key = (u, v) if u < v else (v, u)
        if key not in self.edges:
            raise GraphError(f"no edge {key}")
        return SimpleGraph(self.n, self.edges - {key})

    def remove_vertices(self, drop: Iterable[int]) -> "SimpleGraph":
        """Delete vertices and renumber the survivors in increasing order."""
        gone = set(drop)
        keep = [v for v in range(self.n) if v not in gone]
        index = {v: i for i, v in enumerate(keep)}
        return SimpleGraph(
            len(keep),
            ((index[u], index[v]) for u, v in self.edges if u in index and v in index),
        )

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], []
            while stack:
                u = stack.pop()
                comp.append(u)
                for w in self.adjacency[u]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def induced(self, vertices: Sequence[int]) -> "SimpleGraph":
        """Induced subgraph, vertex ``vertices[i]`` becoming ``i``."""
        index = {v: i for i, v in enumerate(vertices)}
        return SimpleGraph(
            len(vertices),
            ((index[u], index[v]) for u, v in self.edges if u in index and v in index),
        )

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.components()) == 1

    def is_forest(self) -> bool:
        return self.m == self.n - len(self.components())

    def is_tree(self) -> bool:
        return self.n > 0 and self.m == self.n - 1 and self.is_connected()

    def is_bipartite(self) -> bool:
        side = [-1] * self.n
        for s in range(self.n):
            if side[s] >= 0:
                continue
            side[s] = 0
            stack = [s]
            while stack:
                u = stack.pop()
                for w in self.adjacency[u]:
                    if side[w] < 0:
                        side[w] = 1 - side[u]
                        stack.append(w)
                    elif side[w] == side[u]:
                        return False
        return True

    def leaves(self) -> list[int]:
        return [v for v in range(self.n) if len(self.adjacency[v]) == 1]


@dataclass(frozen=True)
class HGraph:
    q: int
    matrix: tuple[tuple[int, ...], ...]
    nbr_masks: tuple[int, ...] = field(repr=False, compare=False)

    def __init__(self, matrix: Sequence[Sequence[int]]):
        q = len(matrix)
        rows = []
        for i, row in enumerate(matrix):
            if len(row) != q:
                raise GraphError(f"row {i} has length {len(row)}, expected {q}")
            r = tuple(int(x) for x in row)
            if any(x not in (0, 1) for x in r):
                raise GraphError(f"row {i} has entries outside {{0,1}}")
            rows.append(r)
        for i in range(q):
            for j in range(i):
                if rows[i][j] != rows[j][i]:
                    raise GraphError(f"matrix not symmetric at ({i},{j})")
        masks = tuple(sum(1 << j for j in range(q) if rows[i][j]) for i in range(q))
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "matrix", tuple(rows))
        object.__setattr__(self, "nbr_masks", masks)

    @classmethod
    def from_edges(cls, q: int, edges: Iterable[Sequence[int]] = (), loops: Iterable[int] = ()) -> "HGraph":
        mat = [[0] * q for _ in range(q)]
        for u, v in edges:
            mat[u][v] = mat[v][u] = 1
        for v in loops:
            mat[v][v] = 1
        return cls(mat)

    @classmethod
    def from_simple(cls, g: SimpleGraph, looped: bool = False) -> "HGraph":
        return cls.from_edges(g.n, g.edges, range(g.n) if looped else ())

    def adjacent(self, i: int, j: int) -> bool:
        return bool(self.matrix[i][j])

    def has_loop(self, i: int) -> bool:
        return bool(self.matrix[i][i])

    def neighbors(self, i: int) -> list[int]:
        return [j for j in range(self.q) if self.matrix[i][j]]

    def degree(self, i: int) -> int:
        return self.nbr_masks[i].bit_count()

    def degrees(self) -> list[int]:
        return [m.bit_count() for m in self.nbr_masks]

    @property
    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def is_regular(self) -> bool:
        return len(set(self.degrees())) <= 1

    @property
    def loops(self) -> list[int]:
        return [i for i in range(self.q) if self.matrix[i][i]]

    def is_connected(self) -> bool:
        if self.q == 0:
            return False
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            for i in range(self.q):
                if frontier >> i & 1:
                    nxt |= self.nbr_masks[i]
            frontier = nxt & ~seen
            seen |= nxt
        return seen == (1 << self.q) - 1

    def is_loopless_bipartite(self) -> bool:
        if self.loops:
            return False
        side = [-1] * self.q
        for s in range(self.q):
            if side[s] >= 0:
                continue
            side[s] = 0
            stack = [s]
            while stack:
                u = stack.pop()
                for w in self.neighbors(u):
                    if side[w] < 0:
                        side[w] = 1 - side[u]
                        stack.append(w)
                    elif side[w] == side[u]:
                        return False
        return True

    def relabel(self, perm: Sequence[int]) -> "HGraph":
        mat = [[0] * self.q for _ in range(self.q)]
        for i in range(self.q):
            for j in range(self.q):
                mat[perm[i]][perm[j]] = self.matrix[i][j]
        return HGraph(mat)


# ---------------------------------------------------------------------------
# constructions

def empty_hgraph() -> HGraph:
    return HGraph([])


def join(h1: HGraph, h2: HGraph) -> HGraph:
    """Disjoint union of ``h1`` and ``h2`` plus every cross edge.

    ``h1`` keeps indices ``0..q1-1``; ``h2`` is shifted by ``q1``.
    """
    q1, q = h1.q, h1.q + h2.q
    mat = [[1] * q for _ in range(q)]
    for i in range(q1):
        for j in range(q1):
            mat[i][j] = h1.matrix[i][j]
    for i in range(h2.q):
        for j in range(h2.q):
            mat[q1 + i][q1 + j] = h2.matrix[i][j]
    return HGraph(mat)


def disjoint_union(h1: HGraph, h2: HGraph) -> HGraph:
    q1, q = h1.q, h1.q + h2.q
    mat = [[0] * q for _ in range(q)]
    for i in range(q1):
        mat[i][:q1] = h1.matrix[i]
    for i in range(h2.q):
        mat[q1 + i][q1:] = h2.matrix[i]
    return HGraph(mat)


def disjoint_union_simple(g1: SimpleGraph, g2: SimpleGraph) -> SimpleGraph:
    return SimpleGraph(
        g1.n + g2.n,
        list(g1.edges) + [(u + g1.n, v + g1.n) for u, v in g2.edges],
    )


def path(n: int) -> SimpleGraph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return SimpleGraph(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> SimpleGraph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return SimpleGraph(n, ((i, (i + 1) % n) for i in range(n)))


def star(n: int) -> SimpleGraph:
    """K_{1,n-1}: vertex 0 is the centre."""
    if n < 1:
        raise GraphError("star needs n >= 1")
    return SimpleGraph(n, ((0, i) for i in range(1, n)))


def complete(n: int) -> SimpleGraph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return SimpleGraph(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def complete_bipartite(a: int, b: int) -> SimpleGraph:
    """K_{a,b}: part one is ``0..a-1``."""
    if a < 0 or b < 0 or a + b < 1:
        raise GraphError("complete_bipartite needs a, b >= 0 and a + b >= 1")
    return SimpleGraph(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def looped_complete(q: int) -> HGraph:
    """K_q with a loop on every vertex."""
    if q < 0:
        raise GraphError("looped_complete needs q >= 0")
    return HGraph([[1] * q for _ in range(q)])


def widom_rowlinson(k: int) -> HGraph:
    """Fully looped star K_{1,k}; vertex 0 is the dominating centre."""
    if k < 0:
        raise GraphError("widom_rowlinson needs k >= 0")
    return join(looped_complete(1), HGraph.from_edges(k, loops=range(k)))


def hard_core() -> HGraph:
    """H_ind: vertex 0 looped, vertex 1 unlooped, joined by an edge."""
    return HGraph([[1, 1], [1, 0]])


def h_circ_ell(base: HGraph, ell: int) -> HGraph:
    """Join a regular ``base`` with ``ell`` looped dominating vertices."""
    if ell < 1:
        raise GraphError("ell must be >= 1")
    if not base.is_regular():
        raise GraphError(f"base graph is not regular (degrees {base.degrees()})")
    return join(base, looped_complete(ell))


def petersen() -> HGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return HGraph.from_edges(10, outer + spokes + inner)


_SIMPLE_KINDS = {
    "path": path,
    "cycle": cycle,
    "star": star,
    "complete": complete,
    "complete_bipartite": complete_bipartite,
}


def make_family(kind: str, *params, as_target: bool = False):
    """Build a named graph.

    ``path``, ``cycle``, ``star``, ``complete`` and ``complete_bipartite``
    return a :class:`SimpleGraph`, or a loopless :class:`HGraph` when
    ``as_target`` is set.  ``looped_complete``, ``widom_rowlinson`` and
    ``h_circ_ell`` (params: base HGraph, ell) always return an :class:`HGraph`.
    """
    if kind in _SIMPLE_KINDS:
        g = _SIMPLE_KINDS[kind](*params)
        return HGraph.from_simple(g) if as_target else g
    if kind == "looped_complete":
        return looped_complete(*params)
    if kind == "widom_rowlinson":
        return widom_rowlinson(*params)
    if kind == "h_circ_ell":
        return h_circ_ell(*params)
    raise GraphError(f"unknown family kind {kind!r}")
