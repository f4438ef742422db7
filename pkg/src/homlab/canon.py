"""Canonical labelling and isomorphism certificates.

General graphs go through colour refinement followed by individualisation
search; the labelling kept is the one whose relabelled adjacency rows are
lexicographically largest.  Automorphisms discovered at equal leaves prune
sibling branches that lie in the same orbit of the prefix stabiliser.

Trees skip the search and use the centred AHU encoding.

Certificates are byte strings: ``b"g" + canonical graph6`` for
:class:`SimpleGraph` and ``b"h" + q + canonical matrix rows`` for
:class:`HGraph`.  Equal certificates mean isomorphic graphs and vice versa.
"""

from __future__ import annotations

from functools import lru_cache

from .formats import serialize_graph6
from .graphs import HGraph, SimpleGraph

#: Largest non-tree graph accepted by the individualisation search.
CANON_LIMIT = 32


class CanonLimitError(ValueError):
    pass


def _refine(masks: list[int], cells: list[list[int]]) -> list[list[int]]:
    while True:
        cell_masks = [sum(1 << v for v in c) for c in cells]
        out: list[list[int]] = []
        changed = False
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            sig = {v: tuple((masks[v] & cm).bit_count() for cm in cell_masks) for v in c}
            keys = sorted(set(sig.values()))
            if len(keys) == 1:
                out.append(c)
                continue
            changed = True
            for k in keys:
                out.append([v for v in c if sig[v] == k])
        cells = out
        if not changed:
            return cells


class _Search:
    def __init__(self, masks: list[int]):
        self.masks = masks
        self.n = len(masks)
        self.best_key: tuple[int, ...] | None = None
        self.best_lab: list[int] | None = None
        self.first_key: tuple[int, ...] | None = None
        self.first_lab: list[int] | None = None
        self.autos: list[list[int]] = []

    def _key(self, lab: list[int]) -> tuple[int, ...]:
        pos = [0] * self.n
        for k, v in enumerate(lab):
            pos[v] = k
        rows = []
        for v in lab:
            m, r = self.masks[v], 0
            while m:
                low = m & -m
                r |= 1 << (self.n - 1 - pos[low.bit_length() - 1])
                m ^= low
            rows.append(r)
        return tuple(rows)

    def _leaf(self, lab: list[int]) -> None:
        key = self._key(lab)
        if self.best_key is None:
            self.best_key = self.first_key = key
            self.best_lab = self.first_lab = lab
            return
        if key == self.first_key:
            self._record(self.first_lab, lab)
        elif key == self.best_key:
            self._record(self.best_lab, lab)
        elif key > self.best_key:
            self.best_key, self.best_lab = key, lab

    def _record(self, a: list[int], b: list[int]) -> None:
        gamma = [0] * self.n
        for x, y in zip(a, b):
            gamma[x] = y
        self.autos.append(gamma)

    def _same_orbit(self, v: int, tried: list[int], prefix: list[int]) -> bool:
        gens = [g for g in self.autos if all(g[p] == p for p in prefix)]
        if not gens:
            return False
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in gens:
            for x in range(self.n):
                a, b = find(x), find(g[x])
                if a != b:
                    parent[a] = b
        rv = find(v)
        return any(find(t) == rv for t in tried)

    def run(self, cells: list[list[int]], prefix: list[int]) -> None:
        cells = _refine(self.masks, cells)
        target = None
        for idx, c in enumerate(cells):
            if len(c) > 1 and (target is None or len(c) < len(cells[target])):
                target = idx
        if target is None:
            self._leaf([c[0] for c in cells])
            return
        cell = cells[target]
        tried: list[int] = []
        for v in cell:
            if tried and self._same_orbit(v, tried, prefix):
                continue
            tried.append(v)
            rest = [w for w in cell if w != v]
            self.run(cells[:target] + [[v], rest] + cells[target + 1:], prefix + [v])


def _search_labelling(masks: list[int], cells: list[list[int]]) -> list[int]:
    s = _Search(masks)
    s.run([c for c in cells if c], [])
    return s.best_lab or []


# ---------------------------------------------------------------------------
# trees

def _tree_centres(g: SimpleGraph) -> list[int]:
    if g.n <= 2:
        return list(range(g.n))
    deg = [len(a) for a in g.adjacency]
    layer = [v for v in range(g.n) if deg[v] == 1]
    left = g.n
    while left > 2:
        left -= len(layer)
        nxt = []
        for v in layer:
            for w in g.adjacency[v]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return sorted(layer)


def _ahu(g: SimpleGraph, root: int, avoid: int) -> tuple[str, list[int]]:
    """Encoding and canonical preorder of the subtree at ``root`` (not entering ``avoid``)."""
    parent = {root: avoid}
    order = [root]
    for v in order:
        for w in g.adjacency[v]:
            if w != parent[v]:
                parent[w] = v
                order.append(w)
    code: dict[int, str] = {}
    pre: dict[int, list[int]] = {}
    for v in reversed(order):
        kids = sorted((code[w], w) for w in g.adjacency[v] if w != parent[v])
        code[v] = "(" + "".join(c for c, _ in kids) + ")"
        seq = [v]
        for _, w in kids:
            seq.extend(pre.pop(w))
        pre[v] = seq
    return code[root], pre[root]


def tree_labelling(g: SimpleGraph) -> list[int]:
    """Canonical vertex order of a tree (``order[k]`` is the vertex put at ``k``)."""
    centres = _tree_centres(g)
    if len(centres) == 1:
        return _ahu(g, centres[0], -1)[1]
    a, b = centres
    ha, hb = _ahu(g, a, b), _ahu(g, b, a)
    first, second = sorted([ha, hb], key=lambda t: t[0])
    return first[1] + second[1]


def tree_code(g: SimpleGraph) -> str:
    centres = _tree_centres(g)
    if len(centres) == 1:
        return _ahu(g, centres[0], -1)[0]
    a, b = centres
    return "".join(sorted([_ahu(g, a, b)[0], _ahu(g, b, a)[0]]))


# ---------------------------------------------------------------------------
# public surface

def canonical_labelling(g: SimpleGraph) -> list[int]:
    """Vertex order ``lab`` such that ``lab[k]`` becomes vertex ``k``."""
    if g.n == 0:
        return []
    if g.is_tree():
        return tree_labelling(g)
    if g.n > CANON_LIMIT:
        raise CanonLimitError(f"canonical labelling limited to n <= {CANON_LIMIT} for non-trees (got {g.n})")
    return _search_labelling(g.masks(), [list(range(g.n))])


def canonical_form(g: SimpleGraph) -> SimpleGraph:
    lab = canonical_labelling(g)
    perm = [0] * g.n
    for k, v in enumerate(lab):
        perm[v] = k
    return g.relabel(perm)


@lru_cache(maxsize=1 << 16)
def canonical_certificate(g: SimpleGraph) -> bytes:
    return b"g" + serialize_graph6(canonical_form(g)).encode("ascii")


def canonical_graph6(g: SimpleGraph) -> str:
    return canonical_certificate(g)[1:].decode("ascii")


def hgraph_labelling(h: HGraph) -> list[int]:
    if h.q > CANON_LIMIT:
        raise CanonLimitError(f"canonical labelling limited to q <= {CANON_LIMIT}")
    looped = [v for v in range(h.q) if h.has_loop(v)]
    plain = [v for v in range(h.q) if not h.has_loop(v)]
    return _search_labelling(list(h.nbr_masks), [plain, looped])


def canonical_hgraph(h: HGraph) -> HGraph:
    lab = hgraph_labelling(h)
    perm = [0] * h.q
    for k, v in enumerate(lab):
        perm[v] = k
    return h.relabel(perm)


@lru_cache(maxsize=4096)
def hgraph_certificate(h: HGraph) -> bytes:
    c = canonical_hgraph(h)
    return b"h" + str(c.q).encode() + b":" + "".join("".join(map(str, r)) for r in c.matrix).encode()


def certificate(g: SimpleGraph | HGraph) -> bytes:
    if isinstance(g, HGraph):
        return hgraph_certificate(g)
    return canonical_certificate(g)


def isomorphic(a: SimpleGraph | HGraph, b: SimpleGraph | HGraph) -> bool:
    return type(a) is type(b) and certificate(a) == certificate(b)
