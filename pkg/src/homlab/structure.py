"""Connectivity tests, ear decompositions and minimal 2-connectivity."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graphs import SimpleGraph


class StructureError(ValueError):
    """Input violates an operation's structural precondition."""


@dataclass(frozen=True)
class EarDecomposition:
    """A cycle followed by ears; every part is a vertex sequence.

    ``cycle`` lists the cycle once around (the closing edge is implicit).  Each
    ear runs from one endpoint to the other; a closed ear repeats its endpoint.
    """

    cycle: tuple[int, ...]
    ears: tuple[tuple[int, ...], ...]

    @property
    def open_flags(self) -> tuple[bool, ...]:
        return tuple(e[0] != e[-1] for e in self.ears)

    def parts(self) -> list[list[tuple[int, int]]]:
        c = self.cycle
        out = [[_e(c[i], c[(i + 1) % len(c)]) for i in range(len(c))]]
        for ear in self.ears:
            out.append([_e(ear[i], ear[i + 1]) for i in range(len(ear) - 1)])
        return out

    def to_json(self) -> dict:
        return {
            "cycle": list(self.cycle),
            "ears": [list(e) for e in self.ears],
            "open": list(self.open_flags),
        }


@dataclass(frozen=True)
class NormalFormEars:
    """Open ear decomposition with the long ears (>= 4 vertices) first.

    Ears ``0..c-1`` of ``decomposition.ears`` are long; the remaining ones have
    exactly three vertices.
    """

    decomposition: EarDecomposition
    c: int

    @property
    def long_ears(self):
        return self.decomposition.ears[: self.c]

    @property
    def short_ears(self):
        return self.decomposition.ears[self.c:]


def _e(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


# ---------------------------------------------------------------------------
# connectivity

def _lowpoints(g: SimpleGraph):
    """Iterative DFS returning (articulation points, bridges, number of roots)."""
    disc = [-1] * g.n
    low = [0] * g.n
    cut: set[int] = set()
    bridges: set[tuple[int, int]] = set()
    roots = 0
    t = 0
    for s in range(g.n):
        if disc[s] >= 0:
            continue
        roots += 1
        disc[s] = low[s] = t
        t += 1
        children = 0
        stack = [(s, -1, iter(g.adjacency[s]))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] < 0:
                    disc[w] = low[w] = t
                    t += 1
                    if v == s:
                        children += 1
                    stack.append((w, v, iter(g.adjacency[w])))
                    advanced = True
                    break
                if w != parent:
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent >= 0:
                low[parent] = min(low[parent], low[v])
                if low[v] > disc[parent]:
                    bridges.add(_e(parent, v))
                if parent != s and low[v] >= disc[parent]:
                    cut.add(parent)
        if children > 1:
            cut.add(s)
    return cut, bridges, roots


def is_2_connected(g: SimpleGraph) -> bool:
    if g.n < 3:
        return False
    cut, _, roots = _lowpoints(g)
    return roots == 1 and not cut


def is_2_edge_connected(g: SimpleGraph) -> bool:
    if g.n < 2:
        return False
    _, bridges, roots = _lowpoints(g)
    return roots == 1 and not bridges


def cut_vertices(g: SimpleGraph) -> set[int]:
    return _lowpoints(g)[0]


def bridges(g: SimpleGraph) -> set[tuple[int, int]]:
    return _lowpoints(g)[1]


# ---------------------------------------------------------------------------
# ear decompositions

def _dfs_cycle(g: SimpleGraph) -> tuple[int, ...]:
    """A cycle closed by the first back edge met in a DFS from vertex 0."""
    parent = {0: -1}
    depth = {0: 0}
    stack = [(0, iter(g.adjacency[0]))]
    while stack:
        v, it = stack[-1]
        for w in it:
            if w not in parent:
                parent[w] = v
                depth[w] = depth[v] + 1
                stack.append((w, iter(g.adjacency[w])))
                break
            if w != parent[v] and depth[w] < depth[v]:
                cyc = [v]
                while cyc[-1] != w:
                    cyc.append(parent[cyc[-1]])
                return tuple(reversed(cyc))
        else:
            stack.pop()
    raise StructureError("graph has no cycle")


def _grow(g: SimpleGraph, open_only: bool) -> EarDecomposition:
    cyc = _dfs_cycle(g)
    covered = set(cyc)
    used = {_e(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc))}
    ears = []
    while len(used) < g.m:
        ear = None
        for u, w in g.sorted_edges():
            if (u, w) in used:
                continue
            if u in covered and w in covered:
                ear = (u, w)
                break
            if u in covered or w in covered:
                a, b = (u, w) if u in covered else (w, u)
                tail = _path_back(g, b, a, covered, open_only)
                if tail is None:
                    continue
                ear = (a,) + tail
                break
        if ear is None:
            kind = "2-connected" if open_only else "2-edge-connected"
            raise StructureError(f"graph is not {kind}: no ear can be attached")
        for i in range(len(ear) - 1):
            used.add(_e(ear[i], ear[i + 1]))
        covered.update(ear)
        ears.append(ear)
    if len(covered) < g.n:
        raise StructureError("graph is not connected")
    return EarDecomposition(cyc, tuple(ears))


def _path_back(g, start, anchor, covered, open_only):
    """Shortest path from uncovered ``start`` back to the covered set.

    The first step may not return along the edge ``start-anchor``; when
    ``open_only`` the path must end at a covered vertex other than ``anchor``.
    """
    prev = {start: None}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in g.adjacency[v]:
            if v == start and w == anchor:
                continue
            if w in covered:
                if open_only and w == anchor:
                    continue
                path = [w, v]
                while prev[path[-1]] is not None:
                    path.append(prev[path[-1]])
                return tuple(reversed(path))
            if w not in prev:
                prev[w] = v
                queue.append(w)
    return None


def open_ear_decomposition(g: SimpleGraph) -> EarDecomposition:
    """Ear decomposition with every ear open; exists exactly for 2-connected graphs."""
    if not is_2_connected(g):
        raise StructureError("open ear decomposition requires a 2-connected graph")
    return _grow(g, open_only=True)


def ear_decomposition(g: SimpleGraph) -> EarDecomposition:
    """Ear decomposition, closed ears allowed; exists exactly for 2-edge-connected graphs."""
    if not is_2_edge_connected(g):
        raise StructureError("ear decomposition requires a 2-edge-connected graph")
    return _grow(g, open_only=False)


def check_ear_decomposition(g: SimpleGraph, dec: EarDecomposition, require_open: bool = False) -> list[str]:
    """Problems with ``dec`` as a decomposition of ``g``; empty when valid."""
    problems = []
    c = dec.cycle
    if len(c) < 3 or len(set(c)) != len(c):
        problems.append(f"Q0 {c} is not a cycle")
    seen_edges: set[tuple[int, int]] = set()
    for k, part in enumerate(dec.parts()):
        for e in part:
            if e not in g.edges:
                problems.append(f"part {k}: {e} is not an edge of G")
            if e in seen_edges:
                problems.append(f"part {k}: edge {e} used twice")
            seen_edges.add(e)
    if seen_edges != set(g.edges):
        problems.append(f"parts miss edges {sorted(set(g.edges) - seen_edges)}")
    covered = set(c)
    for k, ear in enumerate(dec.ears, start=1):
        if len(ear) < 2:
            problems.append(f"ear {k} is too short")
            continue
        if ear[0] not in covered or ear[-1] not in covered:
            problems.append(f"ear {k}: endpoints {ear[0]},{ear[-1]} not on earlier parts")
        inner = ear[1:-1]
        if any(v in covered for v in inner) or len(set(inner)) != len(inner):
            problems.append(f"ear {k}: interior {inner} not new")
        if ear[0] == ear[-1] and len(ear) < 4:
            problems.append(f"ear {k}: closed ear shorter than a triangle")
        if require_open and ear[0] == ear[-1]:
            problems.append(f"ear {k} is closed")
        covered.update(ear)
    if covered != set(range(g.n)):
        problems.append(f"vertices {sorted(set(range(g.n)) - covered)} uncovered")
    return problems


# ---------------------------------------------------------------------------
# minimal 2-connectivity

def is_minimally_2_connected(g: SimpleGraph) -> bool:
    """Every edge deletion destroys 2-connectivity."""
    if not is_2_connected(g):
        raise StructureError("minimality is defined for 2-connected graphs")
    return not any(is_2_connected(g.remove_edge(u, v)) for u, v in g.edges)


#: Cycle enumeration in the chord oracle explodes beyond this size.
CHORD_ORACLE_LIMIT = 10


def simple_cycles(g: SimpleGraph):
    """Every simple cycle once per direction, rooted at its smallest vertex."""
    for s in range(g.n):
        stack = [(s, [s], 1 << s)]
        while stack:
            v, path, seen = stack.pop()
            for w in g.adjacency[v]:
                if w == s and len(path) >= 3:
                    yield tuple(path)
                elif w > s and not seen >> w & 1:
                    stack.append((w, path + [w], seen | 1 << w))


def has_chorded_cycle(g: SimpleGraph) -> bool:
    if g.n > CHORD_ORACLE_LIMIT:
        raise StructureError(f"chord oracle limited to n <= {CHORD_ORACLE_LIMIT}")
    for cyc in simple_cycles(g):
        k = len(cyc)
        ring = {_e(cyc[i], cyc[(i + 1) % k]) for i in range(k)}
        for i in range(k):
            for j in range(i + 2, k):
                e = _e(cyc[i], cyc[j])
                if e not in ring and e in g.edges:
                    return True
    return False


def is_minimally_2_connected_by_chords(g: SimpleGraph) -> bool:
    """Chordless-cycle characterisation, used as an oracle."""
    if not is_2_connected(g):
        raise StructureError("minimality is defined for 2-connected graphs")
    return not has_chorded_cycle(g)


def normal_form_ears(g: SimpleGraph) -> NormalFormEars:
    """Open ear decomposition with long ears first and 3-vertex ears last.

    In a minimally 2-connected graph the middle vertex of a 3-vertex ear has
    degree 2 in G, so no later ear attaches there and the short ears can be
    moved to the end.
    """
    if not is_minimally_2_connected(g):
        raise StructureError("normal form requires a minimally 2-connected graph")
    dec = open_ear_decomposition(g)
    for ear in dec.ears:
        if len(ear) < 3:
            raise StructureError(f"single-edge ear {ear} in a minimally 2-connected graph")
    long_ = [e for e in dec.ears if len(e) >= 4]
    short = [e for e in dec.ears if len(e) == 3]
    for ear in short:
        if g.degree(ear[1]) != 2:
            raise AssertionError(f"middle vertex {ear[1]} of ear {ear} has degree {g.degree(ear[1])}")
    nf = NormalFormEars(EarDecomposition(dec.cycle, tuple(long_ + short)), len(long_))
    problems = check_normal_form(g, nf)
    if problems:
        raise AssertionError("; ".join(problems))
    return nf


def check_normal_form(g: SimpleGraph, nf: NormalFormEars) -> list[str]:
    """Validate ear order, ear sizes, endpoint placement and middle-vertex degrees.

    Short-ear endpoints are accepted anywhere in the cycle or the long ears.
    """
    dec = nf.decomposition
    problems = check_ear_decomposition(g, dec, require_open=True)
    for k, ear in enumerate(nf.long_ears, start=1):
        if len(ear) < 4:
            problems.append(f"long ear {k} has {len(ear)} vertices")
    base = set(dec.cycle)
    for ear in nf.long_ears:
        base.update(ear)
    for ear in nf.short_ears:
        if len(ear) != 3:
            problems.append(f"short ear {ear} does not have 3 vertices")
            continue
        if ear[0] not in base or ear[-1] not in base:
            problems.append(f"short ear {ear} has an endpoint outside the cycle and long ears")
        if g.degree(ear[1]) != 2:
            problems.append(f"short ear {ear}: middle vertex degree {g.degree(ear[1])}")
    return problems


def find_attached_path(g: SimpleGraph, cyc) -> tuple[int, ...] | None:
    """A path on >= 3 vertices meeting the cycle ``cyc`` only at its endpoints.

    Open paths (distinct endpoints) are preferred, then closed ones; among
    each kind the shortest is returned.  ``None`` means only chords (2-vertex
    attachments) or nothing at all hang off the cycle.
    """
    on = set(cyc)
    k = len(cyc)
    for i in range(k):
        if not g.has_edge(cyc[i], cyc[(i + 1) % k]):
            raise StructureError(f"{tuple(cyc)} is not a cycle of G")
    best_open = best_closed = None
    for a in sorted(on):
        for b in g.adjacency[a]:
            if b in on:
                continue
            for open_only in (True, False):
                tail = _path_back(g, b, a, on, open_only)
                if tail is None:
                    continue
                p = (a,) + tail
                if p[0] != p[-1]:
                    if best_open is None or len(p) < len(best_open):
                        best_open = p
                elif best_closed is None or len(p) < len(best_closed):
                    best_closed = p
    return best_open if best_open is not None else best_closed
