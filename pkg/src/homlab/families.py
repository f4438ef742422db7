"""Isomorph-free generation of the graph families under study.

Every graph on ``n`` vertices arises from one on ``n - 1`` vertices by adding
a vertex joined to some subset, and every tree on ``n`` vertices arises from
one on ``n - 1`` by adding a leaf.  Both generators augment the previous
level and keep one representative per certificate.  Output is sorted by
certificate, so runs are reproducible.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterable, Iterator, TextIO

from .canon import canonical_certificate, canonical_form
from .formats import ParseError, parse_graph6
from .graphs import SimpleGraph
from .structure import is_2_connected, is_2_edge_connected, is_minimally_2_connected

log = logging.getLogger(__name__)

TREE_LIMIT = 16
GRAPH_LIMIT = 7

KINDS = ("trees", "two_connected", "two_edge_connected", "minimally_two_connected", "all_graphs", "connected")

#: short names accepted on the command line
ALIASES = {
    "trees": "trees",
    "tree": "trees",
    "2conn": "two_connected",
    "two_connected": "two_connected",
    "2econn": "two_edge_connected",
    "two_edge_connected": "two_edge_connected",
    "min2conn": "minimally_two_connected",
    "minimally_two_connected": "minimally_two_connected",
    "all": "all_graphs",
    "all_graphs": "all_graphs",
    "connected": "connected",
}


class LimitError(ValueError):
    """Requested size is beyond the native generation limit."""


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    n: int

    def __post_init__(self):
        kind = ALIASES.get(self.kind)
        if kind is None:
            raise ValueError(f"unknown family kind {self.kind!r}; choose from {', '.join(KINDS)}")
        object.__setattr__(self, "kind", kind)
        limit = TREE_LIMIT if kind == "trees" else GRAPH_LIMIT
        if not 1 <= self.n <= limit:
            raise LimitError(f"{kind} generated natively for 1 <= n <= {limit} (got n={self.n})")

    def label(self) -> str:
        return f"{self.kind}(n={self.n})"


def _is_min2(g: SimpleGraph) -> bool:
    return is_2_connected(g) and is_minimally_2_connected(g)


PREDICATES: dict[str, Callable[[SimpleGraph], bool]] = {
    "trees": SimpleGraph.is_tree,
    "two_connected": is_2_connected,
    "two_edge_connected": is_2_edge_connected,
    "minimally_two_connected": _is_min2,
    "all_graphs": lambda g: True,
    "connected": SimpleGraph.is_connected,
}


@lru_cache(maxsize=None)
def _trees(n: int) -> tuple[SimpleGraph, ...]:
    if n == 1:
        return (SimpleGraph(1),)
    found: dict[bytes, SimpleGraph] = {}
    for t in _trees(n - 1):
        for v in range(n - 1):
            g = SimpleGraph(n, list(t.edges) + [(v, n - 1)])
            cert = canonical_certificate(g)
            if cert not in found:
                found[cert] = canonical_form(g)
    return tuple(found[c] for c in sorted(found))


def gen_trees(n: int) -> Iterator[SimpleGraph]:
    """One canonical representative per free tree on ``n`` vertices."""
    if not 1 <= n <= TREE_LIMIT:
        raise LimitError(f"trees generated for 1 <= n <= {TREE_LIMIT} (got n={n})")
    return iter(_trees(n))


@lru_cache(maxsize=None)
def _all_graphs(n: int) -> tuple[SimpleGraph, ...]:
    if n == 1:
        return (SimpleGraph(1),)
    found: dict[bytes, SimpleGraph] = {}
    for g in _all_graphs(n - 1):
        base = list(g.edges)
        for mask in range(1 << (n - 1)):
            h = SimpleGraph(n, base + [(v, n - 1) for v in range(n - 1) if mask >> v & 1])
            cert = canonical_certificate(h)
            if cert not in found:
                found[cert] = canonical_form(h)
    return tuple(found[c] for c in sorted(found))


@lru_cache(maxsize=None)
def _family(kind: str, n: int) -> tuple[SimpleGraph, ...]:
    if kind == "trees":
        return _trees(n)
    pred = PREDICATES[kind]
    return tuple(g for g in _all_graphs(n) if pred(g))


def gen_graphs(spec: FamilySpec | str, n: int | None = None) -> Iterator[SimpleGraph]:
    """Isomorphism-class representatives of a family, in certificate order."""
    if not isinstance(spec, FamilySpec):
        spec = FamilySpec(spec, n)
    return iter(_family(spec.kind, spec.n))


def gen_min_2conn(n: int) -> Iterator[SimpleGraph]:
    return gen_graphs(FamilySpec("minimally_two_connected", n))


def gen_graphs_exhaustive(n: int, predicate: Callable[[SimpleGraph], bool] = lambda g: True) -> list[SimpleGraph]:
    """Filter all 2^C(n,2) labelled graphs; slow cross-check for small ``n``."""
    pairs = list(combinations(range(n), 2))
    found: dict[bytes, SimpleGraph] = {}
    for mask in range(1 << len(pairs)):
        g = SimpleGraph(n, (pairs[i] for i in range(len(pairs)) if mask >> i & 1))
        if not predicate(g):
            continue
        cert = canonical_certificate(g)
        if cert not in found:
            found[cert] = canonical_form(g)
    return [found[c] for c in sorted(found)]


class IngestError(ValueError):
    def __init__(self, lineno: int, cause: Exception):
        super().__init__(f"line {lineno}: {cause}")
        self.lineno = lineno
        self.cause = cause


def ingest_graph6_stream(
    reader: TextIO | Iterable[str],
    strict: bool = False,
    dedup: bool = False,
    predicate: Callable[[SimpleGraph], bool] | None = None,
    errors: list[IngestError] | None = None,
) -> Iterator[SimpleGraph]:
    """Parse one graph6 string per line.

    Blank lines and the ``>>graph6<<`` header alone are skipped.  A bad line
    raises :class:`IngestError` under ``strict``; otherwise it is logged,
    appended to ``errors`` when given, and skipped.
    """
    seen: set[bytes] = set()
    for lineno, line in enumerate(reader, start=1):
        line = line.strip()
        if not line or line == ">>graph6<<":
            continue
        try:
            g = parse_graph6(line)
        except ParseError as exc:
            err = IngestError(lineno, exc)
            if strict:
                raise err from exc
            log.warning("%s", err)
            if errors is not None:
                errors.append(err)
            continue
        if predicate is not None and not predicate(g):
            continue
        if dedup:
            cert = canonical_certificate(g)
            if cert in seen:
                continue
            seen.add(cert)
        yield g
