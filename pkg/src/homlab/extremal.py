"""Target profiles, exact thresholds and family-wide verification harnesses.

Verifiers count hom(G, H) over an enumerated family and fold the table into
a :class:`VerificationReport`.  Statements that hold for every ``n`` give a
hard ``confirmed`` / ``violated`` verdict; statements that are only true for
large ``n`` are reported as ``confirmed-at-this-n`` / ``violated-at-this-n``.
"""

from __future__ import annotations

import csv
import io
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .canon import canonical_certificate, canonical_graph6, certificate, isomorphic
from .families import FamilySpec, gen_graphs, gen_trees
from .graphs import (
    GraphError,
    HGraph,
    SimpleGraph,
    complete,
    complete_bipartite,
    cycle,
    h_circ_ell,
    hard_core,
    looped_complete,
    path,
    petersen,
    star,
    widom_rowlinson,
)
from .hom import (
    closed_form_cycle_kq,
    closed_form_k2,
    closed_form_star,
    common_neighbourhoods,
    count_hom,
    count_hom_cycle,
    count_hom_path,
    path_endpoint_matrix,
)


class HypothesisError(ValueError):
    """The target or parameters fail the statement's hypothesis."""


class ThresholdNotFound(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# target pool

def _t(g: SimpleGraph) -> HGraph:
    return HGraph.from_simple(g)


def build_pool() -> dict[str, HGraph]:
    pool = {
        "K1": _t(complete(1)),
        "K2": _t(complete(2)),
        "K3": _t(complete(3)),
        "K4": _t(complete(4)),
        "P3": _t(path(3)),
        "Hind": hard_core(),
        "HWR2": widom_rowlinson(2),
        "HWR3": widom_rowlinson(3),
        "K2o": looped_complete(2),
        "K3o": looped_complete(3),
        "K22": _t(complete_bipartite(2, 2)),
        "K33": _t(complete_bipartite(3, 3)),
        "Petersen": petersen(),
        "C5": _t(cycle(5)),
    }
    pool["K2(1)"] = h_circ_ell(pool["K2"], 1)
    pool["K3(1)"] = h_circ_ell(pool["K3"], 1)
    pool["C5(1)"] = h_circ_ell(pool["C5"], 1)
    pool["K3(2)"] = h_circ_ell(pool["K3"], 2)
    return pool


POOL = build_pool()

#: regular bases for the path-minimality statement
TREE_MIN_BASES = {name: POOL[name] for name in ("K1", "K2", "K3", "C5", "K2o")}


# ---------------------------------------------------------------------------
# profile

@dataclass(frozen=True)
class HProfile:
    delta: int
    v_eq_delta: tuple[int, ...]
    s: int
    regular: bool
    connected: bool
    bipartite_loopless: bool

    def to_json(self) -> dict:
        return {
            "delta": self.delta,
            "v_eq_delta": list(self.v_eq_delta),
            "s": str(self.s),
            "regular": self.regular,
            "connected": self.connected,
            "bipartite_loopless": self.bipartite_loopless,
        }


def profile(h: HGraph) -> HProfile:
    degs = h.degrees()
    delta = max(degs, default=0)
    common = common_neighbourhoods(h)
    s = sum(1 for row in common for c in row if c == delta)
    return HProfile(
        delta=delta,
        v_eq_delta=tuple(i for i, d in enumerate(degs) if d == delta),
        s=s,
        regular=h.is_regular(),
        connected=h.is_connected(),
        bipartite_loopless=h.is_loopless_bipartite(),
    )


def k2_uniqueness_hypothesis(h: HGraph) -> bool:
    """Whether H meets the K_{2,n-2} maximality hypothesis (connected; s large if regular)."""
    p = profile(h)
    if not p.connected:
        return False
    if not p.regular:
        return True
    d2 = p.delta ** 2
    return p.s >= (2 * d2 + 1 if p.bipartite_loopless else d2 + 1)


# ---------------------------------------------------------------------------
# thresholds

def default_cutoff(h: HGraph) -> int:
    return 10 * h.q + 50


def path_bound_threshold(h: HGraph, cutoff: int | None = None) -> int:
    """Least k with hom(P_k, H) < Delta^(k-2).

    Since hom(P_{k+1}, H) <= Delta * hom(P_k, H), the strict bound then
    persists for every larger k.
    """
    if h.is_regular():
        raise HypothesisError("path threshold requires a non-regular target")
    cutoff = default_cutoff(h) if cutoff is None else cutoff
    delta = h.max_degree
    nbrs = [h.neighbors(i) for i in range(h.q)]
    vec = [1] * h.q
    for k in range(2, cutoff + 1):
        vec = [sum(vec[j] for j in nbrs[i]) for i in range(h.q)]
        if sum(vec) < delta ** (k - 2):
            return k
    raise ThresholdNotFound(f"hom(P_k,H) < Delta^(k-2) not reached for k <= {cutoff}")


@dataclass(frozen=True)
class CycleThreshold:
    threshold: int
    cutoff: int


def cycle_bound_holds(h: HGraph, k: int, delta: int, bipartite: bool) -> bool:
    factor = 2 * delta * delta + 1 if bipartite else delta * delta + 1
    return count_hom_cycle(k, h) * delta * delta < factor * delta ** k


def cycle_bound_threshold(h: HGraph, cutoff: int | None = None) -> CycleThreshold:
    """Least l such that hom(C_k,H) < (c + 1/Delta^2) Delta^k for all l <= k <= cutoff.

    ``c`` is 2 for loopless bipartite targets and 1 otherwise; comparisons are
    done after multiplying through by Delta^2.
    """
    if not h.is_regular():
        raise HypothesisError("cycle threshold requires a regular target")
    if not h.is_connected():
        raise HypothesisError("cycle threshold requires a connected target")
    cutoff = default_cutoff(h) if cutoff is None else cutoff
    delta = h.max_degree
    bip = h.is_loopless_bipartite()
    last_fail = 2
    for k in range(3, cutoff + 1):
        if not cycle_bound_holds(h, k, delta, bip):
            last_fail = k
    if last_fail == cutoff:
        raise ThresholdNotFound(f"cycle bound still failing at cutoff {cutoff}")
    return CycleThreshold(last_fail + 1, cutoff)


# ---------------------------------------------------------------------------
# endpoint-pinned paths

@dataclass(frozen=True)
class Lemma10Report:
    k: int
    applicable: bool
    reason: str = ""
    bound: int | None = None
    max_entry: int | None = None
    witness: tuple[int, int] | None = None
    holds: bool | None = None

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "applicable": self.applicable,
            "reason": self.reason,
            "bound": None if self.bound is None else str(self.bound),
            "max_entry": None if self.max_entry is None else str(self.max_entry),
            "witness": None if self.witness is None else list(self.witness),
            "holds": self.holds,
        }


def lemma10_excluded(h: HGraph) -> str:
    """Why the endpoint bound does not apply to ``h``, or an empty string."""
    delta = h.max_degree
    if delta == 0:
        return "H has no edges (Delta = 0)"
    if h.q == 2 * delta and isomorphic(h, _t(complete_bipartite(delta, delta))):
        return f"H is K_{{{delta},{delta}}}"
    if h.q == delta and isomorphic(h, looped_complete(delta)):
        return f"H is the looped complete graph on {delta} vertices"
    return ""


def check_lemma10(h: HGraph, k: int) -> Lemma10Report:
    """Check (A^(k-1))_ij <= (Delta^2 - 1) Delta^(k-4) for every pair i, j."""
    if k < 4:
        raise ValueError("endpoint bound needs k >= 4")
    reason = lemma10_excluded(h)
    if reason:
        return Lemma10Report(k, applicable=False, reason=reason)
    delta = h.max_degree
    bound = (delta * delta - 1) * delta ** (k - 4)
    mat = path_endpoint_matrix(k, h)
    best, wit = -1, (0, 0)
    for i, row in enumerate(mat):
        for j, x in enumerate(row):
            if x > best:
                best, wit = x, (i, j)
    return Lemma10Report(k, True, "", bound, best, wit, best <= bound)


# ---------------------------------------------------------------------------
# family counting

def workers_from_env(default: int = 1) -> int:
    raw = os.environ.get("HOMLAB_WORKERS")
    if not raw:
        return default
    try:
        return max(1, int(raw))
    except ValueError:
        return default


def _count_pair(args):
    g, h = args
    return count_hom(g, h)


def count_many(graphs: Sequence[SimpleGraph], h: HGraph, workers: int | None = None, cache=None) -> list[int]:
    """hom(G, H) for each graph, in input order."""
    workers = workers_from_env() if workers is None else workers
    out: list[int | None] = [None] * len(graphs)
    todo = []
    for idx, g in enumerate(graphs):
        hit = cache.get(g, h) if cache is not None else None
        if hit is None:
            todo.append(idx)
        else:
            out[idx] = hit
    if workers > 1 and len(todo) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_count_pair, [(graphs[i], h) for i in todo], chunksize=16))
    else:
        results = [count_hom(graphs[i], h) for i in todo]
    for idx, c in zip(todo, results):
        out[idx] = c
        if cache is not None:
            cache.put(graphs[idx], h, c)
    return out  # type: ignore[return-value]


# ---------------------------------------------------------------------------
# reports

@dataclass
class Row:
    graph: SimpleGraph
    count: int

    @property
    def certificate(self) -> bytes:
        return canonical_certificate(self.graph)

    @property
    def g6(self) -> str:
        return canonical_graph6(self.graph)

    def to_json(self) -> dict:
        return {"g6": self.g6, "certificate": self.certificate.hex(), "count_decimal": str(self.count)}


HARD_VERDICTS = {"confirmed": "PASS", "violated": "FAIL"}


@dataclass
class VerificationReport:
    theorem: str
    family: str
    h_label: str
    h_certificate: bytes
    rows: list[Row]
    extremal: list[bytes]
    equality: str
    verdict: str
    witnesses: list[Row] = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    @property
    def status(self) -> str:
        if self.verdict in HARD_VERDICTS:
            return HARD_VERDICTS[self.verdict]
        return "REPORT"

    @property
    def extremal_g6(self) -> list[str]:
        by_cert = {r.certificate: r.g6 for r in self.rows}
        return [by_cert[c] for c in self.extremal]

    def count_of(self, g: SimpleGraph) -> int | None:
        cert = canonical_certificate(g)
        for r in self.rows:
            if r.certificate == cert:
                return r.count
        return None

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "family": self.family,
            "h": self.h_label,
            "h_certificate": self.h_certificate.hex(),
            "rows": [r.to_json() for r in self.rows],
            "extremal": [c.hex() for c in self.extremal],
            "extremal_g6": self.extremal_g6,
            "equality": self.equality,
            "verdict": self.verdict,
            "status": self.status,
            "witnesses": [r.to_json() for r in self.witnesses],
            "notes": self.notes,
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["g6", "certificate", "count"])
        for r in self.rows:
            w.writerow([r.g6, r.certificate.hex(), r.count])
        return buf.getvalue()

    def summary(self) -> str:
        ext = ",".join(self.extremal_g6)
        return f"{self.status} {self.theorem} {self.family} H={self.h_label} verdict={self.verdict} extremal=[{ext}] equality={self.equality}"


def _table(graphs: Iterable[SimpleGraph], h: HGraph, workers=None, cache=None) -> list[Row]:
    gs = sorted(graphs, key=canonical_certificate)
    counts = count_many(gs, h, workers, cache)
    return [Row(g, c) for g, c in zip(gs, counts)]


def _argbest(rows: list[Row], maximise: bool) -> tuple[int, list[bytes]]:
    best = (max if maximise else min)(r.count for r in rows)
    return best, [r.certificate for r in rows if r.count == best]


def _h_label(h: HGraph, label: str | None) -> str:
    return label or f"H(q={h.q})"


# ---------------------------------------------------------------------------
# verifiers

def verify_tree_min(base: HGraph, ell: int, n: int, label: str | None = None, workers=None, cache=None) -> VerificationReport:
    """P_n minimises hom(T, base joined with ell looped dominating vertices) over trees."""
    try:
        h = h_circ_ell(base, ell)
    except GraphError as exc:
        raise HypothesisError(str(exc)) from None
    rows = _table(gen_trees(n), h, workers, cache)
    best, minimisers = _argbest(rows, maximise=False)
    path_cert = canonical_certificate(path(n))
    path_count = next(r.count for r in rows if r.certificate == path_cert)
    complete_looped = all(all(row) for row in h.matrix)
    all_equal = len({r.count for r in rows}) == 1
    if complete_looped:
        ok = all_equal
        equality = "all-equal"
    else:
        ok = minimisers == [path_cert]
        equality = "unique-minimiser" if ok else "path-not-unique-minimiser"
    witnesses = [r for r in rows if r.certificate != path_cert and r.count <= path_count and not complete_looped]
    return VerificationReport(
        theorem="tree-min",
        family=FamilySpec("trees", n).label(),
        h_label=f"{_h_label(base, label)}o({ell})",
        h_certificate=certificate(h),
        rows=rows,
        extremal=minimisers,
        equality=equality,
        verdict="confirmed" if ok else "violated",
        witnesses=witnesses,
        notes={"path_count": str(path_count), "complete_looped": complete_looped},
    )


def verify_tree_max(h: HGraph, n: int, label: str | None = None, workers=None, cache=None) -> VerificationReport:
    """The star maximises hom(T, H) over trees; regular targets make all trees tie."""
    rows = _table(gen_trees(n), h, workers, cache)
    best, maximisers = _argbest(rows, maximise=True)
    star_cert = canonical_certificate(star(n))
    star_count = next(r.count for r in rows if r.certificate == star_cert)
    ok = star_count == best
    regular = h.is_regular()
    notes: dict = {"star_count": str(star_count), "regular": regular}
    if regular:
        expected = h.q * h.max_degree ** (n - 1)
        tie = all(r.count == expected for r in rows)
        notes["regular_identity"] = tie
        ok = ok and tie
        equality = "all-equal" if tie else "regular-identity-failed"
    else:
        unique = maximisers == [star_cert]
        notes["star_unique"] = unique
        equality = "unique-maximiser" if unique else "tied-maximisers"
    witnesses = [r for r in rows if r.count > star_count]
    return VerificationReport(
        theorem="tree-max",
        family=FamilySpec("trees", n).label(),
        h_label=_h_label(h, label),
        h_certificate=certificate(h),
        rows=rows,
        extremal=maximisers,
        equality=equality,
        verdict="confirmed" if ok else "violated",
        witnesses=witnesses,
        notes=notes,
    )


def verify_2conn_max(
    h: HGraph,
    n: int,
    minimal_only: bool = False,
    graphs: Iterable[SimpleGraph] | None = None,
    label: str | None = None,
    workers=None,
    cache=None,
) -> VerificationReport:
    """Report whether K_{2,n-2} uniquely maximises hom(G, H) over 2-connected G.

    Only true for large ``n``, so the verdict describes this ``n``:
    ``confirmed-at-this-n`` when K_{2,n-2} is the unique maximiser,
    ``violated-at-this-n`` when it is beaten or tied while the hypothesis on
    H holds, or beaten while it fails, and ``not-applicable`` when the
    hypothesis fails and K_{2,n-2} merely ties (or is not in the family).
    """
    if not h.is_connected():
        raise HypothesisError("K_{2,n-2} maximality needs a connected target")
    kind = "minimally_two_connected" if minimal_only else "two_connected"
    if graphs is None:
        family = FamilySpec(kind, n).label()
        graphs = gen_graphs(FamilySpec(kind, n))
    else:
        family = f"{kind}(n={n}, ingested)"
    rows = _table(graphs, h, workers, cache)
    if not rows:
        raise HypothesisError(f"empty family {family}")
    best, maximisers = _argbest(rows, maximise=True)
    hyp = k2_uniqueness_hypothesis(h)
    notes: dict = {"hypothesis_holds": hyp, "s": str(profile(h).s)}
    k2_count = None
    if n >= 4:
        k2 = complete_bipartite(2, n - 2)
        k2_cert = canonical_certificate(k2)
        k2_count = next((r.count for r in rows if r.certificate == k2_cert), None)
        notes["k2_count"] = None if k2_count is None else str(k2_count)
        notes["k2_closed_form"] = str(closed_form_k2(n, h))
    if k2_count is None:
        verdict, equality = "not-applicable", "k2-absent"
    else:
        unique = maximisers == [k2_cert]
        is_max = k2_count == best
        if unique:
            verdict, equality = "confirmed-at-this-n", "unique-maximiser"
        elif is_max and not hyp:
            verdict, equality = "not-applicable", "tied-maximisers"
        else:
            verdict = "violated-at-this-n"
            equality = "tied-maximisers" if is_max else "k2-beaten"
    witnesses = [r for r in rows if k2_count is not None and r.count >= k2_count and r.certificate != k2_cert]
    return VerificationReport(
        theorem="two-conn",
        family=family,
        h_label=_h_label(h, label),
        h_certificate=certificate(h),
        rows=rows,
        extremal=maximisers,
        equality=equality,
        verdict=verdict,
        witnesses=witnesses,
        notes=notes,
    )


def verify_cycle_kq(
    q: int,
    n: int,
    family: str = "two_connected",
    graphs: Iterable[SimpleGraph] | None = None,
    workers=None,
    cache=None,
) -> VerificationReport:
    """C_n maximises proper q-colourings; the only extra maximiser is K_{2,3} at (n, q) = (5, 3)."""
    if q < 3:
        raise HypothesisError("proper-colouring maximality needs q >= 3")
    if n < 3:
        raise HypothesisError("needs n >= 3")
    spec = FamilySpec(family, n)
    if spec.kind not in ("two_connected", "two_edge_connected"):
        raise ValueError("family must be two_connected or two_edge_connected")
    kq = _t(complete(q))
    fam_label = spec.label()
    if graphs is None:
        graphs = gen_graphs(spec)
    else:
        fam_label = f"{spec.kind}(n={n}, ingested)"
    rows = _table(graphs, kq, workers, cache)
    best, maximisers = _argbest(rows, maximise=True)
    expected = {canonical_certificate(cycle(n))}
    if (n, q) == (5, 3):
        expected.add(canonical_certificate(complete_bipartite(2, 3)))
    closed = closed_form_cycle_kq(n, q)
    ok = set(maximisers) == expected and best == closed
    cyc_cert = canonical_certificate(cycle(n))
    witnesses = [r for r in rows if r.count >= closed and r.certificate not in expected]
    return VerificationReport(
        theorem="cycle-kq",
        family=fam_label,
        h_label=f"K{q}",
        h_certificate=certificate(kq),
        rows=rows,
        extremal=maximisers,
        equality="unique-maximiser" if len(expected) == 1 else "cycle-and-K23",
        verdict="confirmed" if ok else "violated",
        witnesses=witnesses,
        notes={"closed_form": str(closed), "cycle_present": any(r.certificate == cyc_cert for r in rows)},
    )


def verify_hoffman_london(h: HGraph, n_max: int, label: str | None = None) -> VerificationReport:
    """hom(P_n, H) <= hom(K_{1,n-1}, H) for 2 <= n <= n_max."""
    rows = []
    bad = []
    for n in range(2, n_max + 1):
        p, s = count_hom_path(n, h), closed_form_star(n, h)
        rows.append(Row(path(n), p))
        rows.append(Row(star(n), s))
        if p > s:
            bad.append(Row(path(n), p))
    return VerificationReport(
        theorem="hoffman-london",
        family=f"paths-and-stars(2<=n<={n_max})",
        h_label=_h_label(h, label),
        h_certificate=certificate(h),
        rows=rows,
        extremal=[],
        equality="n/a",
        verdict="violated" if bad else "confirmed",
        witnesses=bad,
    )


def search_tree_min_violation(h: HGraph, n: int, workers=None, cache=None) -> list[Row]:
    """Trees with strictly fewer H-colourings than P_n."""
    rows = _table(gen_trees(n), h, workers, cache)
    path_cert = canonical_certificate(path(n))
    p = next(r.count for r in rows if r.certificate == path_cert)
    return [r for r in rows if r.count < p]
