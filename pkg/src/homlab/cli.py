"""Command-line interface.

Exit codes: 0 success (PASS or REPORT), 1 FAIL of a hard statement,
2 parse error, 3 size limit exceeded, 4 hypothesis not satisfied.
JSON goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .cache import CountCache
from .canon import CanonLimitError
from .extremal import (
    POOL,
    HypothesisError,
    ThresholdNotFound,
    check_lemma10,
    cycle_bound_threshold,
    path_bound_threshold,
    profile,
    verify_2conn_max,
    verify_cycle_kq,
    verify_hoffman_london,
    verify_tree_max,
    verify_tree_min,
    workers_from_env,
)
from .families import ALIASES, FamilySpec, IngestError, LimitError, gen_graphs, ingest_graph6_stream
from .formats import ParseError, parse_hgraph, serialize_graph6
from .hom import count_hom, count_hom_restricted
from .structure import (
    check_ear_decomposition,
    ear_decomposition,
    is_2_connected,
    is_2_edge_connected,
    is_minimally_2_connected,
    open_ear_decomposition,
)

EXIT_FAIL, EXIT_PARSE, EXIT_LIMIT, EXIT_NA = 1, 2, 3, 4

log = logging.getLogger("homlab")


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def load_h(spec: str):
    """Read an ``.hm`` file, or take ``pool:NAME`` from the built-in pool."""
    if spec.startswith("pool:"):
        name = spec[5:]
        if name not in POOL:
            raise ParseError(f"unknown pool target {name!r}; known: {', '.join(POOL)}")
        return POOL[name], name
    try:
        text = Path(spec).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"{spec}: {exc.strerror}") from None
    try:
        return parse_hgraph(text), Path(spec).stem
    except ParseError as exc:
        raise ParseError(f"{spec}: {exc}", exc.offset) from None


def load_graphs(path: str, strict: bool = True):
    try:
        with open(path, encoding="ascii", errors="replace") as fh:
            return list(ingest_graph6_stream(fh, strict=strict))
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror}") from None
    except IngestError as exc:
        raise ParseError(f"{path}: {exc}") from None


def _graphs_from_args(args):
    if args.graph:
        return load_graphs(args.graph)
    if args.family:
        return list(gen_graphs(FamilySpec(args.family, args.n)))
    raise SystemExit("one of --graph or --family is required")


def _cache(args):
    return CountCache(args.cache) if getattr(args, "cache", None) else None


# ---------------------------------------------------------------------------
# commands

def cmd_count(args) -> int:
    h, h_label = load_h(args.h)
    graphs = _graphs_from_args(args)
    pins = {}
    for item in args.pin or []:
        try:
            v, i = (int(x) for x in item.split("="))
        except ValueError:
            raise ParseError(f"bad --pin {item!r}; expected v=i") from None
        pins[v] = i
    cache = _cache(args)
    for g in graphs:
        if pins:
            for v, i in pins.items():
                if not (0 <= v < g.n and 0 <= i < h.q):
                    raise ParseError(f"pin {v}={i} out of range for n={g.n}, q={h.q}")
            c = count_hom_restricted(g, h, pins, strategy=args.strategy)
        else:
            c = cache.get(g, h) if cache is not None else None
            if c is None:
                c = count_hom(g, h, strategy=args.strategy)
                if cache is not None:
                    cache.put(g, h, c)
        out = {"graph": serialize_graph6(g), "h": h_label, "count": str(c)}
        if pins:
            out["pins"] = {str(v): i for v, i in sorted(pins.items())}
        print(_dump(out))
    return 0


def _require(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise SystemExit(f"verify {args.theorem}: missing --{', --'.join(missing)}")


def cmd_verify(args) -> int:
    cache = _cache(args)
    workers = workers_from_env()
    t = args.theorem
    if t == "lemma10":
        _require(args, "h", "k")
        h, label = load_h(args.h)
        rep = check_lemma10(h, args.k)
        status = "NOT-APPLICABLE" if not rep.applicable else ("PASS" if rep.holds else "FAIL")
        payload = {"theorem": "lemma10", "h": label, "status": status, **rep.to_json()}
        _write_out(args, payload, None)
        print(f"{status} lemma10 H={label} k={args.k} max_entry={rep.max_entry} bound={rep.bound}")
        if not rep.applicable:
            print(f"not-applicable: {rep.reason}", file=sys.stderr)
            return EXIT_NA
        return 0 if rep.holds else EXIT_FAIL

    graphs = load_graphs(args.graphs) if args.graphs else None
    if t == "tree-min":
        _require(args, "base", "ell", "n")
        base, label = load_h(args.base)
        rep = verify_tree_min(base, args.ell, args.n, label=label, workers=workers, cache=cache)
    elif t == "tree-max":
        _require(args, "h", "n")
        h, label = load_h(args.h)
        rep = verify_tree_max(h, args.n, label=label, workers=workers, cache=cache)
    elif t == "two-conn":
        _require(args, "h", "n")
        h, label = load_h(args.h)
        rep = verify_2conn_max(h, args.n, args.minimal, graphs, label=label, workers=workers, cache=cache)
    elif t == "cycle-kq":
        _require(args, "q", "n")
        fam = ALIASES.get(args.family or "2conn", args.family)
        rep = verify_cycle_kq(args.q, args.n, fam, graphs, workers=workers, cache=cache)
    elif t == "hoffman-london":
        _require(args, "h", "n")
        h, label = load_h(args.h)
        rep = verify_hoffman_london(h, args.n, label=label)
    else:  # argparse restricts choices
        raise SystemExit(f"unknown theorem {t}")
    _write_out(args, rep.to_json(), rep)
    print(rep.summary())
    return EXIT_FAIL if rep.status == "FAIL" else 0


def _write_out(args, payload, rep) -> None:
    if args.out:
        Path(args.out).write_text(json.dumps(payload, sort_keys=True, indent=2) + "\n", encoding="utf-8")
    if getattr(args, "csv", None) and rep is not None:
        Path(args.csv).write_text(rep.to_csv(), encoding="utf-8")


def cmd_bounds(args) -> int:
    h, _ = load_h(args.h)
    p = profile(h)
    out = {
        "delta": p.delta,
        "v_eq_delta": list(p.v_eq_delta),
        "s": str(p.s),
        "regular": p.regular,
        "connected": p.connected,
        "bipartite_loopless": p.bipartite_loopless,
    }
    if not p.regular:
        try:
            out["ell_H"] = path_bound_threshold(h)
        except ThresholdNotFound as exc:
            print(f"ell_H: {exc}", file=sys.stderr)
    elif p.connected:
        try:
            ct = cycle_bound_threshold(h)
            out["cycle_threshold"] = ct.threshold
            out["cycle_threshold_cutoff"] = ct.cutoff
        except ThresholdNotFound as exc:
            print(f"cycle_threshold: {exc}", file=sys.stderr)
    print(_dump(out))
    return 0


def cmd_gen(args) -> int:
    spec = FamilySpec(args.family, args.n)
    lines = [serialize_graph6(g) for g in gen_graphs(spec)]
    text = "".join(line + "\n" for line in lines)
    if args.out:
        Path(args.out).write_text(text, encoding="ascii")
        print(f"wrote {len(lines)} graphs to {args.out}", file=sys.stderr)
    else:
        sys.stdout.write(text)
    return 0


def cmd_analyze(args) -> int:
    for g in load_graphs(args.graph):
        two = is_2_connected(g)
        two_e = is_2_edge_connected(g)
        out = {
            "graph": serialize_graph6(g),
            "two_connected": two,
            "two_edge_connected": two_e,
            "minimally_two_connected": is_minimally_2_connected(g) if two else False,
            "ear_decomposition": None,
        }
        if two_e:
            dec = open_ear_decomposition(g) if two else ear_decomposition(g)
            problems = check_ear_decomposition(g, dec, require_open=two)
            if problems:
                raise AssertionError(f"ear decomposition failed its check: {problems}")
            out["ear_decomposition"] = dec.to_json()
        print(_dump(out))
    return 0


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="homlab", description="Exact homomorphism counting and extremal checks.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    fam_help = "family: " + ", ".join(sorted(ALIASES))

    c = sub.add_parser("count", help="count homomorphisms G -> H")
    c.add_argument("--graph", help="graph6 file, one graph per line")
    c.add_argument("--family", help=fam_help)
    c.add_argument("--n", type=int)
    c.add_argument("--h", required=True, help="target .hm file or pool:NAME")
    c.add_argument("--pin", action="append", metavar="V=I", help="pin G-vertex V to H-vertex I")
    c.add_argument("--strategy", default="auto", choices=["auto", "backtrack", "dp", "brute"])
    c.add_argument("--cache", metavar="DIR")
    c.set_defaults(func=cmd_count)

    v = sub.add_parser("verify", help="verify an extremal statement over a family")
    v.add_argument("theorem", choices=["tree-min", "tree-max", "two-conn", "cycle-kq", "lemma10", "hoffman-london"])
    v.add_argument("--h")
    v.add_argument("--base")
    v.add_argument("--ell", type=int)
    v.add_argument("--n", type=int)
    v.add_argument("--q", type=int)
    v.add_argument("--k", type=int)
    v.add_argument("--family", help="cycle-kq family: 2conn or 2econn")
    v.add_argument("--minimal", action="store_true", help="two-conn: minimally 2-connected graphs only")
    v.add_argument("--graphs", help="graph6 file replacing native generation")
    v.add_argument("--out", help="write the JSON report here")
    v.add_argument("--csv", help="write the count table as CSV here")
    v.add_argument("--cache", metavar="DIR")
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bounds", help="profile and thresholds of a target")
    b.add_argument("--h", required=True)
    b.set_defaults(func=cmd_bounds)

    g = sub.add_parser("gen", help="generate a family as graph6")
    g.add_argument("--family", required=True, help=fam_help)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--format", default="g6", choices=["g6"])
    g.add_argument("--out")
    g.set_defaults(func=cmd_gen)

    a = sub.add_parser("analyze", help="connectivity and ear decompositions")
    a.add_argument("--graph", required=True)
    a.set_defaults(func=cmd_analyze)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (ParseError, IngestError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (LimitError, CanonLimitError) as exc:
        print(f"limit exceeded: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except HypothesisError as exc:
        print(f"not-applicable: {exc}", file=sys.stderr)
        return EXIT_NA
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
