"""Command line entry point.  JSON (or CSV) on stdout, logs on stderr.

Exit codes: 0 ok, 1 a checked claim failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import __version__, bounds, constructions as C, counting, trees
from .graph import Graph, GraphError, complete_graph, cycle_graph, path_graph, star_graph
from .graph6 import decode_g6, encode_g6
from .oracle import CertificateStore, ex_exact, ex_lower_search
from .verify import SUITES, run_verify

log = logging.getLogger("genturan")

NAMED = {
    "K": lambda k: complete_graph(int(k)),
    "C": lambda k: cycle_graph(int(k)),
    "P": lambda k: path_graph(int(k)),
    "S": lambda k: star_graph(int(k)),
}


class UsageError(Exception):
    pass


def load_graph(spec: str) -> Graph:
    """A graph from a file (graph6 or JSON), an inline graph6 string, or a
    short name such as K4, C5, P3 (vertices) or S3 (leaves)."""
    if os.path.exists(spec):
        with open(spec, encoding="utf-8") as fh:
            text = fh.read().strip()
        if text.startswith("{"):
            return Graph.from_json(text)
        return decode_g6(text.splitlines()[0])
    if len(spec) >= 2 and spec[0] in NAMED and spec[1:].isdigit():
        return NAMED[spec[0]](spec[1:])
    return decode_g6(spec)


def parse_params(items: list[str] | None) -> dict[str, str]:
    out = {}
    for item in items or []:
        if "=" not in item:
            raise UsageError(f"parameter {item!r} is not key=value")
        k, v = item.split("=", 1)
        out[k.strip().replace("-", "_")] = v.strip()
    return out


def _ints(text: str) -> list[int]:
    return [int(x) for x in text.replace(",", " ").split()]


def _graph_out(g: Graph, fmt: str) -> dict:
    if fmt == "json":
        return {"graph": g.to_dict()}
    return {"g6": encode_g6(g.strip_loops()), "loops": sorted(g.loops), "n": g.n, "m": g.m}


# -- generators --------------------------------------------------------------------------------


def _gen(name: str, p: dict[str, str], seed: int):
    """Return (graph or None, extra dict)."""
    req = lambda key: p[key] if key in p else (_ for _ in ()).throw(UsageError(f"{name} needs {key}=..."))  # noqa: E731
    if name == "uniform-blowup":
        return C.uniform_blowup(load_graph(req("base")), int(req("s"))), {}
    if name == "partial-blowup":
        spec = C.BlowupSpec(load_graph(req("base")), tuple(_ints(p.get("fixed", ""))), int(req("h")))
        g = C.partial_blowup(spec)
        return Graph.from_adjacency(g.adj), {"origin": g.origin}
    if name == "friendship":
        return C.friendship(int(req("k"))), {}
    if name == "book":
        return C.book(int(req("s"))), {}
    if name == "multipartite":
        return C.multipartite(_ints(req("sizes"))), {}
    if name == "turan":
        return C.turan(int(req("n")), int(req("r"))), {}
    if name == "norm":
        return C.norm_graph(int(req("q")), int(p.get("s", 3))), {}
    if name == "furedi":
        return C.furedi_graph(int(req("q")), int(req("t"))), {}
    if name == "behrend":
        res = C.behrend_set(int(req("n")))
        return None, {"elements": res.elements, "size": res.size, "method": res.method}
    if name == "rsz":
        n = int(req("n"))
        S = _ints(p["S"]) if "S" in p else C.behrend_set(n).elements
        return C.rsz_graph(n, S), {"S": S}
    if name == "random-girth":
        g, stats = C.random_girth_graph(C.RandomGirthParams(int(req("n")), int(req("k")), seed))
        return g, {"stats": stats}
    if name == "clique-union":
        return C.clique_union(int(req("n")), int(req("t"))), {}
    if name == "hypergraph":
        h = C.greedy_girth5_hypergraph(int(req("n")), int(req("m")), seed)
        return C.hyper_to_graph(h), {"hyperedges": [list(e) for e in h.edges], "girth_ge_5": C.berge_girth_at_least_5(h)}
    if name == "incidence":
        return C.incidence_graph(load_graph(req("g"))), {}
    if name == "amplifier":
        return C.min_degree_amplifier(load_graph(req("g"))), {}
    raise UsageError(f"unknown generator {name!r}")


GENERATORS = [
    "uniform-blowup", "partial-blowup", "friendship", "book", "multipartite", "turan", "norm", "furedi",
    "behrend", "rsz", "random-girth", "clique-union", "hypergraph", "incidence", "amplifier",
]


def cmd_gen(args) -> tuple[dict, int]:
    g, extra = _gen(args.name, parse_params(args.param), args.seed)
    out = {"generator": args.name, "seed": args.seed, **extra}
    if g is not None:
        out.update(_graph_out(g, args.out))
    if args.stats_out:
        with open(args.stats_out, "w", encoding="utf-8") as fh:
            json.dump(extra, fh, sort_keys=True)
    return out, 0


def cmd_count(args) -> tuple[dict, int]:
    host = load_graph(args.host)
    out = {"host_n": host.n}
    if args.what == "copies":
        pattern = load_graph(args.pattern)
        out["copies"] = counting.count_copies(host.strip_loops(), pattern)
    elif args.what == "aut":
        out["automorphisms"] = counting.automorphism_count(host)
    elif args.what == "triangles":
        out["triangles"] = counting.count_triangles(host)
    elif args.what == "walks3":
        out["closed_walks_3"] = counting.closed_walk_count_3(host)
    elif args.what == "book-width":
        out["max_book_width"] = counting.max_book_width(host)
    elif args.what == "friendship":
        emb = counting.find_friendship(host.strip_loops(), args.c)
        out["friendship"] = None if emb is None else {"hub": emb.hub, "pairs": [list(p) for p in emb.pairs]}
    return out, 0


def cmd_spectrum(args) -> tuple[dict, int]:
    g = load_graph(args.input)
    sp = counting.spectrum(g, tol=args.tol)
    return {"n": g.n, "loops": len(g.loops), "clusters": [[v, m] for v, m in sp.clusters], "eigenvalues": sp.eigenvalues}, 0


def cmd_free(args) -> tuple[dict, int]:
    host, pattern = load_graph(args.host), load_graph(args.pattern)
    if args.kst:
        s, t = _ints(args.kst)
        free = counting.is_kst_free(host, s, t)
    else:
        free = not counting.contains_copy(host, pattern)
    return {"free": free}, 0


def cmd_bounds(args) -> tuple[dict, int]:
    p = {k: int(v) for k, v in parse_params(args.param).items()}
    if args.formula == "erdos-turan":
        n, t, k = p["n"], p["t"], p["k"]
        return {"formula": "erdos-turan", "params": p, "value": bounds.erdos_turan_count(n, t, k), "exact": True}, 0
    if args.formula == "multipartite":
        pattern = load_graph(args.pattern) if args.pattern else complete_graph(p.get("m", 3))
        sizes, count = bounds.multipartite_maximize(p["n"], p["classes"], pattern)
        return {"formula": "multipartite", "params": p, "sizes": sizes, "value": count, "exact": True}, 0
    if args.formula == "k3-growth":
        res = bounds.classify_k3_growth(load_graph(args.pattern))
        return {"formula": "k3-growth", "kind": res.kind, "constant": res.constant, "reason": res.reason}, 0
    if args.formula == "blowup-contains":
        return {"formula": "blowup-contains", "value": bounds.blowup_contains(load_graph(args.t), load_graph(args.pattern))}, 0
    if args.formula not in bounds.BOUNDS:
        raise UsageError(f"unknown formula {args.formula!r}")
    fn, names = bounds.BOUNDS[args.formula]
    missing = [x for x in names if x not in p]
    if missing:
        raise UsageError(f"{args.formula} needs {', '.join(missing)}")
    return fn(*(p[x] for x in names)).to_dict(), 0


def cmd_trees(args) -> tuple[dict, int]:
    if args.action == "m":
        t, h = load_graph(args.t), load_graph(args.h)
        res = trees.m_value(t, h)
        return {"m": res.m, "U": list(res.witness)}, 0
    if args.action == "theta":
        t, h = load_graph(args.t), load_graph(args.h)
        res = trees.theta_alpha_check(t, h, args.mode, args.budget)
        out = res.to_dict()
        if res.U is not None:
            b = trees.witness_blowup(t, res.U, args.witness_n) if args.witness_n else C.partial_blowup(C.BlowupSpec(t, res.U, h.n))
            out["blowup_g6"] = encode_g6(Graph.from_adjacency(b.adj))
        return out, 0
    if args.action == "reduce":
        g = load_graph(args.g)
        T, H = trees.hamilton_reduce(g)
        out = {"T_g6": encode_g6(T), "H_g6": encode_g6(H), "has_hamilton_path": trees.has_hamilton_path(g)}
        if args.check:
            out["theta"] = trees.theta_alpha_check(T, H).holds
        return out, 0
    if args.action == "covers":
        g = load_graph(args.g)
        size, it = trees.min_edge_covers(g, budget=args.budget)
        return {"alpha": trees.max_independent_set(g), "size": size, "covers": [[list(e) for e in c.edges] for c in it]}, 0
    raise UsageError(f"unknown trees action {args.action!r}")


def cmd_oracle(args) -> tuple[dict, int]:
    t, h = load_graph(args.t), load_graph(args.h)
    if args.search:
        cert = ex_lower_search(args.n, t, h, seed=args.seed, budget=args.budget)
    else:
        cert = ex_exact(args.n, t, h)
    if args.store:
        CertificateStore(args.store).put(cert)
    out = json.loads(cert.to_json())
    if args.deterministic:
        out.pop("elapsed", None)
    return out, 0


def _verify_one(job):
    suite, scale, seed = job
    return run_verify(suite, scale, seed)


def cmd_verify(args) -> tuple[dict | list, int]:
    suites = list(SUITES) if args.suite == "all" else [args.suite]
    if args.suite != "all" and args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from all, {', '.join(SUITES)}")
    jobs = [(s, args.scale, args.seed) for s in suites]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as ex:
            reports = list(ex.map(_verify_one, jobs))
    else:
        reports = [_verify_one(j) for j in jobs]
    for r in reports:
        log.info("suite %s: %s", r.suite, r.status)
    code = 0 if all(r.status == "pass" for r in reports) else 1
    if args.csv:
        return _reports_csv(reports), code
    body = [r.to_dict(args.deterministic) for r in reports]
    return (body[0] if len(body) == 1 else {"status": "pass" if code == 0 else "fail", "reports": body}), code


def _reports_csv(reports) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["suite", "claim", "anchor", "expected", "measured", "tol", "status"])
    for r in reports:
        for c in r.claims:
            w.writerow([r.suite, c.claim, c.anchor, json.dumps(c.expected), json.dumps(c.measured), json.dumps(c.tol), c.status])
    return buf.getvalue()


# -- parser ------------------------------------------------------------------------------------------


def _global_flags(p: argparse.ArgumentParser, default) -> None:
    """Flags accepted before or after the subcommand.  The subcommand copy
    uses SUPPRESS defaults so it only overrides when given."""
    pick = lambda value: value if default is None else default  # noqa: E731
    p.add_argument("--config", default=pick(None), help="JSON file of default option values (flags win)")
    p.add_argument("--jobs", type=int, default=pick(os.cpu_count() or 1), help="worker processes for verify --suite all")
    p.add_argument("--deterministic", action="store_true", default=pick(False), help="omit timings so reruns are byte-identical")
    p.add_argument("--csv", action="store_true", default=pick(False), help="CSV instead of JSON where tabular (verify)")
    p.add_argument("-v", "--verbose", action="store_true", default=pick(False), help="log progress to stderr")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="genturan", description="Generalized Turan numbers: constructions, counting, bounds and exact oracles.")
    parser.add_argument("--version", action="version", version=__version__)
    _global_flags(parser, None)
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common], help="run a generator")
    p.add_argument("name", choices=GENERATORS)
    p.add_argument("-p", "--param", action="append", metavar="KEY=VALUE", help="generator parameter, repeatable")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", choices=["g6", "json"], default="g6")
    p.add_argument("--stats-out", help="write run statistics to this JSON file")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("count", parents=[common], help="count copies, automorphisms, triangles, closed walks")
    p.add_argument("--host", required=True, help="graph file, inline graph6, or a name like K5")
    p.add_argument("--pattern")
    p.add_argument("--what", choices=["copies", "aut", "triangles", "walks3", "book-width", "friendship"], default="copies")
    p.add_argument("-c", type=int, default=2, help="friendship size for --what friendship")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("spectrum", parents=[common], help="adjacency spectrum with loop entries 1")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--tol", type=float, default=1e-7)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("free", parents=[common], help="is the host free of the pattern?")
    p.add_argument("--host", required=True)
    p.add_argument("--pattern", default="K3")
    p.add_argument("--kst", help="test K_{s,t}-freeness instead, as 's,t'")
    p.set_defaults(func=cmd_free)

    p = sub.add_parser("bounds", parents=[common], help="evaluate a bound or exact formula")
    p.add_argument("formula", help=f"one of erdos-turan, multipartite, k3-growth, blowup-contains, {', '.join(bounds.BOUNDS)}")
    p.add_argument("-p", "--param", action="append", metavar="KEY=VALUE")
    p.add_argument("--pattern")
    p.add_argument("--t")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("trees", parents=[common], help="tree and bipartite pattern tools")
    p.add_argument("action", choices=["m", "theta", "reduce", "covers"])
    p.add_argument("--t")
    p.add_argument("--h")
    p.add_argument("--g")
    p.add_argument("--mode", choices=["exists", "all"], default="exists")
    p.add_argument("--budget", type=int, default=10**5)
    p.add_argument("--witness-n", type=int, default=0, help="emit the witness blow-up scaled to n vertices")
    p.add_argument("--check", action="store_true", help="reduce: also run the cover criterion")
    p.set_defaults(func=cmd_trees)

    p = sub.add_parser("oracle", parents=[common], help="exact or heuristic ex(n,T,H)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", required=True)
    p.add_argument("--h", required=True)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", default=True)
    mode.add_argument("--search", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=2000)
    p.add_argument("--store", default=os.environ.get(CertificateStore.ENV), help="JSON-lines certificate file")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", parents=[common], help="run acceptance suites")
    p.add_argument("--suite", default="all", help=f"all or one of {', '.join(SUITES)}")
    p.add_argument("--scale", choices=["quick", "full"], default="quick")
    p.add_argument("--seed", type=int, default=1)
    p.set_defaults(func=cmd_verify)
    return parser


def _apply_config(parser: argparse.ArgumentParser, argv: list[str]) -> None:
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--config")
    known, _ = pre.parse_known_args(argv)
    if not known.config:
        return
    with open(known.config, encoding="utf-8") as fh:
        conf = json.load(fh)
    conf = {k.replace("-", "_"): v for k, v in conf.items()}
    parser.set_defaults(**conf)
    for action in parser._subparsers._group_actions:  # subcommand defaults too
        for sp in action.choices.values():
            sp.set_defaults(**{k: v for k, v in conf.items() if any(a.dest == k for a in sp._actions)})


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    parser = build_parser()
    try:
        _apply_config(parser, argv)
    except (OSError, json.JSONDecodeError) as exc:
        print(f"genturan: bad config: {exc}", file=sys.stderr)
        return 2
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    try:
        body, code = args.func(args)
    except (UsageError, GraphError, KeyError, ValueError) as exc:
        print(f"genturan: {exc}", file=sys.stderr)
        return 2
    if isinstance(body, str):
        sys.stdout.write(body)
    else:
        json.dump(body, sys.stdout, sort_keys=True)
        sys.stdout.write("\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
