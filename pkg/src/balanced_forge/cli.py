"""Command-line front end.

Exit codes: 0 success (or affirmative verdict), 1 internal check failure,
2 usage or input error, 3 semantic negative (empty core, collection that
is not minimal balanced).
"""
import argparse
import json
import sys
import time
from fractions import Fraction

from . import __version__
from .core import format_coalition, parse_coalition
from .counting import count_total, count_spanning, count_cumulative, count_graphs, egf_table
from .hypergraph import (
    Hypergraph,
    parse_hypergraph,
    hypergraph_from_json,
    is_minimally_uniform,
    is_minimally_regular,
)
from .balanced import (
    BalancedCollection,
    parse_collection,
    find_balancing_weights,
    is_minimal_balanced,
)
from .enumeration import (
    TABLE1,
    enumerate_mbc,
    enumerate_mbc_oracle,
    enumerate_uniform,
    enumerate_minimally_uniform,
    mbc_via_duality,
    k_max,
    save_catalog,
    load_catalog,
    CatalogError,
)
from .games import game_from_json, random_game, core_lp, core_mbc
from .decomposition import decompose, decompose_all, IncompleteDecomposition

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_NEGATIVE = 3


def _frac_out(f):
    f = Fraction(f)
    return int(f) if f.denominator == 1 else str(f)


def _read(path):
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_hypergraph(path):
    text = _read(path)
    if text.lstrip().startswith("{"):
        return hypergraph_from_json(text), "json"
    return parse_hypergraph(text), "text"


# ---------------------------------------------------------------- mbc


def _cmd_mbc_enum(args):
    n = args.players
    if args.method == "direct":
        catalog = enumerate_mbc(n, threads=args.threads)
    elif args.method == "oracle":
        catalog = enumerate_mbc_oracle(n)
    else:
        catalog = mbc_via_duality(n, args.k_max)
    if args.out:
        fmt = "json" if args.out.endswith(".json") else "text"
        save_catalog(catalog, args.out, fmt=fmt)
    if args.json:
        print(
            json.dumps(
                {
                    "n": n,
                    "method": catalog.method,
                    "count": catalog.count,
                    "out": args.out,
                }
            )
        )
    else:
        print("count=%d" % catalog.count)
    return EXIT_OK


def _cmd_mbc_check(args):
    if args.infile:
        text = _read(args.infile)
    elif args.collection:
        text = args.collection
    else:
        raise ValueError("give --in or --collection")
    text = text.strip()
    if ":" in text:
        bc = parse_collection(text)
        n, masks, weights = bc.n, bc.coalitions, bc.weights
        balanced = True
    else:
        # weightless form n=3; [{1,2}, {1,3}]: decide balancedness here
        head, _, body = text.partition(";")
        if not head.replace(" ", "").startswith("n="):
            raise ValueError("expected 'n=<players>; [...]'")
        n = int(head.split("=", 1)[1])
        body = body.strip()
        if not (body.startswith("[") and body.endswith("]")):
            raise ValueError("expected a bracketed coalition list")
        parts = []
        depth = 0
        cur = ""
        for ch in body[1:-1]:
            if ch == "{":
                depth += 1
            elif ch == "}":
                depth -= 1
            if ch == "," and depth == 0:
                parts.append(cur)
                cur = ""
            else:
                cur += ch
        if cur.strip():
            parts.append(cur)
        masks = tuple(sorted(parse_coalition(tok.strip(), n) for tok in parts))
        weights = find_balancing_weights(n, masks)
        balanced = weights is not None
    minimal = balanced and is_minimal_balanced(n, masks)
    if args.json:
        print(
            json.dumps(
                {
                    "n": n,
                    "coalitions": [format_coalition(s) for s in masks],
                    "balanced": balanced,
                    "minimal": minimal,
                    "weights": {format_coalition(s): str(weights[s]) for s in masks}
                    if balanced
                    else None,
                }
            )
        )
    else:
        print("balanced=%s minimal=%s" % (str(balanced).lower(), str(minimal).lower()))
        if balanced:
            print(BalancedCollection(n, weights).to_text())
    return EXIT_OK if minimal else EXIT_NEGATIVE


# ---------------------------------------------------------------- hyper


def _cmd_hyper_count(args):
    if args.graphs:
        if args.nodes is None:
            raise ValueError("--graphs needs --nodes")
        value = count_graphs(args.nodes)
        label = "graphs"
    elif args.table is not None:
        if args.degree is None or args.size is None:
            raise ValueError("--table needs --degree and --size")
        table = egf_table(args.degree, args.size, args.table)
        if args.json:
            print(table.to_json())
        else:
            sys.stdout.write(table.to_csv())
        return EXIT_OK
    else:
        if args.nodes is None or args.degree is None or args.size is None:
            raise ValueError("need --nodes, --degree and --size")
        if args.cumulative:
            value = count_cumulative(args.nodes, args.degree, args.size)
            label = "cumulative"
        elif args.total:
            value = count_total(args.nodes, args.degree, args.size)
            label = "total"
        else:
            value = count_spanning(args.nodes, args.degree, args.size)
            label = "spanning"
    if args.json:
        print(json.dumps({"kind": label, "count": value}))
    else:
        print(value)
    return EXIT_OK


def _cmd_hyper_enum(args):
    if args.minimal:
        hs = enumerate_minimally_uniform(args.nodes, args.degree, args.size)
    else:
        hs = enumerate_uniform(args.nodes, args.degree, args.size, spanning=args.spanning)
    if args.json:
        print(
            json.dumps(
                {"count": len(hs), "hypergraphs": [json.loads(h.to_json()) for h in hs]}
            )
        )
    else:
        for h in hs:
            print(h.to_text())
        print("count=%d" % len(hs))
    return EXIT_OK


def _cmd_hyper_dual(args):
    h, fmt = _load_hypergraph(args.infile)
    d = h.dual()
    if args.json or fmt == "json":
        print(d.to_json())
    else:
        print(d.to_text())
    return EXIT_OK


def _cmd_hyper_decompose(args):
    h, _ = _load_hypergraph(args.infile)
    parts = decompose_all(h) if args.all else [decompose(h)]
    if args.json:
        print(
            json.dumps(
                {
                    "n": h.n,
                    "size": h.size,
                    "partitions": [
                        {
                            "blocks": [list(b) for b in p.block_nodes()],
                            "degrees": list(p.degrees),
                        }
                        for p in parts
                    ],
                }
            )
        )
    else:
        for p in parts:
            print(json.dumps([list(b) for b in p.block_nodes()]))
    return EXIT_OK


# ---------------------------------------------------------------- game


def _cmd_game_core(args):
    g = game_from_json(_read(args.game))
    if args.catalog:
        catalog = load_catalog(args.catalog)
        verdict = core_mbc(g, catalog)
    else:
        verdict = core_lp(g)
    if args.json:
        print(
            json.dumps(
                {
                    "nonempty": verdict.nonempty,
                    "payment": [_frac_out(x) for x in verdict.payment]
                    if verdict.nonempty
                    else None,
                    "collection": None
                    if verdict.nonempty
                    else verdict.collection.to_text(),
                    "efficiency": None
                    if verdict.nonempty
                    else _frac_out(verdict.efficiency),
                }
            )
        )
    elif verdict.nonempty:
        print("core: nonempty")
        print("x = (%s)" % ", ".join(str(x) for x in verdict.payment))
    else:
        print("core: empty")
        print("collection: %s" % verdict.collection.to_text())
        print(
            "efficiency: %s > v(N) = %s"
            % (verdict.efficiency, g.worth((1 << g.n) - 1))
        )
    return EXIT_OK if verdict.nonempty else EXIT_NEGATIVE


def _cmd_game_random(args):
    g = random_game(args.players, args.seed, magnitude=args.magnitude)
    text = g.to_json()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
        if not args.json:
            print("wrote %s" % args.out)
        else:
            print(json.dumps({"out": args.out, "n": g.n}))
    else:
        print(text)
    return EXIT_OK


# ---------------------------------------------------------------- verify


def _verify_table1(args):
    checks = []
    for n in range(2, args.max_n + 1):
        t0 = time.monotonic()
        got = enumerate_mbc(n).count
        dt = time.monotonic() - t0
        checks.append(("table1 n=%d" % n, got == TABLE1[n], "count=%d want=%d time=%.2fs" % (got, TABLE1[n], dt)))
    return checks


def _verify_example8(args):
    checks = []
    checks.append(("cumulative(3,2,3)", count_cumulative(3, 2, 3) == 8, "=%d want 8" % count_cumulative(3, 2, 3)))
    checks.append(("spanning(2,2,3)", count_spanning(2, 2, 3) == 1, "=%d want 1" % count_spanning(2, 2, 3)))
    checks.append(("spanning(3,2,3)", count_spanning(3, 2, 3) == 7, "=%d want 7" % count_spanning(3, 2, 3)))
    e7 = len(enumerate_uniform(3, 2, 3, spanning=True))
    e1 = len(enumerate_uniform(2, 2, 3, spanning=True))
    m1 = len(enumerate_minimally_uniform(3, 2, 3))
    checks.append(("enum(3,2,3,span)", e7 == 7, "=%d want 7" % e7))
    checks.append(("enum(2,2,3,span)", e1 == 1, "=%d want 1" % e1))
    checks.append(("minimal(3,2,3)", m1 == 1, "=%d want 1" % m1))
    return checks


def _proper_hypergraphs(n, p_cap):
    """All PROPER hypergraphs on n nodes with at most p_cap edges."""
    import itertools

    full = (1 << n) - 1
    nonempty = list(range(1, 1 << n))
    for p in range(1, p_cap + 1):
        for edges in itertools.combinations_with_replacement(nonempty, p):
            cover = 0
            for e in edges:
                cover |= e
            if cover == full:
                yield Hypergraph(n, edges)


def _verify_prop1(args):
    checks = []
    for n in range(1, args.max_nodes + 1):
        total = 0
        bad = 0
        involution_bad = 0
        for h in _proper_hypergraphs(n, args.max_size):
            total += 1
            d = h.dual()
            if is_minimally_uniform(h) != is_minimally_regular(d):
                bad += 1
            if d.dual() != h.canonicalize():
                involution_bad += 1
        checks.append(
            ("prop1 n=%d equivalence" % n, bad == 0, "%d mismatches / %d hypergraphs" % (bad, total))
        )
        checks.append(
            ("prop1 n=%d dual involution" % n, involution_bad == 0, "%d failures" % involution_bad)
        )
    return checks


def _verify_prop2(args):
    checks = []
    for n in range(1, args.max_nodes + 1):
        total = 0
        failed = 0
        for k in range(1, min(3, n) + 1):
            for p in range(1, 5):
                for h in enumerate_uniform(n, k, p, spanning=True):
                    total += 1
                    try:
                        decompose(h)
                    except IncompleteDecomposition:
                        failed += 1
        checks.append(
            ("prop2 n=%d existence" % n, failed == 0, "%d failures / %d hypergraphs" % (failed, total))
        )
    fig = Hypergraph(7, [0b0001111, 0b1110001, 0b0111100, 0b1101100])
    found = {frozenset(p.blocks) for p in decompose_all(fig)}
    want1 = frozenset({0b0100101, 0b1011010})
    want2 = frozenset({0b0100010, 0b1011101})
    checks.append(("prop2 non-uniqueness", want1 in found and want2 in found, "%d partitions" % len(found)))
    return checks


def _verify_sharpbs(args):
    checks = []
    for n in range(2, args.max_n + 1):
        catalog = enumerate_mbc(n)
        agree = True
        certs = True
        for seed in range(args.games):
            g = random_game(n, seed)
            a = core_lp(g)
            b = core_mbc(g, catalog)
            if a.nonempty != b.nonempty:
                agree = False
                break
            vn = g.worth((1 << n) - 1)
            if a.nonempty:
                x = a.payment
                if sum(x) != vn or any(
                    sum(x[i] for i in range(n) if s >> i & 1) < g.worth(s)
                    for s in range(1, 1 << n)
                ):
                    certs = False
                    break
            else:
                for v in (a, b):
                    ws = v.collection.weights
                    eff = sum(ws[s] * g.worth(s) for s in v.collection.coalitions)
                    if eff != v.efficiency or not eff > vn:
                        certs = False
                if not certs:
                    break
        checks.append(("sharpbs n=%d agreement" % n, agree, "%d games" % args.games))
        checks.append(("sharpbs n=%d certificates" % n, certs, "exact revalidation"))
    return checks


_SUITES = {
    "table1": _verify_table1,
    "example8": _verify_example8,
    "prop1": _verify_prop1,
    "prop2": _verify_prop2,
    "sharpbs": _verify_sharpbs,
}


def _cmd_verify(args):
    checks = _SUITES[args.suite](args)
    ok = all(c[1] for c in checks)
    if args.json:
        print(
            json.dumps(
                {
                    "suite": args.suite,
                    "ok": ok,
                    "checks": [
                        {"name": name, "ok": good, "detail": detail}
                        for name, good, detail in checks
                    ],
                }
            )
        )
    else:
        for name, good, detail in checks:
            print("%s %s (%s)" % ("ok  " if good else "FAIL", name, detail))
        print("suite %s: %s" % (args.suite, "pass" if ok else "FAIL"))
    return EXIT_OK if ok else EXIT_FAIL


# ---------------------------------------------------------------- parser


def _build_parser():
    p = argparse.ArgumentParser(
        prog="balforge",
        description="Minimal balanced collections, core tests, and uniform hypergraph counting, all in exact arithmetic.",
    )
    p.add_argument("--version", action="version", version="balanced-forge %s" % __version__)
    sub = p.add_subparsers(dest="command", required=True)

    mbc = sub.add_parser("mbc", help="minimal balanced collections")
    mbc_sub = mbc.add_subparsers(dest="subcommand", required=True)

    enum = mbc_sub.add_parser("enum", help="enumerate and optionally save a catalog")
    enum.add_argument("--players", type=int, required=True)
    enum.add_argument("--method", choices=("direct", "duality", "oracle"), default="direct")
    enum.add_argument("--out", help="catalog path (.json for the JSON variant)")
    enum.add_argument("--k-max", type=int, default=None, help="duality method: cap on the cover degree")
    enum.add_argument("--threads", type=int, default=None, help="direct method: worker processes")
    enum.add_argument("--json", action="store_true")
    enum.set_defaults(func=_cmd_mbc_enum)

    check = mbc_sub.add_parser("check", help="test a collection for minimal balancedness")
    check.add_argument("--in", dest="infile", help="file holding one collection line")
    check.add_argument("--collection", help="collection literal, weights optional")
    check.add_argument("--json", action="store_true")
    check.set_defaults(func=_cmd_mbc_check)

    hyper = sub.add_parser("hyper", help="uniform and regular hypergraphs")
    hyper_sub = hyper.add_subparsers(dest="subcommand", required=True)

    hc = hyper_sub.add_parser("count", help="closed-form counts")
    hc.add_argument("--nodes", type=int)
    hc.add_argument("--degree", type=int, help="edge cardinality k")
    hc.add_argument("--size", type=int, help="edge count p")
    hc.add_argument("--cumulative", action="store_true", help="spanning counts summed over node counts up to --nodes")
    hc.add_argument("--total", action="store_true", help="spanning not required")
    hc.add_argument("--graphs", action="store_true", help="simple graphs on --nodes labeled nodes")
    hc.add_argument("--table", type=int, metavar="N_MAX", help="CSV table of spanning counts for n=0..N_MAX")
    hc.add_argument("--json", action="store_true")
    hc.set_defaults(func=_cmd_hyper_count)

    he = hyper_sub.add_parser("enum", help="list uniform hypergraphs")
    he.add_argument("--nodes", type=int, required=True)
    he.add_argument("--degree", type=int, required=True)
    he.add_argument("--size", type=int, required=True)
    he.add_argument("--spanning", action="store_true")
    he.add_argument("--minimal", action="store_true", help="minimally uniform only")
    he.add_argument("--json", action="store_true")
    he.set_defaults(func=_cmd_hyper_enum)

    hd = hyper_sub.add_parser("dual", help="dual of a proper hypergraph")
    hd.add_argument("--in", dest="infile", required=True)
    hd.add_argument("--json", action="store_true")
    hd.set_defaults(func=_cmd_hyper_dual)

    hdec = hyper_sub.add_parser("decompose", help="partition into minimally uniform blocks")
    hdec.add_argument("--in", dest="infile", required=True)
    hdec.add_argument("--all", action="store_true", help="every partition, not just the first")
    hdec.add_argument("--json", action="store_true")
    hdec.set_defaults(func=_cmd_hyper_decompose)

    game = sub.add_parser("game", help="TU games and the core")
    game_sub = game.add_subparsers(dest="subcommand", required=True)

    gc = game_sub.add_parser("core", help="core nonemptiness with certificate")
    gc.add_argument("--game", required=True, help="game JSON path")
    gc.add_argument("--catalog", help="catalog path; use the sharp criterion against it")
    gc.add_argument("--json", action="store_true")
    gc.set_defaults(func=_cmd_game_core)

    gr = game_sub.add_parser("random", help="seeded random game")
    gr.add_argument("--players", type=int, required=True)
    gr.add_argument("--seed", type=int, required=True)
    gr.add_argument("--magnitude", type=int, default=100)
    gr.add_argument("--out")
    gr.add_argument("--json", action="store_true")
    gr.set_defaults(func=_cmd_game_random)

    ver = sub.add_parser("verify", help="self-contained verification suites")
    ver.add_argument("suite", choices=sorted(_SUITES))
    ver.add_argument("--max-n", type=int, default=None)
    ver.add_argument("--max-nodes", type=int, default=None)
    ver.add_argument("--max-size", type=int, default=4)
    ver.add_argument("--games", type=int, default=1000)
    ver.add_argument("--json", action="store_true")
    ver.set_defaults(func=_cmd_verify)

    return p


_VERIFY_DEFAULTS = {"table1": 5, "example8": 0, "prop1": 5, "prop2": 6, "sharpbs": 4}


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify":
        if args.max_n is None:
            args.max_n = _VERIFY_DEFAULTS[args.suite]
        if args.max_nodes is None:
            args.max_nodes = _VERIFY_DEFAULTS[args.suite]
    try:
        return args.func(args)
    except (ValueError, CatalogError, OSError, json.JSONDecodeError, KeyError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except IncompleteDecomposition as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
