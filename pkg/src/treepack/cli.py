"""Command-line front end: ``treepack <command> ...``.

Stream commands write JSONL: a header line with the full configuration,
one line per update, and a closing summary line. Rationals are written as
"num/den" strings and infinity as "inf". Exit codes: 0 success, 1 failed
verification, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from ._common import INF, fmt_rational
from .multigraph import GraphError, MultiGraph, read_graph, read_stream


class VerificationError(AssertionError):
    pass


def _rat(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _num(x):
    """JSON-friendly number: ints stay ints, other rationals become 'num/den'."""
    if x == INF:
        return "inf"
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else fmt_rational(x)


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


class _Sink:
    """Line writer for --out (or stdout when no path is given)."""

    def __init__(self, path: str | None):
        self.path = path
        self.fh = open(path, "w", encoding="utf-8", newline="\n") if path else sys.stdout

    def write(self, obj) -> None:
        self.fh.write(_dumps(obj) + "\n")

    def text(self, s: str) -> None:
        self.fh.write(s)

    def close(self) -> None:
        if self.path:
            self.fh.close()
        else:
            self.fh.flush()


def _graph_info(path: str, g: MultiGraph) -> dict:
    return {"path": Path(path).name, "n": g.n, "m": g.m()}


# -- commands -----------------------------------------------------------------------


def cmd_mincut(args) -> int:
    from .mincut import MinCutConfig, MinCutEstimator
    from .oracles import stoer_wagner

    g = read_graph(args.graph)
    ups = read_stream(args.stream) if args.stream else []
    verify = args.verify or args.oracle or args.action == "verify"
    cfg = MinCutConfig(args.lambda_max, const=args.const, sparsify=args.sparsify, seed=args.seed)
    est = MinCutEstimator(cfg, g)
    out = _Sink(args.out)
    out.write({"kind": "header", "command": "mincut", "config": cfg.as_dict(),
               "graph": _graph_info(args.graph, g), "updates": len(ups), "verify": verify,
               "version": __version__})
    mismatches = 0
    for i, up in enumerate(ups):
        est.apply(up)
        rep = est.cut()
        row = {"update_index": i, "value": _num(rep.value), "source": rep.source,
               "witness_size": len(rep.edges)}
        if verify:
            lam, _ = stoer_wagner(est.g)
            row["oracle"] = _num(lam)
            ok = rep.value == lam if lam <= cfg.lambda_max else rep.value > cfg.lambda_max
            row["ok"] = ok
            mismatches += not ok
        out.write(row)
    out.write({"kind": "summary", "updates": len(ups), "final_value": _num(est.value()),
               "rebuilds": est.rebuilds, "mismatches": mismatches if verify else None})
    out.close()
    return 1 if mismatches else 0


def cmd_arboricity(args) -> int:
    from .arboricity import ArbConfig, make_estimator
    from .oracles import alpha_exact

    g = read_graph(args.graph)
    ups = read_stream(args.stream) if args.stream else []
    cfg = ArbConfig(eps=args.epsilon, alpha_max=args.alpha_max, mode=args.mode, seed=args.seed,
                    const=args.const, sample_scale=args.sample_scale)
    # log m uses the largest edge count the stream can reach
    m_max = g.m() + sum(1 for up in ups if up.op == "+")
    est = make_estimator(g, cfg, m_max)
    out = _Sink(args.out)
    out.write({"kind": "header", "command": "arboricity", "config": cfg.as_dict(),
               "graph": _graph_info(args.graph, g), "updates": len(ups), "m_max": m_max,
               "verify": args.verify, "version": __version__})
    bad = 0
    for i, up in enumerate(ups):
        est.apply(up)
        val = est.value()
        if val == INF:
            num, den = 1, 0
        else:
            val = Fraction(val)
            num, den = val.numerator, val.denominator
        row = {"update_index": i, "estimate_num": num, "estimate_den": den,
               "level": est.selected_level}
        if args.verify:
            a = alpha_exact(est.graph)
            row["oracle"] = _num(a)
            eps = Fraction(args.epsilon)
            ok = val == 0 if a == 0 else (1 - eps) * a <= val <= (1 + eps) * a
            row["ok"] = ok
            bad += not ok
        out.write(row)
    out.write({"kind": "summary", "updates": len(ups), "final_estimate": _num(est.value()),
               "mismatches": bad if args.verify else None})
    out.close()
    return 1 if bad else 0


def cmd_lowerbound(args) -> int:
    from .lowerbound import build_instance, full_schedule, scaled
    from .oracles import stoer_wagner

    inst = build_instance(args.n, args.k)
    P, rep = full_schedule(inst)
    doc = {"command": "lowerbound", "version": __version__, **rep.as_dict()}
    doc["trees"] = rep.size
    if args.scale and args.scale > 1:
        from .ideal import ideal_loads

        h, Ps = scaled(inst, P, args.scale)
        ideal = ideal_loads(h).loads
        err = max(abs(Fraction(Ps.L[e], Ps.size) - ideal[e]) for e in h.edges)
        lam, _ = stoer_wagner(h)
        doc["scaled"] = {"scale": args.scale, "size": Ps.size, "lambda": lam,
                         "error": fmt_rational(err)}
        P = Ps
    text = json.dumps(doc, sort_keys=True, indent=1) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    if args.dump_trees:
        Path(args.dump_trees).write_text(P.dump())
    return 0 if rep.greedy else 1


def cmd_existence(args) -> int:
    from .existence import small_packing

    g = read_graph(args.graph)
    P, rep = small_packing(g, args.epsilon)
    doc = {"command": "existence", "version": __version__, **rep.as_dict()}
    ok = rep.size <= rep.bound and rep.max_error <= Fraction(args.epsilon) / rep.phi
    doc["ok"] = ok
    if args.out:
        Path(args.out).write_text(P.dump())
    else:
        sys.stdout.write(P.dump())
    report = json.dumps(doc, sort_keys=True, indent=1) + "\n"
    if args.report:
        Path(args.report).write_text(report)
    else:
        sys.stdout.write(report)
    return 0 if ok else 1


def cmd_oracle(args) -> int:
    from .oracles import report

    g = read_graph(args.graph)
    r = report(g, args.what)
    doc = {"quantity": r.quantity, "value": _num(r.value), "method": r.method}
    if r.witness:
        doc["witness"] = list(r.witness)
    print(_dumps(doc))
    return 0


def cmd_pack(args) -> int:
    from .packing import build_greedy, is_greedy

    g = read_graph(args.graph)
    P = build_greedy(g, args.trees)
    if args.out:
        Path(args.out).write_text(P.dump())
    else:
        sys.stdout.write(P.dump())
    loads = {str(e): fmt_rational(P.rel_load(e)) for e in sorted(P.L)}
    print(_dumps({"trees": P.size, "loads": loads, "greedy": bool(is_greedy(g, P))}))
    return 0


def cmd_check(args) -> int:
    from .checks import SUITES

    results = SUITES[args.suite](quick=args.quick)
    failed = 0
    for r in results:
        print(r.line())
        if args.verbose:
            print(_dumps(r.detail))
        failed += not r.ok
    return 1 if failed else 0


# -- parser -------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    from .checks import SUITES

    p = argparse.ArgumentParser(prog="treepack", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"treepack {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("mincut", help="exact min-cut value along an update stream")
    s.add_argument("action", nargs="?", choices=["verify"],
                   help="'verify' is shorthand for --verify")
    s.add_argument("--lambda-max", type=int, required=True, help="largest cut value tracked exactly")
    s.add_argument("--sparsify", action="store_true", help="run on a (lambda_max+1)-sparsifier")
    s.add_argument("--const", type=_rat, default=Fraction(1536), help="tree-count constant")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--graph", required=True, help="initial graph file")
    s.add_argument("--stream", help="update stream file")
    s.add_argument("--out", help="JSONL report path (default stdout)")
    s.add_argument("--verify", action="store_true", help="compare with Stoer-Wagner after each update")
    s.add_argument("--oracle", action="store_true", help="same as --verify")
    s.set_defaults(func=cmd_mincut)

    s = sub.add_parser("arboricity", help="approximate arboricity along an update stream")
    s.add_argument("--mode", choices=["det", "simple", "oblivious", "adaptive"], default="det")
    s.add_argument("--epsilon", type=_rat, required=True)
    s.add_argument("--alpha-max", type=int, default=8)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--const", type=_rat, default=Fraction(24), help="tree-count constant")
    s.add_argument("--sample-scale", type=_rat, default=Fraction(1),
                   help="multiplier on the sampling probabilities")
    s.add_argument("--graph", required=True)
    s.add_argument("--stream")
    s.add_argument("--out")
    s.add_argument("--verify", action="store_true", help="compare with the exact oracle")
    s.set_defaults(func=cmd_arboricity)

    s = sub.add_parser("lowerbound", help="lower-bound instance and its greedy schedule")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--scale", type=int, default=1, help="duplicate every edge this many times")
    s.add_argument("--out", help="JSON report path (default stdout)")
    s.add_argument("--dump-trees", help="write the packing dump here")
    s.set_defaults(func=cmd_lowerbound)

    s = sub.add_parser("existence", help="small packing with error at most eps/Phi")
    s.add_argument("--epsilon", type=_rat, required=True)
    s.add_argument("--graph", required=True)
    s.add_argument("--out", help="packing dump path (default stdout)")
    s.add_argument("--report", help="JSON bound report path (default stdout)")
    s.set_defaults(func=cmd_existence)

    s = sub.add_parser("oracle", help="exact lambda, Phi, alpha or rho")
    s.add_argument("--what", choices=["lambda", "phi", "alpha", "rho"], required=True)
    s.add_argument("--graph", required=True)
    s.set_defaults(func=cmd_oracle)

    s = sub.add_parser("pack", help="static greedy packing and its load table")
    s.add_argument("--trees", type=int, required=True)
    s.add_argument("--graph", required=True)
    s.add_argument("--out", help="packing dump path (default stdout)")
    s.set_defaults(func=cmd_pack)

    s = sub.add_parser("check", help="run an acceptance suite")
    s.add_argument("suite", choices=sorted(SUITES))
    s.add_argument("--quick", action="store_true", help="smaller instance counts")
    s.add_argument("--verbose", action="store_true", help="print detail objects")
    s.set_defaults(func=cmd_check)
    return p


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (GraphError, ValueError, OSError) as exc:
        print(f"treepack: error: {exc}", file=sys.stderr)
        return 2
    except AssertionError as exc:
        print(f"treepack: verification failed: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
