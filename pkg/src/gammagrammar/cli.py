"""Command-line front end.

Exit codes: 0 success, 1 check failure, 2 usage error, 3 budget or time
limit exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import signal
import sys
from pathlib import Path

from . import actions, checks, combinat, gammalib, grammar, recurtab
from .polycore import Poly, PolySyntaxError, poly_parse

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


class TimeLimitExceeded(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _common_parser(suppress: bool) -> argparse.ArgumentParser:
    # shared flags are accepted before or after the subcommand
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--json", action="store_true", default=d(False), help="emit JSON")
    p.add_argument("--workers", type=int, default=d(1), metavar="N",
                   help="worker processes for enumeration")
    p.add_argument("--budget", type=int, default=d(None), metavar="N",
                   help=f"enumeration order ceiling (default: ${combinat.BUDGET_ENV} "
                        "or per-family defaults)")
    p.add_argument("--seed", type=int, default=d(0), metavar="S",
                   help="seed for randomized checks")
    p.add_argument("--time-limit", type=int, default=d(None), metavar="SEC",
                   help="hard wall-clock limit in seconds")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common_parser(suppress=True)
    parser = argparse.ArgumentParser(prog="gammagrammar", parents=[_common_parser(False)],
                                     description="Context-free grammars, gamma expansions "
                                                 "and the combinatorics behind them.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("derive", parents=[common], help="apply a grammar derivative")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--grammar", help=f"preset name ({', '.join(grammar.preset_names())})")
    src.add_argument("--rules", help="rules file with 'var -> polynomial' lines")
    src.add_argument("--alternating", help="comma-separated presets or rule files")
    p.add_argument("--start", required=True, help="start polynomial")
    p.add_argument("--steps", type=int, default=1, help="number of derivatives")
    p.add_argument("--rounds", type=int, default=1, help="rounds for --alternating")
    p.add_argument("--extra", type=int, default=0,
                   help="apply the first EXTRA alternating grammars once more")

    p = sub.add_parser("enumerate", parents=[common], help="statistic distribution")
    p.add_argument("--family", required=True, choices=combinat.FAMILIES)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--stats", help="stat:var list, e.g. asc:x,des:y")
    p.add_argument("--S", dest="extra", default="",
                   help="comma-separated values whose barred letter is removed "
                        "(jacobi-partial)")

    p = sub.add_parser("gamma", parents=[common], help="gamma expansion of a polynomial")
    p.add_argument("--poly", help="polynomial text; read from stdin when omitted "
                                  "(plain text or enumerate --json output)")
    p.add_argument("--z", default="z", help="slicing variable")
    p.add_argument("--pair", default="x,y", help="symmetric pair")
    p.add_argument("--univariate", action="store_true",
                   help="expand f(x) in x^k (1+x)^(d-2k)")
    p.add_argument("--var", help="variable for --univariate")
    p.add_argument("--d", type=int, help="basis degree for --univariate")

    p = sub.add_parser("table", parents=[common], help="recurrence coefficient table")
    p.add_argument("--name", required=True, choices=sorted(recurtab.TABLES))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("tsv", "json"), default=None)

    p = sub.add_parser("orbit", parents=[common], help="orbit decomposition under an action")
    p.add_argument("--family", required=True, choices=sorted(actions.ACTIONS))
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("verify", parents=[common], help="run catalog checks")
    p.add_argument("--check", default="all", help="check id, or 'all'")
    p.add_argument("--n", type=int, help="override the check's order ceiling")
    p.add_argument("--k", type=int, help="k ceiling for conjecture-jsp")
    p.add_argument("--list", action="store_true", help="list check ids and exit")
    p.add_argument("--timing", action="store_true", help="include wall time per check")
    return parser


def _resolve_grammar(ref: str) -> grammar.Grammar:
    if ref in grammar.preset_names():
        return grammar.preset(ref)
    path = Path(ref)
    if path.is_file():
        return grammar.load_rules(path)
    raise UsageError(f"unknown grammar {ref!r} (not a preset or a readable file)")


def cmd_derive(args, out) -> int:
    start = poly_parse(args.start)
    if args.alternating:
        gs = [_resolve_grammar(r.strip()) for r in args.alternating.split(",") if r.strip()]
        if args.rounds < 0 or not 0 <= args.extra <= len(gs):
            raise UsageError("need rounds >= 0 and 0 <= extra <= number of grammars")
        result = grammar.derive_alternating(gs, start, args.rounds, args.extra)
        meta = {"grammars": [g.name for g in gs], "rounds": args.rounds, "extra": args.extra}
    else:
        g = _resolve_grammar(args.grammar or args.rules)
        if args.steps < 0:
            raise UsageError("--steps must be nonnegative")
        result = grammar.derive_n(g, start, args.steps)
        meta = {"grammar": g.name, "steps": args.steps}
    if args.json:
        out.write(_dump({"start": str(start), "result": str(result), **meta}) + "\n")
    else:
        out.write(str(result) + "\n")
    return EXIT_OK


def cmd_enumerate(args, out) -> int:
    stats = combinat.parse_stats(args.stats or combinat.DEFAULT_STATS[args.family])
    extra = [int(v) for v in args.extra.split(",") if v.strip()]
    dist = combinat.distribution(args.family, args.n, stats, extra or None,
                                 workers=args.workers, budget=args.budget)
    if args.json:
        out.write(_dump(dist.to_json()) + "\n")
    else:
        out.write(str(dist.polynomial) + "\n")
    return EXIT_OK


def _read_poly_input(args, stdin) -> Poly:
    text = args.poly if args.poly is not None else stdin.read()
    text = text.strip()
    if not text:
        raise UsageError("no polynomial given (use --poly or stdin)")
    if text.startswith("{"):
        try:
            data = json.loads(text)
            text = data["polynomial"]
        except (ValueError, KeyError, TypeError):
            raise UsageError("JSON input needs a 'polynomial' field") from None
    return poly_parse(text)


def cmd_gamma(args, out, stdin) -> int:
    p = _read_poly_input(args, stdin)
    if args.univariate:
        if args.d is None:
            raise UsageError("--univariate needs --d")
        gv = gammalib.gamma_expand(p, args.d, args.var)
        if args.json:
            out.write(_dump(gv.to_json()) + "\n")
        else:
            out.write(" ".join(str(g) for g in gv.gammas) + "\n")
        return EXIT_OK
    pair = [v.strip() for v in args.pair.split(",")]
    if len(pair) != 2:
        raise UsageError("--pair needs two variables, e.g. x,y")
    exp = gammalib.partial_gamma(p, args.z, pair[0], pair[1])
    if args.json:
        out.write(_dump(exp.to_json()) + "\n")
    else:
        for i, (d, cs) in sorted(exp.slices.items()):
            out.write(f"{args.z}^{i}\td={d}\t{' '.join(str(c) for c in cs)}\n")
        if not exp.positive:
            out.write(f"negative coefficient at (i, j) = {exp.witness[:2]}: {exp.witness[2]}\n")
    return EXIT_OK


def cmd_table(args, out) -> int:
    if args.n < 0:
        raise UsageError("--n must be nonnegative")
    t = recurtab.table(args.name, args.n)
    fmt = args.format or ("json" if args.json else "tsv")
    out.write(t.dumps() + "\n" if fmt == "json" else t.to_tsv())
    return EXIT_OK


def cmd_orbit(args, out) -> int:
    reports = actions.orbit_decompose(args.family, args.n, budget=args.budget)
    if args.json:
        out.write(_dump({"family": args.family, "n": args.n,
                         "orbits": [r.to_json() for r in reports]}) + "\n")
    else:
        for r in reports:
            j = r.to_json()
            stats = " ".join(f"{k}={v}" for k, v in sorted(j["rep_stats"].items()))
            out.write(f"{j['rep']}\t{j['orbit_size']}\t{stats}\t{j['weight_poly']}\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    if args.list:
        for cid, e in checks.CATALOG.items():
            tag = " (report)" if e.report_only else ""
            out.write(f"{cid}\t{e.description}{tag}\n")
        return EXIT_OK
    ids = list(checks.CATALOG) if args.check == "all" else [c.strip() for c in
                                                            args.check.split(",")]
    unknown = [c for c in ids if c not in checks.CATALOG]
    if unknown:
        raise UsageError(f"unknown check id(s): {', '.join(unknown)}")
    params = {"n": args.n, "k": args.k, "seed": args.seed, "workers": args.workers}
    results = [checks.run_check(c, **params) for c in ids]
    failed = [r.id for r in results if r.status == "fail"]
    if args.json:
        out.write(_dump({"ok": not failed, "failed": failed,
                         "checks": [r.to_json(args.timing) for r in results]}) + "\n")
    else:
        for r in results:
            line = f"{r.id}\t{r.status}"
            if args.timing:
                line += f"\t{r.seconds:.2f}s"
            if r.counterexample:
                line += f"\t{r.counterexample['message']}"
            out.write(line + "\n")
    return EXIT_FAIL if failed else EXIT_OK


def _on_alarm(signum, frame):
    raise TimeLimitExceeded()


def main(argv=None, stdout=None, stdin=None, stderr=None) -> int:
    out = stdout or sys.stdout
    inp = stdin or sys.stdin
    err = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.workers < 1:
        err.write("gammagrammar: --workers must be at least 1\n")
        return EXIT_USAGE

    saved_env = os.environ.get(combinat.BUDGET_ENV)
    if args.budget is not None:
        # checks enumerate through library defaults, which read the env var
        os.environ[combinat.BUDGET_ENV] = str(args.budget)
    alarm = args.time_limit and hasattr(signal, "SIGALRM")
    if alarm:
        old_handler = signal.signal(signal.SIGALRM, _on_alarm)
        signal.alarm(args.time_limit)
    try:
        if args.command == "derive":
            return cmd_derive(args, out)
        if args.command == "enumerate":
            return cmd_enumerate(args, out)
        if args.command == "gamma":
            return cmd_gamma(args, out, inp)
        if args.command == "table":
            return cmd_table(args, out)
        if args.command == "orbit":
            return cmd_orbit(args, out)
        return cmd_verify(args, out)
    except (combinat.BudgetExceeded, TimeLimitExceeded) as exc:
        msg = str(exc) or f"time limit of {args.time_limit}s exceeded"
        err.write(f"gammagrammar: {msg}\n")
        return EXIT_BUDGET
    except (gammalib.NotSymmetric, gammalib.NotHomogeneous) as exc:
        err.write(f"gammagrammar: {type(exc).__name__}: {exc}\n")
        return EXIT_USAGE
    except (UsageError, PolySyntaxError, grammar.UnknownGrammar, grammar.UnknownVariable,
            combinat.UnsupportedFamily, combinat.UndefinedStatistic,
            recurtab.UnknownRecurrence, actions.UnsupportedAction, ValueError, OSError) as exc:
        err.write(f"gammagrammar: {exc}\n")
        return EXIT_USAGE
    finally:
        if alarm:
            signal.alarm(0)
            signal.signal(signal.SIGALRM, old_handler)
        if args.budget is not None:
            if saved_env is None:
                os.environ.pop(combinat.BUDGET_ENV, None)
            else:
                os.environ[combinat.BUDGET_ENV] = saved_env


def _entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    _entry()
