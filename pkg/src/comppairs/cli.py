"""Command-line interface.

Family files use the text layout described in :mod:`comppairs.io`: a header
``n=<N>``, then one set per line as comma-separated 1-indexed elements (``-``
for the empty set), sorted by mask.  Element i is bit i-1 of the mask.

Exit status is 0 on success, 1 when a verified bound fails (the failing rows
go to stderr) and 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import csv
import logging
import sys

from . import constructions as cons
from . import verify
from .compressions import all_down, all_left, all_up, compress_fixpoint, compress_step, down, left, up
from .counting import count_chains, count_comparable, count_cross
from .errors import ComparablesError
from .io import CSV_FIELDS, dumps, parse_family, read_family, render_family, rows_to_csv
from .lattice import mask_of
from .solver import Budget, load_result, solve_max, solve_min, solve_two_layer, store_result
from .solver.cache import iter_records, record_to_result, result_to_record

SEED_MAX = 1 << 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _seed(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"--seed must be an integer, got {text!r}") from None
    if not 0 <= v < SEED_MAX:
        raise argparse.ArgumentTypeError("--seed must be a 64-bit unsigned integer")
    return v


def _set_arg(text: str) -> int:
    """A set written as ``1,3`` or ``-``."""
    if text.strip() in ("", "-"):
        return 0
    try:
        return mask_of(int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad set {text!r}; write e.g. 1,3 or -") from None


def _need(args, *names):
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.cmd}: missing {', '.join(missing)}")


def _read(path: str):
    if path in ("-", "/dev/stdin"):
        return parse_family(sys.stdin.read(), path)
    return read_family(path)


def _emit(text: str, out: str | None = None):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# construct

CONSTRUCT_PARAMS = {
    "chain": ("n", "m"),
    "subcube": ("n", "lo", "hi"),
    "tower": ("n", "k"),
    "alon-frankl": ("n", "d"),
    "h": ("n", "k"),
    "f-star": ("n", "k", "m"),
    "middle-levels": ("n",),
    "full-cube": ("n",),
}


def cmd_construct(args):
    _need(args, *CONSTRUCT_PARAMS[args.name])
    name = args.name
    if name == "chain":
        f = cons.chain(args.n, args.m)
    elif name == "subcube":
        f = cons.subcube(args.n, args.lo, args.hi)
    elif name == "tower":
        f = cons.tower_of_cubes(args.n, args.k)
    elif name == "alon-frankl":
        f1, f2 = cons.alon_frankl(args.n, args.d)
        f = f1 if args.block == "1" else f2 if args.block == "2" else f1.union(f2)
    elif name == "h":
        f = cons.h_family(args.n, args.k)
    elif name == "f-star":
        f = cons.f_star(args.n, args.k, args.m)
    elif name == "middle-levels":
        f = cons.middle_levels(args.n)
    else:
        f = cons.subcube(args.n, 0, (1 << args.n) - 1)
    _emit(render_family(f), args.out)
    return 0


def cmd_count(args):
    f = _read(args.file)
    rec = count_comparable(f, engine=args.engine).as_record()
    rec["m"] = str(len(f))
    if args.chains is not None:
        rec["chains"] = {"r": str(args.chains), "count": str(count_chains(f, args.chains))}
    print(dumps(rec))
    return 0


def cmd_cross(args):
    a, b = _read(args.file_a), _read(args.file_b)
    print(dumps({"a": str(len(a)), "b": str(len(b)), "cross": str(count_cross(a, b))}))
    return 0


def cmd_verify(args):
    names = sorted(verify.CHECKS) if args.name == "all" else [args.name]
    if args.name != "all" and args.name not in verify.CHECKS:
        raise UsageError(f"verify: unknown check {args.name!r}; choose from all, "
                         + ", ".join(sorted(verify.CHECKS)))
    if args.seed is None and any(n in verify.RANDOMIZED for n in names):
        raise UsageError(f"verify {args.name}: randomized check needs --seed")
    rows, failed = [], []
    for name in names:
        for rep in verify.run_check(name, args.grid, args.seed or 0, args.trials):
            row = rep.as_row()
            rows.append(row)
            if not rep.holds:
                failed.append(row)
    _emit(rows_to_csv(rows), args.csv)
    if failed:
        writer = csv.DictWriter(sys.stderr, fieldnames=CSV_FIELDS, lineterminator="\n")
        for row in failed:
            writer.writerow(row)
        print(f"{len(failed)} of {len(rows)} checks failed", file=sys.stderr)
        return 1
    return 0


def parse_kinds(spec: str, n: int) -> list:
    """``left:1:2,down:3,up:1,left-all,down-all,up-all`` with 1-indexed elements."""
    out = []
    for tok in filter(None, (t.strip() for t in spec.split(","))):
        head, *nums = tok.split(":")
        try:
            idx = [int(x) - 1 for x in nums]
        except ValueError:
            raise UsageError(f"--kinds: bad index in {tok!r}") from None
        if tok == "left-all":
            out.extend(all_left(n))
        elif tok == "down-all":
            out.extend(all_down(n))
        elif tok == "up-all":
            out.extend(all_up(n))
        elif head == "left" and len(idx) == 2:
            out.append(left(*idx))
        elif head in ("down", "up") and len(idx) == 1:
            out.append((down if head == "down" else up)(idx[0]))
        else:
            raise UsageError(f"--kinds: cannot parse {tok!r}")
    if not out:
        raise UsageError("--kinds: no compressions given")
    return out


def cmd_compress(args):
    f = _read(args.file)
    kinds = parse_kinds(args.kinds, f.n)
    for c in kinds:
        c.validate(f.n)
    if args.fixpoint:
        f = compress_fixpoint(f, kinds)
    else:
        for c in kinds:
            f = compress_step(f, c)
    _emit(render_family(f), args.out)
    return 0


def cmd_solve(args):
    budget = None
    if args.budget:
        try:
            budget = Budget.parse(args.budget)
        except ValueError as exc:
            raise UsageError(f"--budget: {exc}") from None
    if args.problem == "two-layer":
        _need(args, "n", "k1", "k2", "a", "b")
        objective = "two_layer_max"
        params = {"k1": args.k1, "k2": args.k2, "a": args.a, "b": args.b}
    else:
        _need(args, "n", "m")
        objective = "max_c" if args.problem == "max" else "min_c"
        params = {"m": args.m}
    res = None
    if args.cache:
        res = load_result(args.cache, args.n, objective, params)
        if res is not None and not res.complete:
            res = None
    if res is None:
        sym = not args.no_symmetry
        if args.problem == "two-layer":
            res = solve_two_layer(args.n, args.k1, args.k2, args.a, args.b, budget, symmetry=sym)
        else:
            solve = solve_max if args.problem == "max" else solve_min
            res = solve(args.n, args.m, budget, symmetry=sym, workers=args.workers)
        if args.cache:
            store_result(args.cache, res)
    print(dumps(result_to_record(res)))
    return 0


REPORT_FIELDS = ["n", "objective", "params", "optimum", "complete", "nodes", "prunes", "elapsed"]


def cmd_report(args):
    records = []
    for rec in iter_records(args.cache_dir):
        record_to_result(rec)  # recount the witness before reporting it
        records.append(rec)
    records.sort(key=lambda r: (r["objective"], int(r["n"]), sorted(r["params"].items())))
    if args.format == "json":
        for rec in records:
            print(dumps(rec))
    else:
        writer = csv.DictWriter(sys.stdout, fieldnames=REPORT_FIELDS, lineterminator="\n")
        writer.writeheader()
        for rec in records:
            row = {k: rec[k] for k in REPORT_FIELDS}
            row["params"] = ";".join(f"{k}={v}" for k, v in sorted(rec["params"].items()))
            row["complete"] = "true" if rec["complete"] else "false"
            writer.writerow(row)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="comppairs", description="Comparable pairs in families of subsets of [n].")
    p.add_argument("-v", "--verbose", action="store_true", help="log engine choices and progress")
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    c = sub.add_parser("construct", help="write a named construction as a family file")
    c.add_argument("name", choices=sorted(CONSTRUCT_PARAMS))
    for flag in ("n", "k", "m", "d"):
        c.add_argument(f"--{flag}", type=int)
    c.add_argument("--lo", type=_set_arg, help="bottom set of a subcube, e.g. 1,2 or -")
    c.add_argument("--hi", type=_set_arg, help="top set of a subcube")
    c.add_argument("--block", choices=("1", "2", "union"), default="union",
                   help="which alon-frankl block to write")
    c.add_argument("--out")
    c.set_defaults(func=cmd_construct)

    c = sub.add_parser("count", help="count comparable pairs in a family file")
    c.add_argument("file")
    c.add_argument("--engine", choices=("naive", "fast", "auto"), default="auto")
    c.add_argument("--chains", type=int, metavar="R", help="also count R-chains")
    c.set_defaults(func=cmd_count)

    c = sub.add_parser("cross", help="count comparable cross pairs between two families")
    c.add_argument("file_a")
    c.add_argument("file_b")
    c.set_defaults(func=cmd_cross)

    c = sub.add_parser("verify", help="run a named bound sweep")
    c.add_argument("name", help="check name or 'all'")
    c.add_argument("--grid", choices=("default", "quick"), default="default")
    c.add_argument("--seed", type=_seed)
    c.add_argument("--trials", type=int)
    c.add_argument("--csv", metavar="FILE", help="write the CSV here instead of stdout")
    c.set_defaults(func=cmd_verify)

    c = sub.add_parser("compress", help="apply compressions to a family file")
    c.add_argument("file")
    c.add_argument("--kinds", required=True)
    c.add_argument("--fixpoint", action="store_true")
    c.add_argument("--out")
    c.set_defaults(func=cmd_compress)

    c = sub.add_parser("solve", help="exact search")
    c.add_argument("problem", choices=("max", "min", "two-layer"))
    for flag in ("n", "m", "k1", "k2", "a", "b"):
        c.add_argument(f"--{flag}", type=int)
    c.add_argument("--budget", help="nodes=<N>,seconds=<S>")
    c.add_argument("--cache", metavar="DIR")
    c.add_argument("--workers", type=int, default=1)
    c.add_argument("--no-symmetry", action="store_true")
    c.set_defaults(func=cmd_solve)

    c = sub.add_parser("report", help="summarise a solver cache")
    c.add_argument("cache_dir")
    c.add_argument("--format", choices=("csv", "json"), default="csv")
    c.set_defaults(func=cmd_report)
    return p


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (ComparablesError, ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> int:
    return run(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
