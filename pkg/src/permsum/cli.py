"""Command-line front end.

Exit codes: 0 success or witness found; 1 not found, budget exceeded or a
failed verification; 2 invalid input.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import constructors as C
from .dot import to_dot
from .functionals import (
    Functional,
    Witness,
    evaluate,
    format_rational,
    parse_rational,
    rational_from_json,
    rational_to_json,
)
from .perm import Permutation
from .search import (
    PartialResultError,
    SearchOptions,
    Status,
    enumerate_values,
    find_witness,
    integer_values,
)

EXIT_OK, EXIT_NOT_FOUND, EXIT_INVALID = 0, 1, 2


class UsageError(ValueError):
    pass


@dataclass
class OutputRecord:
    n: int | None = None
    functional: str | None = None
    target: Fraction | None = None
    value: Fraction | None = None
    perm: Permutation | None = None
    status: str = "ok"
    elapsed: float = 0.0
    nodes: int | None = None
    name: str | None = None
    message: str | None = None
    extra: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {"status": self.status}
        if self.name is not None:
            out["name"] = self.name
        if self.n is not None:
            out["n"] = self.n
        if self.functional is not None:
            out["functional"] = self.functional
        if self.target is not None:
            out["target"] = rational_to_json(self.target)
        if self.value is not None:
            out["value"] = rational_to_json(self.value)
        if self.perm is not None:
            out["perm"] = list(self.perm)
        if self.nodes is not None:
            out["nodes"] = self.nodes
        if self.message is not None:
            out["message"] = self.message
        out["elapsed"] = f"{self.elapsed:.3f}"
        out.update(self.extra)
        return out


def _verified(f: Functional, perm, claimed) -> Witness:
    # Re-validate and re-evaluate right before anything is printed.
    return Witness(Permutation(perm), f, claimed=claimed)


def _emit(args, records, text_lines):
    if args.json:
        payload = records[0].to_json() if len(records) == 1 and not args._many else [r.to_json() for r in records]
        print(json.dumps(payload, indent=2 if args.pretty else None))
    else:
        for line in text_lines:
            print(line)


def _options(args, **kw) -> SearchOptions:
    return SearchOptions(
        time_budget=args.timeout,
        node_budget=args.nodes,
        worker_count=args.workers,
        symmetry_reduction=not args.no_symmetry,
        **kw,
    )


# ----------------------------------------------------------------------------
# subcommands

def cmd_construct(args) -> int:
    f = Functional.parse(args.functional)
    n = args.n
    t0 = time.monotonic()
    if f is Functional.DIF:
        target = Fraction(0) if args.target is None else parse_rational(args.target)
        if target.denominator != 1:
            raise UsageError(f"dif constructions exist only for integer targets, got {args.target}")
        m = int(target)
        perm = C.zero_dif_fixed_ends(n) if m == 0 and n >= 6 else C.integer_witness(n, m)
    elif f is Functional.CYCDIF:
        target = Fraction(0) if args.target is None else parse_rational(args.target)
        if target != 0:
            raise UsageError("the cyclic difference construction only targets 0")
        if n < 8:
            raise UsageError(f"zero cyclic difference sum is constructed for n > 7 only, got n = {n}")
        perm = C.zero_cycdif(n)
    elif f is Functional.PROD:
        target = Fraction(1) if args.target is None else parse_rational(args.target)
        if target != 1:
            raise UsageError("the product construction only targets 1")
        if n < 6:
            raise UsageError(f"product sum 1 is constructed for n > 5 only, got n = {n}")
        perm = C.prod_one(n)
    else:
        raise UsageError(f"no construction is known for {f}; use the search subcommand")
    w = _verified(f, perm, target)
    rec = OutputRecord(n=n, functional=f.value, target=target, value=w.value, perm=w.perm,
                       elapsed=time.monotonic() - t0)
    _emit(args, [rec], [str(w.perm), f"{f} = {format_rational(w.value)}"])
    return EXIT_OK


def cmd_eval(args) -> int:
    f = Functional.parse(args.functional)
    t0 = time.monotonic()
    perm = Permutation.parse(args.perm)
    w = Witness(perm, f)
    rec = OutputRecord(n=perm.n, functional=f.value, value=w.value, perm=perm,
                       elapsed=time.monotonic() - t0)
    _emit(args, [rec], [format_rational(w.value)])
    return EXIT_OK


def cmd_values(args) -> int:
    f = Functional.parse(args.functional)
    t0 = time.monotonic()
    opts = _options(args)
    try:
        if args.integers_only and f is Functional.DIF:
            values = [Fraction(v) for v in integer_values(args.n, opts=opts)]
        else:
            values = list(enumerate_values(f, args.n, opts))
            if args.integers_only:
                values = [v for v in values if v.denominator == 1]
    except PartialResultError as exc:
        rec = OutputRecord(n=args.n, functional=f.value, status=Status.BUDGET.value,
                           elapsed=time.monotonic() - t0, nodes=exc.nodes, message=str(exc))
        _emit(args, [rec], [f"{Status.BUDGET}: {exc}"])
        return EXIT_NOT_FOUND
    rec = OutputRecord(n=args.n, functional=f.value, elapsed=time.monotonic() - t0,
                       extra={"values": [rational_to_json(v) for v in values]})
    _emit(args, [rec], [format_rational(v) for v in values])
    return EXIT_OK


def cmd_search(args) -> int:
    f = Functional.parse(args.functional)
    target = parse_rational(args.target)
    progress = None
    if args.progress:
        def progress(snap):
            dev = "-" if snap.best_deviation is None else format_rational(snap.best_deviation)
            print(f"[{snap.elapsed:8.1f}s] nodes={snap.nodes} depth={snap.depth} best={dev}",
                  file=sys.stderr)
    opts = _options(args, first_only=not args.canonical, heuristic=args.heuristic,
                    strategy=args.strategy, progress=progress)
    res = find_witness(f, args.n, target, opts)
    rec = OutputRecord(n=args.n, functional=f.value, target=target, status=res.status.value,
                       elapsed=res.elapsed, nodes=res.nodes, extra={"strategy": res.strategy})
    lines = [res.status.value]
    if res.witness is not None:
        w = _verified(f, res.witness.perm, target)
        rec.perm, rec.value = w.perm, w.value
        lines += [str(w.perm), f"{f} = {format_rational(w.value)}"]
    lines.append(f"nodes {res.nodes}")
    lines.append(f"elapsed {res.elapsed:.3f}")
    _emit(args, [rec], lines)
    return EXIT_OK if res.found else EXIT_NOT_FOUND


def _load_table(path: str) -> list[C.Seed]:
    with open(path) as fh:
        rows = json.load(fh)
    seeds = []
    for i, row in enumerate(rows):
        perm = row["perm"]
        perm = Permutation.parse(perm) if isinstance(perm, str) else Permutation(perm)
        value = row["value"]
        value = rational_from_json(value) if isinstance(value, dict) else parse_rational(str(value))
        seeds.append(C.Seed(row.get("name", f"entry_{i}"), perm, Functional.parse(row["functional"]),
                            value, row.get("first"), row.get("last")))
    return seeds


def cmd_verify(args) -> int:
    if args.file:
        table = _load_table(args.file)
    elif args.suite == "paper":
        table = list(C.PAPER_SEEDS)
    elif args.suite == "seeds":
        table = list(C.SEEDS)
    else:
        table = list(C.SEEDS) + list(C.PAPER_SEEDS)
    records, lines, failures = [], [], 0
    for seed in table:
        t0 = time.monotonic()
        problems = seed.check()
        got = evaluate(seed.functional, seed.perm)
        status = "pass" if not problems else "fail"
        failures += bool(problems)
        records.append(OutputRecord(
            name=seed.name, n=seed.perm.n, functional=seed.functional.value, target=seed.value,
            value=got, perm=seed.perm, status=status, elapsed=time.monotonic() - t0,
            message="; ".join(problems) or None,
        ))
        line = f"{status.upper()} {seed.name} {seed.functional} = {format_rational(got)}"
        if problems:
            line += f"  ({'; '.join(problems)})"
        lines.append(line)
    lines.append(f"{len(table) - failures}/{len(table)} passed")
    args._many = True
    _emit(args, records, lines)
    return EXIT_OK if failures == 0 else EXIT_NOT_FOUND


def cmd_tree(args) -> int:
    t0 = time.monotonic()
    if args.perm:
        perm = Permutation.parse(args.perm)
    else:
        if args.n is None:
            raise UsageError("tree needs n or --perm")
        if args.n < 6:
            raise UsageError(f"tree needs n >= 6 (product sum 1 is constructed for n > 5), got {args.n}")
        perm = _verified(Functional.PROD, C.prod_one(args.n), 1).perm
    dot = to_dot(perm)
    rec = OutputRecord(n=perm.n, perm=perm, elapsed=time.monotonic() - t0, extra={"dot": dot})
    _emit(args, [rec], [dot.rstrip("\n")])
    return EXIT_OK


# ----------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")
    common.add_argument("--pretty", action="store_true", help="indent JSON output")
    common.add_argument("--timeout", type=float, default=None, metavar="SECS",
                        help="time budget for searches and enumerations")
    common.add_argument("--nodes", type=int, default=None, metavar="COUNT",
                        help="node budget for searches and enumerations")
    common.add_argument("--workers", type=int, default=1, metavar="K",
                        help="worker processes for depth-first search")
    common.add_argument("--no-symmetry", action="store_true",
                        help="search the full space without rotation/reversal reduction")

    fnames = [f.value for f in Functional]
    parser = argparse.ArgumentParser(
        prog="permsum",
        description="Construct, evaluate and search permutations with exact reciprocal sums.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", parents=[common], help="build a witness by construction")
    p.add_argument("functional", choices=fnames)
    p.add_argument("n", type=int)
    p.add_argument("target", nargs="?", default=None)
    p.set_defaults(handler=cmd_construct)

    p = sub.add_parser("eval", parents=[common], help="evaluate a functional exactly")
    p.add_argument("functional", choices=fnames)
    p.add_argument("perm", help="comma-separated entries, e.g. 1,4,2,5,3,6")
    p.set_defaults(handler=cmd_eval)

    p = sub.add_parser("values", parents=[common], help="enumerate all values over S_n")
    p.add_argument("n", type=int)
    p.add_argument("functional", choices=fnames)
    p.add_argument("--integers-only", action="store_true")
    p.set_defaults(handler=cmd_values)

    p = sub.add_parser("search", parents=[common], help="search for a witness")
    p.add_argument("functional", choices=fnames)
    p.add_argument("n", type=int)
    p.add_argument("target")
    p.add_argument("--strategy", choices=["auto", "dfs", "mitm"], default="auto")
    p.add_argument("--heuristic", action="store_true",
                   help="order candidates by closeness to the target (depth-first only)")
    p.add_argument("--canonical", action="store_true",
                   help="search exhaustively and report the lexicographically first witness")
    p.add_argument("--progress", action="store_true", help="report progress on stderr")
    p.set_defaults(handler=cmd_search)

    p = sub.add_parser("verify", parents=[common], help="re-check the built-in permutation tables")
    p.add_argument("suite", nargs="?", choices=["paper", "seeds", "all"], default="all")
    p.add_argument("--file", help="JSON table of {name, functional, perm, value} entries")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("tree", parents=[common], help="DOT export of an increasing binary tree")
    p.add_argument("n", type=int, nargs="?")
    p.add_argument("--perm", help="draw this permutation instead of the product-sum construction")
    p.set_defaults(handler=cmd_tree)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args._many = False
    try:
        code = args.handler(args)
    except ValueError as exc:
        code = EXIT_INVALID
        message = str(exc)
    except (C.SeedError, C.ConstructionError) as exc:
        # An internal check failed; never pass it off as a normal result.
        code = EXIT_NOT_FOUND
        message = f"internal check failed: {exc}"
    else:
        return code
    if args.json:
        print(json.dumps({"status": "error", "message": message}))
    else:
        print(f"error: {message}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
