"""Command-line front end.

Exit codes (total over every path):
  0  success / verified / solved / full agreement
  1  answer is "no": mask rejected, instance unsolvable, or a
     solver-vs-oracle disagreement found
  2  I/O error, malformed input, or an out-of-range request
  3  resource limit hit before an answer
  4  reduce input is not a regular formula

Machine output goes to stdout; diagnostics go to stderr. A path of "-"
reads from stdin.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import core, generator, reduction, solver, xsat

EXIT_OK = 0
EXIT_NO = 1
EXIT_ERROR = 2
EXIT_LIMIT = 3
EXIT_NOT_REGULAR = 4


def _read(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as f:
        return f.read()


def _emit(data: bytes) -> None:
    sys.stdout.buffer.write(data)
    sys.stdout.buffer.flush()


def _warn_digits(inst: core.SumpleteInstance, strict: bool) -> None:
    if strict and any(v > 9 for row in inst.grid for v in row):
        print("warning: grid contains values above 9", file=sys.stderr)


def cmd_verify(args) -> int:
    inst = core.parse_instance(_read(args.instance), args.format)
    mask = core.parse_mask(_read(args.mask), args.format)
    _warn_digits(inst, args.strict_digits)
    if core.verify(inst, mask):
        if not args.quiet:
            print("OK")
        return EXIT_OK
    rs = core.row_sums(inst, mask)
    cs = core.col_sums(inst, mask)
    for i, (got, want) in enumerate(zip(rs, inst.row_hints), start=1):
        if got != want:
            print(f"row {i}: kept sum {got}, hint {want} (delta {got - want})", file=sys.stderr)
    for j, (got, want) in enumerate(zip(cs, inst.col_hints), start=1):
        if got != want:
            print(f"col {j}: kept sum {got}, hint {want} (delta {got - want})", file=sys.stderr)
    return EXIT_NO


def cmd_solve(args) -> int:
    inst = core.parse_instance(_read(args.instance), args.format)
    _warn_digits(inst, args.strict_digits)
    cfg = solver.SolverConfig(
        node_limit=args.limit,
        solution_cap=args.cap,
        column_reachability=args.column_dp,
    )
    if args.count:
        n, exhausted = solver.count_solutions(inst, cfg)
        print(n)
        if not exhausted:
            print("count is a lower bound: search was capped", file=sys.stderr)
            return EXIT_LIMIT
        return EXIT_OK
    outcome = solver.solve(inst, cfg)
    if args.stats:
        s = outcome.stats
        print(
            f"nodes_expanded={s.nodes_expanded} "
            f"row_subsets_enumerated={s.row_subsets_enumerated} "
            f"elapsed={s.elapsed:.6f}s",
            file=sys.stderr,
        )
    if outcome.status is solver.Status.SOLVED:
        _emit(core.serialize_mask(outcome.witness, args.format))
        return EXIT_OK
    if outcome.status is solver.Status.UNSOLVABLE:
        print("UNSOLVABLE")
        return EXIT_NO
    print("resource limit reached", file=sys.stderr)
    return EXIT_LIMIT


def cmd_reduce(args) -> int:
    phi = xsat.parse_xsat(_read(args.formula), args.format)
    try:
        inst = reduction.reduce_xsat(phi)
    except reduction.NotRegularError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_NOT_REGULAR
    _emit(core.serialize_instance(inst, args.format))
    if args.emit_witness is not None:
        a = xsat.parse_assignment(_read(args.emit_witness), args.format)
        mask = reduction.assignment_to_mask(phi, a)
        _emit(core.serialize_mask(mask, args.format))
    return EXIT_OK


def cmd_xsat_verify(args) -> int:
    phi = xsat.parse_xsat(_read(args.formula), args.format)
    a = xsat.parse_assignment(_read(args.assignment), args.format)
    if xsat.verify_assignment(phi, a):
        if not args.quiet:
            print("OK")
        return EXIT_OK
    for k, cl in enumerate(phi.clauses, start=1):
        true_count = sum(1 for v in cl if a[v - 1])
        if true_count != 1:
            print(f"clause {k}: {true_count} true literals, need exactly 1", file=sys.stderr)
    return EXIT_NO


def cmd_gen(args) -> int:
    if args.kind == "puzzle":
        alphabet = tuple(int(t) for t in args.alphabet.split(","))
        cfg = generator.GenConfig(
            seed=args.seed,
            rows=args.rows,
            cols=args.cols,
            alphabet=alphabet,
            keep_prob=Fraction(args.keep_prob),
        )
        inst, witness = generator.gen_puzzle(cfg)
        if args.unique:
            n, exhausted = solver.count_solutions(inst, solver.SolverConfig(solution_cap=2))
            if not (exhausted and n == 1):
                print("generated puzzle is not unique; pick another seed", file=sys.stderr)
                return EXIT_NO
        _emit(core.serialize_instance(inst, args.format))
        if not args.no_witness:
            _emit(core.serialize_mask(witness, args.format))
        return EXIT_OK
    if args.kind == "xsat":
        phi = generator.gen_xsat_regular(args.n, args.seed)
        _emit(xsat.serialize_xsat(phi, args.format))
        return EXIT_OK
    phi, assignment = generator.gen_xsat_planted(args.n, args.seed)
    _emit(xsat.serialize_xsat(phi, args.format))
    if not args.no_witness:
        _emit(xsat.serialize_assignment(assignment, args.format))
    return EXIT_OK


def cmd_equiv(args) -> int:
    if not 3 <= args.n <= xsat.BRUTE_FORCE_VAR_LIMIT:
        print(
            f"error: n must be in 3..{xsat.BRUTE_FORCE_VAR_LIMIT} for the oracle",
            file=sys.stderr,
        )
        return EXIT_ERROR
    cfg = solver.SolverConfig(column_reachability=True)
    for k in range(args.count):
        phi = generator.gen_xsat_regular(args.n, args.seed + k)
        sat, _w, _c = xsat.brute_force_xsat(phi)
        outcome = solver.solve(reduction.reduce_xsat(phi), cfg)
        solved = outcome.status is solver.Status.SOLVED
        if sat != solved:
            print(f"disagreement on instance {k} (seed {args.seed + k}):", file=sys.stderr)
            sys.stderr.buffer.write(xsat.serialize_xsat(phi, "xsat-text"))
            print(f"oracle satisfiable={sat}, solver solved={solved}", file=sys.stderr)
            return EXIT_NO
    if not args.quiet:
        print(f"agreement on {args.count} instances at n={args.n}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sumplete",
        description="Sumplete puzzles: verify, solve, generate, and reduce from XSAT",
    )
    parser.add_argument("--format", choices=["json", "text"], default="json",
                        help="file format for instances, masks, and formulas")
    parser.add_argument("--quiet", action="store_true", help="suppress success chatter")
    parser.add_argument("--strict-digits", action="store_true",
                        help="warn when grid values exceed a single digit")
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("verify", help="check a mask against an instance")
    p.add_argument("instance")
    p.add_argument("mask")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("solve", help="solve or count solutions of an instance")
    p.add_argument("instance")
    p.add_argument("--count", action="store_true", help="count solutions instead of solving")
    p.add_argument("--limit", type=int, default=None, help="node expansion limit")
    p.add_argument("--cap", type=int, default=1_000_000, help="solution cap for --count")
    p.add_argument("--stats", action="store_true", help="print search statistics to stderr")
    p.add_argument("--column-dp", action="store_true",
                   help="enable per-column subset-sum reachability pruning")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("reduce", help="transform a regular XSAT formula to a puzzle")
    p.add_argument("formula")
    p.add_argument("--emit-witness", metavar="ASSIGNMENT",
                   help="also map this assignment to a mask for the reduced instance")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("xsat-verify", help="check an assignment against a formula")
    p.add_argument("formula")
    p.add_argument("assignment")
    p.set_defaults(func=cmd_xsat_verify)

    p = sub.add_parser("gen", help="generate instances")
    p.add_argument("kind", choices=["puzzle", "xsat", "planted"])
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--rows", type=int, default=5)
    p.add_argument("--cols", type=int, default=5)
    p.add_argument("--alphabet", default="1,2,3,4,5,6,7,8,9",
                   help="comma-separated cell values; use 1,3 for two-valued grids")
    p.add_argument("--keep-prob", default="1/2", help="per-cell keep probability (fraction)")
    p.add_argument("--n", type=int, default=6, help="variable count for xsat/planted")
    p.add_argument("--unique", action="store_true",
                   help="fail unless the generated puzzle has exactly one solution")
    p.add_argument("--no-witness", action="store_true", help="emit the instance only")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("equiv", help="cross-check oracle satisfiability vs solve(reduce(...))")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_equiv)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (core.SumpleteError, OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
