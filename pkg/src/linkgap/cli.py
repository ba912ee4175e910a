"""Command-line interface.

Subcommands mirror the library: fraction / equiv / udiag / ubj / gap for
single links, pretzel for 3-column pretzels, enumerate for whole crossing
numbers, verify for the golden-table and family regressions, and cache for
inspecting or rewriting memo snapshots.  Exit codes: 0 success, 1
verification diff, 2 usage error, 3 indeterminate or budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bj import BJEngine, GapReport
from .bounds import certify
from .conway import format_rational, parse_pretzel, parse_rational
from .enumeration import MAX_CROSSINGS, enumerate_rational, gap_ratio, verify_section3
from .errors import BudgetExceeded, Indeterminate, LinkGapError, WeightCeilingExceeded
from .families import registry, registry_entry, verify as verify_family
from .pretzel import (
    pretzel_det,
    pretzel_diagram_unlink,
    pretzel_prediction,
    pretzel_reduce,
    u_bj_odd_pretzel,
)
from .rational import canonical_key, canonical_word, cf_eval, crossing_number, equivalent
from .search import diagram_unlink_number
from .errors import UnsupportedNotation

EXIT_OK = 0
EXIT_DIFF = 1
EXIT_USAGE = 2
EXIT_INDETERMINATE = 3


def _engine_from_args(args) -> BJEngine:
    engine = BJEngine()
    if getattr(args, "load_cache", None):
        n = engine.load_cache(args.load_cache)
        print(f"loaded {n} cache records from {args.load_cache}", file=sys.stderr)
    return engine


def _save_cache_if_asked(engine: BJEngine, args) -> None:
    if getattr(args, "save_cache", None):
        n = engine.save_cache(args.save_cache)
        print(f"saved {n} cache records to {args.save_cache}", file=sys.stderr)


def _print_gap(report: GapReport, out) -> None:
    print(f"word: {format_rational(report.word)}", file=out)
    print(f"key: p={report.key.p_abs} q*={report.key.q_star}", file=out)
    print(f"u_M={report.u_m} u_BJ={report.u_bj} delta={report.delta_bj}", file=out)
    print(f"diagram witness: {','.join(map(str, report.diagram_witness))}", file=out)
    chain = " -> ".join(format_rational(w) for w in report.bj_witness)
    print(f"recursion witness: {chain}", file=out)


def cmd_fraction(args) -> int:
    word = parse_rational(args.word)
    f = cf_eval(word)
    key = canonical_key(f)
    print(f"fraction: {f}")
    print(f"key: p={key.p_abs} q*={key.q_star}")
    print(f"components: {key.component_count}")
    if key.p_abs <= 1:
        print("trivial: yes")
    else:
        print(f"crossings: {crossing_number(key)}")
        print(f"canonical: {format_rational(canonical_word(key))}")
    return EXIT_OK


def cmd_equiv(args) -> int:
    f1 = cf_eval(parse_rational(args.word1))
    f2 = cf_eval(parse_rational(args.word2))
    same = equivalent(f1, f2, mirror_identified=not args.strict)
    mode = "strict" if args.strict else "mirror-identified"
    print(f"{f1} and {f2} ({mode}): {'equivalent' if same else 'distinct'}")
    return EXIT_OK


def cmd_udiag(args) -> int:
    word = parse_rational(args.word)
    u_d, witness = diagram_unlink_number(word)
    print(f"u(D) = {u_d}")
    print(f"witness: {','.join(map(str, witness))}")
    return EXIT_OK


def cmd_ubj(args) -> int:
    engine = _engine_from_args(args)
    key = canonical_key(cf_eval(parse_rational(args.word)))
    value = engine.u_bj(key)
    print(f"u_BJ = {value}")
    chain = " -> ".join(format_rational(w) for w in engine.witness(key))
    print(f"witness: {chain}")
    _save_cache_if_asked(engine, args)
    return EXIT_OK


def cmd_gap(args) -> int:
    engine = _engine_from_args(args)
    key = canonical_key(cf_eval(parse_rational(args.word)))
    _print_gap(engine.gap(key), sys.stdout)
    cert = certify(key)
    lk = "-" if cert.abs_linking is None else str(cert.abs_linking)
    print(f"bounds: |lk|={lk} |sigma|={cert.abs_signature} lower={cert.lower_bound}")
    _save_cache_if_asked(engine, args)
    return EXIT_OK


def cmd_pretzel(args) -> int:
    cols = parse_pretzel(args.columns)
    engine = _engine_from_args(args)
    print(f"determinant: {pretzel_det(cols)}")
    state = pretzel_reduce(cols)
    if state.is_rational:
        parts = " # ".join(str(f) for f in state.factors)
        print(f"reduces to rational factors: {parts}")
        print(f"trivial: {'yes' if state.is_trivial else 'no'}")
    else:
        print("reduces: no (all columns >= 2)")
    if all(c > 0 and c % 2 == 1 for c in cols):
        print(f"u_BJ (recursion) = {u_bj_odd_pretzel(cols, engine)}")
    try:
        pred = pretzel_prediction(cols)
        print(f"prediction [{pred.pattern}]: u_BJ={pred.u_bj} u_M={pred.u_m} delta={pred.delta}")
    except UnsupportedNotation as exc:
        print(f"prediction: unavailable ({exc})")
    try:
        u_d, witness = pretzel_diagram_unlink(cols)
        print(f"u(D) = {u_d}  witness: {','.join(map(str, witness))}")
    except Indeterminate as exc:
        print(f"u(D): indeterminate ({exc})")
        return EXIT_INDETERMINATE
    _save_cache_if_asked(engine, args)
    return EXIT_OK


def _record_row(r) -> dict:
    return {
        "word": format_rational(r.word),
        "p": r.key.p_abs,
        "q_star": r.key.q_star,
        "crossings": r.crossings,
        "components": r.components,
        "u_M": r.u_m,
        "u_BJ": r.u_bj,
        "delta": r.delta_bj,
    }


def cmd_enumerate(args) -> int:
    engine = _engine_from_args(args)
    records = enumerate_rational(args.crossings, engine)
    if args.gap_only:
        records = [r for r in records if r.delta_bj > 0]
    rows = [_record_row(r) for r in records]
    out = open(args.out, "w") if args.out else sys.stdout
    try:
        if args.format == "json":
            json.dump(rows, out, indent=1)
            out.write("\n")
        elif args.format == "csv":
            out.write("word,p,q_star,crossings,components,u_M,u_BJ,delta\n")
            for row in rows:
                out.write(
                    f"{row['word']},{row['p']},{row['q_star']},{row['crossings']},"
                    f"{row['components']},{row['u_M']},{row['u_BJ']},{row['delta']}\n"
                )
        else:
            header = f"{'word':24s} {'p':>6s} {'q*':>5s} {'cr':>3s} {'cmp':>3s} {'u_M':>4s} {'u_BJ':>4s} {'delta':>5s}"
            out.write(header + "\n")
            for row in rows:
                out.write(
                    f"{row['word']:24s} {row['p']:6d} {row['q_star']:5d} {row['crossings']:3d} "
                    f"{row['components']:3d} {row['u_M']:4d} {row['u_BJ']:4d} {row['delta']:5d}\n"
                )
    finally:
        if args.out:
            out.close()
    _save_cache_if_asked(engine, args)
    return EXIT_OK


def _parse_grid(spec: str) -> dict[str, tuple[int, int]]:
    # e.g. "k=1..4,m=2..3"
    grid = {}
    for part in spec.split(","):
        name, _, rng = part.partition("=")
        lo, _, hi = rng.partition("..")
        grid[name.strip()] = (int(lo), int(hi or lo))
    return grid


def cmd_verify(args) -> int:
    engine = _engine_from_args(args)
    failed = False
    if args.section3 or args.all:
        for diff in verify_section3(engine=engine):
            status = "ok" if diff.match else "DIFF"
            print(
                f"crossings {diff.crossings}: {status} "
                f"(knots {diff.computed_knots}/{diff.expected_knots}, "
                f"links {diff.computed_links}/{diff.expected_links}, "
                f"gap-2 {len(diff.computed_delta2)}/{len(diff.expected_delta2)})"
            )
            if not diff.match:
                failed = True
                for key in sorted(diff.missing):
                    print(f"  missing: {format_rational(canonical_word(key))}")
                for key in sorted(diff.extra):
                    print(f"  extra: {format_rational(canonical_word(key))}")
    if args.families or args.all:
        grid = _parse_grid(args.grid) if args.grid else None
        ids = args.ids.split(",") if args.ids else None
        for report in (
            verify_family(e, grid, engine)
            for e in (registry() if ids is None else [registry_entry(i) for i in ids])
        ):
            entry = registry_entry(report.entry_id)
            c = report.counts
            status = "ok" if report.ok else ("reported" if entry.status == "suspect" else "DIFF")
            print(
                f"{report.entry_id:12s} [{entry.status}] "
                f"match={c['match']} mismatch={c['mismatch']} skip={c['skip']} {status}"
            )
            if not report.ok and entry.status != "suspect":
                failed = True
            if not report.ok and args.verbose:
                for p in report.points:
                    if p.status == "mismatch":
                        detail = {
                            f: (p.predicted[f], p.computed[f]) for f in p.mismatched_fields
                        }
                        print(f"    {p.params}: {detail}")
    _save_cache_if_asked(engine, args)
    return EXIT_DIFF if failed else EXIT_OK


def cmd_cache(args) -> int:
    engine = BJEngine()
    if args.load:
        n = engine.load_cache(args.load)
        print(f"loaded {n} valid records from {args.load}")
    if args.save:
        n = engine.save_cache(args.save)
        print(f"saved {n} records to {args.save}")
    if not args.load and not args.save:
        print("nothing to do: pass --load and/or --save", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


def _add_cache_options(sub) -> None:
    sub.add_argument("--load-cache", metavar="PATH", help="preload a memo snapshot")
    sub.add_argument("--save-cache", metavar="PATH", help="write the memo snapshot afterwards")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="linkgap",
        description="unlinking numbers and BJ-unlinking gaps of rational and pretzel links",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fraction", help="fraction, key and canonical word of a Conway word")
    p.add_argument("word")
    p.set_defaults(func=cmd_fraction)

    p = sub.add_parser("equiv", help="test Schubert equivalence of two words")
    p.add_argument("word1")
    p.add_argument("word2")
    p.add_argument("--strict", action="store_true", help="distinguish mirror images")
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("udiag", help="unlinking number of the fixed diagram")
    p.add_argument("word")
    p.set_defaults(func=cmd_udiag)

    p = sub.add_parser("ubj", help="BJ-unlinking number with witness chain")
    p.add_argument("word")
    _add_cache_options(p)
    p.set_defaults(func=cmd_ubj)

    p = sub.add_parser("gap", help="full gap report of a rational link")
    p.add_argument("word")
    _add_cache_options(p)
    p.set_defaults(func=cmd_gap)

    p = sub.add_parser("pretzel", help="reductions, predictions and search for a,b,c")
    p.add_argument("columns")
    _add_cache_options(p)
    p.set_defaults(func=cmd_pretzel)

    p = sub.add_parser("enumerate", help="all rational classes at a crossing number")
    p.add_argument("--crossings", type=int, required=True, metavar=f"N (3..{MAX_CROSSINGS})")
    p.add_argument("--gap-only", action="store_true")
    p.add_argument("--format", choices=("table", "csv", "json"), default="table")
    p.add_argument("--out", metavar="PATH")
    _add_cache_options(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="golden-table and family regressions")
    p.add_argument("--section3", action="store_true", help="check the gapful tables")
    p.add_argument("--families", action="store_true", help="check the family registry")
    p.add_argument("--all", action="store_true")
    p.add_argument("--grid", metavar="SPEC", help="override ranges, e.g. k=1..3,m=1..2")
    p.add_argument("--ids", metavar="ID,ID", help="restrict to these registry ids")
    p.add_argument("--verbose", action="store_true")
    _add_cache_options(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("cache", help="validate or rewrite a memo snapshot")
    p.add_argument("--load", metavar="PATH")
    p.add_argument("--save", metavar="PATH")
    p.set_defaults(func=cmd_cache)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and not (args.section3 or args.families or args.all):
        parser.error("verify needs --section3, --families or --all")
    try:
        return args.func(args)
    except (Indeterminate, WeightCeilingExceeded, BudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INDETERMINATE
    except LinkGapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
