"""Command-line interface.

Exit codes: 0 = success (including skipped optional checks), 1 = a checked
statement has a counterexample or a cross-check mismatched, 2 = usage,
configuration, or resource errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from altprime import __version__
from altprime.census import dirichlet_census, run_census
from altprime.checkpoint import CheckpointError
from altprime.conjectures import CONJECTURES, SolverError, solve_Rk
from altprime.driver import RunConfig, RunConfigError, RunResult, run
from altprime.kernels import BACKEND
from altprime.primes import ResourceBudgetError, gap_sum, wolf_estimate
from altprime.reports import render_csv, render_rows_jsonl
from altprime.sequences import parse_kind, stream_terms
from altprime import oeis

__all__ = ["main"]

_CHECK_DEPENDENCIES = {
    # ids that need extra families/moduli configured to produce data
    "2.15": "shifts",
    "2.16": "offsets",
    "2.17": "moduli",
}
_DEFAULT_EXTRAS = {"shifts": (1, 2, 3), "offsets": (1, 2), "moduli": (3, 4)}

# umbrella ids that expand to several report ids
_ID_ALIASES = {"2.18": ("2.18-20", "2.18-21")}


def _int_arg(text: str) -> int:
    """Integer CLI argument, allowing forms like 1e6."""
    try:
        v = int(text)
    except ValueError:
        v = int(float(text))
        if float(text) != v:
            raise argparse.ArgumentTypeError(f"not an integer: {text}")
    return v


def _int_list(text: str) -> tuple[int, ...]:
    if not text.strip():
        return ()
    return tuple(_int_arg(t) for t in text.split(","))


def _kind_list(text: str):
    return tuple(parse_kind(t) for t in text.split(",") if t.strip())


def _add_run_options(sub: argparse.ArgumentParser, with_families: bool = True) -> None:
    sub.add_argument("--n-max", type=_int_arg, required=True, help="last pair index n to verify")
    if with_families:
        sub.add_argument(
            "--kinds",
            type=_kind_list,
            default=_kind_list("A,T,abs"),
            help="comma list of A, T, abs, shifted:D, offset:K (default A,T,abs)",
        )
        sub.add_argument("--shifts", type=_int_list, default=(), help="extra shifted:D families")
        sub.add_argument("--offsets", type=_int_list, default=(), help="extra offset:K families")
        sub.add_argument("--moduli", type=_int_list, default=(), help="residue-census moduli")
    sub.add_argument("--checkpoints", type=_int_list, default=None, help="override reporting indices")
    sub.add_argument("--workers", type=int, default=1, help="sieve worker threads")
    sub.add_argument("--segment-size", type=_int_arg, default=None, help="sieve segment length")
    sub.add_argument("--sieve-budget", type=_int_arg, default=None, help="largest value to sieve")
    sub.add_argument("--checkpoint-every", type=_int_arg, default=None, help="save state every N indices")
    sub.add_argument("--resume", type=Path, default=None, help="checkpoint file to resume from")
    sub.add_argument("--stop-after", type=_int_arg, default=None, help="stop at first save point >= this index")
    sub.add_argument("--out", type=Path, default=None, help="output directory")
    sub.add_argument("--format", choices=("csv", "jsonl"), default="csv", help="stdout row format")
    sub.add_argument("--no-specials", action="store_true", help="skip special-form prime counters")
    sub.add_argument("--quiet", action="store_true", help="suppress stdout rows/reports")


def _config_from_args(args, kinds=None, shifts=None, offsets=None, moduli=None) -> RunConfig:
    kw = {}
    if args.segment_size is not None:
        kw["segment_size"] = args.segment_size
    if args.sieve_budget is not None:
        kw["sieve_budget"] = args.sieve_budget
    return RunConfig(
        n_max=args.n_max,
        kinds=kinds if kinds is not None else getattr(args, "kinds", _kind_list("A,T,abs")),
        shifts=shifts if shifts is not None else getattr(args, "shifts", ()),
        offsets=offsets if offsets is not None else getattr(args, "offsets", ()),
        moduli=moduli if moduli is not None else getattr(args, "moduli", ()),
        checkpoints=args.checkpoints,
        workers=args.workers,
        out_dir=args.out,
        checkpoint_every=args.checkpoint_every,
        resume_from=args.resume,
        stop_after=args.stop_after,
        track_specials=not getattr(args, "no_specials", False),
        **kw,
    )


def _print_rows(result: RunResult, fmt: str) -> None:
    if fmt == "jsonl":
        sys.stdout.write(render_rows_jsonl(result.rows))
    else:
        sys.stdout.write(render_csv(result.rows))


def _print_reports(result: RunResult) -> None:
    for rep in result.reports:
        bits = []
        det = rep.details
        if "checked" in det:
            bits.append(f"checked={det['checked']}")
        if det.get("violation_count"):
            bits.append(f"violations={det['violation_count']} first={det['violations'][:1]}")
        if "count" in det and "scanned" in det:
            bits.append(f"count={det['count']}/{det['scanned']}")
        suffix = f" ({', '.join(bits)})" if bits else ""
        print(f"{rep.conjecture_id}: {rep.status}{suffix}")


def _cmd_run(args) -> int:
    result = run(_config_from_args(args))
    if not args.quiet:
        _print_rows(result, args.format)
        _print_reports(result)
        if args.out:
            print(f"wrote {args.out}", file=sys.stderr)
    return 1 if result.counterexample_ids() else 0


def _cmd_table(args) -> int:
    result = run(_config_from_args(args))
    _print_rows(result, args.format)
    return 1 if result.counterexample_ids() else 0


def _expand_ids(raw: tuple[str, ...]) -> tuple[str, ...]:
    if not raw:
        return tuple(CONJECTURES)
    ids: list[str] = []
    for token in raw:
        for part in token.split(","):
            part = part.strip()
            if not part:
                continue
            for cid in _ID_ALIASES.get(part, (part,)):
                if cid not in ids:
                    ids.append(cid)
    unknown = [i for i in ids if i not in CONJECTURES]
    if unknown:
        raise RunConfigError(f"unknown conjecture ids: {unknown} (known: {sorted(CONJECTURES)})")
    return tuple(ids)


def _cmd_verify(args) -> int:
    ids = _expand_ids(tuple(args.ids))
    shifts, offsets, moduli = args.shifts, args.offsets, args.moduli
    for cid in ids:
        dep = _CHECK_DEPENDENCIES.get(cid)
        if dep == "shifts" and not shifts:
            shifts = _DEFAULT_EXTRAS["shifts"]
        elif dep == "offsets" and not offsets:
            offsets = _DEFAULT_EXTRAS["offsets"]
        elif dep == "moduli" and not moduli:
            moduli = _DEFAULT_EXTRAS["moduli"]
    result = run(_config_from_args(args, shifts=shifts, offsets=offsets, moduli=moduli))
    failed = False
    by_id = {rep.conjecture_id: rep for rep in result.reports}
    for cid in ids:
        rep = by_id.get(cid)
        if rep is None:
            print(f"{cid}: no-data")
            continue
        det = rep.details
        extra = ""
        if "checked" in det:
            extra = f" (checked={det['checked']})"
        if det.get("violation_count"):
            extra = f" (violations={det['violation_count']}, first={det['violations'][:1]})"
        if rep.status == "counterexample":
            failed = True
        print(f"{cid}: {rep.status}{extra}")
    return 1 if failed else 0


def _cmd_census(args) -> int:
    for kind in args.kinds:
        if args.modulus:
            cen = dirichlet_census(kind, args.n, args.modulus)
            print(f"# kind={kind.label()} n={args.n} modulus={cen.modulus} k={cen.k}")
            for res in sorted(cen.class_counts):
                print(f"class {res}: {cen.class_counts[res]}")
            print(f"shared: {cen.shared_count}")
            continue
        rec = run_census(kind, args.n)
        print(f"# kind={kind.label()} n={rec.n} k={rec.k} last_hit={rec.last_hit}")
        if args.hits:
            for k, m, r in rec.hits:
                print(f"{k},{m},{r}")
    return 0


def _cmd_seq(args) -> int:
    kind = parse_kind(args.kind)
    for n, term in stream_terms(kind, args.n_max):
        print(f"{n},{term}")
    return 0


def _cmd_solve_rk(args) -> int:
    sol = solve_Rk(args.k, args.r)
    print(f"R_k = {sol.R:.5f}  (k={sol.k}, r={sol.r}, residual={sol.residual:.3e})")
    return 0


def _cmd_gap_sum(args) -> int:
    total = gap_sum(args.x, args.d)
    est = wolf_estimate(args.x, args.d)
    print(f"gap_sum(x={args.x}, d={args.d}) = {total}")
    print(f"estimate = {est:.1f} ratio = {total / est:.6f}")
    return 0


def _cmd_oeis_check(args) -> int:
    try:
        terms = oeis.fetch_b_file(args.seq_id, cache=args.cache, offline=args.offline)
    except oeis.OeisUnavailable as exc:
        print(f"skipped: {exc}")
        return 0
    checked, mismatches = oeis.check_a_stream(terms, args.n)
    if mismatches:
        for n, mine, theirs in mismatches[:10]:
            print(f"mismatch at n={n}: computed {mine}, b-file {theirs}")
        print(f"FAIL: {len(mismatches)} mismatches over {checked} indices")
        return 1
    print(f"ok: {checked} indices of {args.seq_id} match")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="altprime",
        description="Verification engine for primes in alternating sums of consecutive primes.",
    )
    parser.add_argument("--version", action="version", version=f"altprime {__version__} ({BACKEND})")
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("run", help="full verification run with reports")
    _add_run_options(sub)
    sub.set_defaults(func=_cmd_run)

    sub = subs.add_parser("table", help="emit the reporting-table rows only")
    _add_run_options(sub)
    sub.set_defaults(func=_cmd_table)

    sub = subs.add_parser("verify", help="run and grade selected conjecture ids")
    sub.add_argument("ids", nargs="*", help="conjecture ids (default: all); '2.18' covers both bounds")
    _add_run_options(sub)
    sub.set_defaults(func=_cmd_verify)

    sub = subs.add_parser("census", help="prime census per family")
    sub.add_argument("--kinds", type=_kind_list, default=_kind_list("A"), help="families to scan")
    sub.add_argument("--n", type=_int_arg, required=True)
    sub.add_argument("--modulus", type=_int_arg, default=None, help="classify hits mod d")
    sub.add_argument("--hits", action="store_true", help="print every hit as k,m,r")
    sub.set_defaults(func=_cmd_census)

    sub = subs.add_parser("seq", help="print terms of one family as n,term lines")
    sub.add_argument("--kind", default="A")
    sub.add_argument("--n-max", type=_int_arg, required=True)
    sub.set_defaults(func=_cmd_seq)

    sub = subs.add_parser("solve-rk", help="solve the density equation for R_k")
    sub.add_argument("k", type=_int_arg)
    sub.add_argument("r", type=_int_arg)
    sub.set_defaults(func=_cmd_solve_rk)

    sub = subs.add_parser("gap-sum", help="sum of large prime gaps below x vs estimate")
    sub.add_argument("x", type=_int_arg)
    sub.add_argument("d", type=_int_arg)
    sub.set_defaults(func=_cmd_gap_sum)

    sub = subs.add_parser("oeis-check", help="compare a_n against a cached/downloaded b-file")
    sub.add_argument("seq_id", nargs="?", default=oeis.DEFAULT_SEQUENCE)
    sub.add_argument("--n", type=_int_arg, default=1000)
    sub.add_argument("--cache", type=Path, default=None)
    sub.add_argument("--offline", action="store_true")
    sub.set_defaults(func=_cmd_oeis_check)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (RunConfigError, ResourceBudgetError, CheckpointError, SolverError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
