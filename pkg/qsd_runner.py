"""
Command-line runner for the QSD DNA code toolkit.
Subcommands:
- census: count inequivalent self-orthogonal codes, optionally against the golden table
- qsd build: generator matrix of the QSD code with a given residue
- wenum: complete or GC weight enumerator of a QSD code
- drc: exact and closed-form d_RC for one code or a whole census cell
- tables: regenerate the d_RC tables and the discrepancy report
- verify: run the property suites
- rings: dump the eleven order-4 ring tables
"""

import argparse
import csv
import json
import os
import sys
import time
from datetime import datetime

from config import (
    CENSUS_CACHE_FILE,
    CENSUS_MAX_N,
    CENSUS_STRETCH_MAX_N,
    DEFAULT_BUDGET_SECONDS,
    DEFAULT_FORMAT,
    DNA_RINGS,
    DRC_MAX_N,
    DRC_TABLE_MAX_N,
    EXIT_BUDGET,
    EXIT_MISMATCH,
    EXIT_PASS,
    EXIT_USAGE,
    GOLDEN_PSI_FILE,
    OUTPUT_FORMATS,
    PARALLELISM_ENV,
    REPORT_DIR,
    STRETCH_TARGETS,
    VERIFY_MAX_N,
)
from dna import FormulaShapeError, formula_for_residue, rc_profile_table
from enumerators import cwe, gcw_closed_form, gcw_direct
from gf2 import LengthMismatchError, ResourceLimitError, read_code_file, row_to_str
from qsd import NotQsdError, NotSelfOrthogonalError, build_qsd
from rings4 import UnsupportedRingError, all_rings_json
from so_classify import SearchBudgetExceeded, classify_so, export_cache, seed_cache, stretch_split
from tables_handler import run_tables
from verify_handler import has_failures, run_all, summarize

# Errors that mean the request itself was malformed
USAGE_ERRORS = (
    ValueError,
    UnsupportedRingError,
    LengthMismatchError,
    NotSelfOrthogonalError,
    NotQsdError,
    FormulaShapeError,
    ResourceLimitError,
)


def load_json(path: str, default=None):
    """Load a JSON file, falling back to default when missing or unreadable."""
    if os.path.exists(path):
        try:
            with open(path, 'r') as f:
                return json.load(f)
        except (json.JSONDecodeError, IOError):
            pass
    return {} if default is None else default


def save_json(data, path: str):
    os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
    with open(path, 'w') as f:
        json.dump(data, f, indent=2)


def parse_range(text: str) -> tuple[int, int]:
    """"1..10" -> (1, 10), "7" -> (7, 7)."""
    lo, sep, hi = text.partition("..")
    try:
        lo_n = int(lo)
        hi_n = int(hi) if sep else lo_n
    except ValueError:
        raise ValueError(f"bad range {text!r}, expected A..B or N")
    if lo_n < 1 or hi_n < lo_n:
        raise ValueError(f"bad range {text!r}")
    return lo_n, hi_n


def parse_budget(text: str) -> float:
    """Seconds from "90s", "30m", "1h" or a bare number."""
    text = text.strip().lower()
    units = {"s": 1, "m": 60, "h": 3600}
    scale = units.get(text[-1:], None)
    number = text[:-1] if scale else text
    try:
        seconds = float(number) * (scale or 1)
    except ValueError:
        raise ValueError(f"bad budget {text!r}, expected e.g. 90s, 30m, 1h")
    if seconds <= 0:
        raise ValueError("budget must be positive")
    return seconds


def default_parallelism() -> int:
    try:
        return max(1, int(os.environ.get(PARALLELISM_ENV, "1")))
    except ValueError:
        return 1


def status(args, message: str):
    """Progress line; goes to stderr when stdout carries CSV or JSON."""
    machine = getattr(args, "format", "text") in ("csv", "json")
    print(message, file=sys.stderr if machine else sys.stdout)


def emit_records(args, records: list[dict], columns: list[str]):
    if args.format == "json":
        print(json.dumps(records, indent=2))
    elif args.format == "csv":
        writer = csv.DictWriter(sys.stdout, fieldnames=columns, extrasaction="ignore", lineterminator="\n")
        writer.writeheader()
        writer.writerows(records)
    else:
        for r in records:
            print("  ".join(f"{c}={r.get(c)}" for c in columns))


def load_golden_psi(path: str = GOLDEN_PSI_FILE) -> dict[tuple[int, int], int]:
    data = load_json(path)
    return {
        (int(n), k): count
        for n, counts in data.get("psi", {}).items()
        for k, count in enumerate(counts)
    }


# ===== census =====

def cmd_census(args) -> int:
    n_min, n_max = parse_range(args.n)
    limit = CENSUS_STRETCH_MAX_N if args.stretch else CENSUS_MAX_N
    if n_max > limit:
        status(args, f"❌ Error: census limited to n <= {limit} (use --stretch for up to {CENSUS_STRETCH_MAX_N})")
        return EXIT_USAGE

    loaded = seed_cache(load_json(CENSUS_CACHE_FILE))
    if loaded:
        status(args, f"  📂 Loaded {loaded} cached census cells")

    budget = parse_budget(args.budget) if args.budget else (DEFAULT_BUDGET_SECONDS if args.stretch else None)
    deadline = time.monotonic() + budget if budget else None

    golden = load_golden_psi() if args.check else {}
    records, listing = [], []
    exit_code = EXIT_PASS
    try:
        for n in range(n_min, n_max + 1):
            dims = [args.k] if args.k is not None else range(n // 2 + 1)
            for k in dims:
                entry = classify_so(n, k, max_n=limit, deadline=deadline, parallelism=args.parallel)
                record = {"n": n, "k": k, "count": entry.count}
                if args.check and (n, k) in golden:
                    record["expected"] = golden[(n, k)]
                    if golden[(n, k)] != entry.count:
                        status(args, f"  ⚠️ Psi({n},{k}) = {entry.count}, expected {golden[(n, k)]}")
                        exit_code = EXIT_MISMATCH
                if args.stretch and (n, k) in STRETCH_TARGETS:
                    remaining = deadline - time.monotonic() if deadline else DEFAULT_BUDGET_SECONDS
                    split = stretch_split(n, k, max(remaining, 0.001), args.parallel)
                    record["d2"], record["d4"] = split["d2"], split["d4"]
                    if args.check and (split["d2"], split["d4"]) != STRETCH_TARGETS[(n, k)]:
                        status(args, f"  ⚠️ [{n},{k}] d=2/d=4 split {split['d2']}/{split['d4']}")
                        exit_code = EXIT_MISMATCH
                records.append(record)
                if args.list:
                    listing.extend({"n": n, "k": k, "code": c.to_hex()} for c in entry.representatives)
    except SearchBudgetExceeded as e:
        save_json(export_cache(), CENSUS_CACHE_FILE)
        status(args, f"⏸️ {e}; progress saved to {CENSUS_CACHE_FILE}")
        return EXIT_BUDGET

    save_json(export_cache(), CENSUS_CACHE_FILE)

    if args.list:
        emit_records(args, listing, ["n", "k", "code"])
    elif args.format == "text":
        for n in range(n_min, n_max + 1):
            counts = [str(r["count"]) for r in records if r["n"] == n]
            print(f"{n:>3}: {' '.join(counts)}")
    else:
        emit_records(args, records, ["n", "k", "count", "expected", "d2", "d4"])

    if args.check:
        status(args, "✅ Census matches golden table" if exit_code == EXIT_PASS else "❌ Census mismatch")
    return exit_code


# ===== qsd build / wenum =====

def _load_code(args):
    res = read_code_file(args.res)
    return build_qsd(args.ring, res)


def cmd_qsd_build(args) -> int:
    C = _load_code(args)
    rows = [str(r) for r in C.generator_rows()]
    if args.format == "json":
        print(json.dumps({
            "ring": C.ring,
            "n": C.n,
            "k1": C.k1,
            "log2_size": C.log2_size,
            "residue": [row_to_str(r, C.n) for r in C.res.rows],
            "torsion": [row_to_str(r, C.n) for r in C.tor.rows],
            "generators": rows,
        }, indent=2))
    else:
        print("\n".join(rows))
    status(args, f"✅ {C}: {C.k1} a-rows, {len(rows) - C.k1} c-rows, 2^{C.log2_size} words")
    return EXIT_PASS


def cmd_wenum(args) -> int:
    C = _load_code(args)
    if args.closed_form:
        enumerator = gcw_closed_form(C.res, C.n)
        if enumerator != gcw_direct(C):
            status(args, "❌ Closed form differs from the direct GC enumerator")
            return EXIT_MISMATCH
    elif args.gc:
        enumerator = gcw_direct(C)
    else:
        enumerator = cwe(C)
    if args.format == "json":
        print(json.dumps(enumerator.to_json(), indent=2))
    else:
        print(enumerator)
    return EXIT_PASS


# ===== drc =====

def drc_records(codes, mode: str, parallelism: int = 1) -> list[dict]:
    records = []
    for C in codes:
        shape = formula_for_residue(C.res) if mode != "exact" else None
        profiles = rc_profile_table(C, parallelism, include_zero=C.k1 == 0) if mode != "formula" else {}
        weights = sorted(set(profiles) | set(shape[1] if shape else {}))
        for m in weights:
            record = {
                "n": C.n,
                "k1": C.k1,
                "residue": " ".join(row_to_str(r, C.n) for r in C.res.rows),
                "m": m,
            }
            if m in profiles:
                p = profiles[m]
                record["exact"] = p.d_rc
                record["witness_pairing"] = " ".join(map(str, p.witness_pairing or ()))
                record["witness_permutation"] = " ".join(map(str, p.witness_permutation or ()))
            if shape:
                record["shape"] = shape[0]
                record["formula"] = shape[1].get(m)
            records.append(record)
    return records


def cmd_drc(args) -> int:
    if args.n > DRC_MAX_N:
        status(args, f"❌ Error: d_RC search limited to n <= {DRC_MAX_N}")
        return EXIT_USAGE
    if args.res:
        codes = [_load_code(args)]
        if codes[0].n != args.n:
            raise LengthMismatchError(f"residue has length {codes[0].n}, expected {args.n}")
    elif args.k is None:
        status(args, "❌ Error: --k is required without --res")
        return EXIT_USAGE
    else:
        codes = [build_qsd(args.ring, B) for B in classify_so(args.n, args.k, parallelism=args.parallel).representatives]
    status(args, f"🔍 d_RC for {len(codes)} code(s) of length {args.n} ({args.mode})")
    records = drc_records(codes, args.mode, args.parallel)
    emit_records(args, records, [
        "n", "k1", "residue", "m", "exact", "formula", "shape", "witness_pairing", "witness_permutation",
    ])
    if args.mode == "both":
        disagree = [r for r in records if r.get("formula") is not None and r.get("exact") != r["formula"]]
        if disagree:
            status(args, f"⚠️ {len(disagree)} formula value(s) differ from the exact search")
    return EXIT_PASS


# ===== tables / verify / rings =====

def cmd_tables(args) -> int:
    if args.n_max > DRC_TABLE_MAX_N:
        status(args, f"❌ Error: tables cover n <= {DRC_TABLE_MAX_N}")
        return EXIT_USAGE
    rows, discrepancies = run_tables(args.n_max, args.output, args.parallel, verbose=True)
    print(f"\n📊 Summary:")
    print(f"   Rows: {len(rows)} | Discrepancies: {len(discrepancies)}")
    return EXIT_PASS


def cmd_verify(args) -> int:
    records = run_all(args.n_max, args.parallel, verbose=args.format == "text")
    if args.format != "text":
        emit_records(args, records, ["suite", "code", "status", "detail"])
    status(args, "\n📊 Summary:")
    for suite, counts in summarize(records).items():
        status(args, f"   {suite}: " + " | ".join(f"{k} {v}" for k, v in sorted(counts.items())))
    return EXIT_MISMATCH if has_failures(records) else EXIT_PASS


def cmd_rings(args) -> int:
    rings = all_rings_json()
    if args.format == "json":
        print(json.dumps(rings, indent=2))
        return EXIT_PASS
    for R in rings:
        gc = R["gc_map"]
        print(f"{R['name']} (char {R['characteristic']}, alpha={R['alpha']}, "
              f"gc={'none' if gc is None else gc['beta'] + ' ' + gc['side']})")
        header = "   * | " + " ".join(f"{e:>2}" for e in R["elements"])
        print(header)
        for e, row in zip(R["elements"], R["mul"]):
            print(f"  {e:>2} | " + " ".join(f"{v:>2}" for v in row))
    return EXIT_PASS


def _common(default_format: str = DEFAULT_FORMAT) -> argparse.ArgumentParser:
    """Options shared by every subcommand, built fresh for each one."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--parallel", type=int, default=default_parallelism(),
                        help=f"Worker processes (default from ${PARALLELISM_ENV} or 1)")
    common.add_argument("--format", choices=OUTPUT_FORMATS, default=default_format, help="Output format")
    return common


def build_parser() -> argparse.ArgumentParser:

    parser = argparse.ArgumentParser(description="QSD DNA codes over the rings E and F")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("census", parents=[_common()], help="Count inequivalent self-orthogonal codes")
    p.add_argument("--n", required=True, help="Length or range A..B")
    p.add_argument("--k", type=int, help="Single dimension")
    p.add_argument("--list", action="store_true", help="List representatives instead of counts")
    p.add_argument("--check", action="store_true", help="Compare against the golden table")
    p.add_argument("--stretch", action="store_true", help=f"Allow n up to {CENSUS_STRETCH_MAX_N}")
    p.add_argument("--budget", help="Time budget, e.g. 90s, 30m, 1h")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("qsd", help="QSD code construction")
    qsd_sub = p.add_subparsers(dest="action", required=True)
    b = qsd_sub.add_parser("build", parents=[_common()], help="Generator matrix for a residue")
    b.add_argument("--ring", choices=DNA_RINGS, default="E")
    b.add_argument("--res", required=True, help="Residue generator file (0/1 rows or n:hex)")
    b.set_defaults(func=cmd_qsd_build)

    p = sub.add_parser("wenum", parents=[_common()], help="Weight enumerators")
    p.add_argument("--ring", choices=DNA_RINGS, default="E")
    p.add_argument("--res", required=True, help="Residue generator file")
    p.add_argument("--gc", action="store_true", help="GC weight enumerator")
    p.add_argument("--closed-form", action="store_true", help="GC enumerator from the residue weights")
    p.set_defaults(func=cmd_wenum)

    p = sub.add_parser("drc", parents=[_common()], help="Reverse-complement distance")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, help="Dimension (required without --res)")
    p.add_argument("--ring", choices=DNA_RINGS, default="E")
    p.add_argument("--res", help="Residue generator file (default: every census class)")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exact", dest="mode", action="store_const", const="exact")
    mode.add_argument("--formula", dest="mode", action="store_const", const="formula")
    mode.add_argument("--both", dest="mode", action="store_const", const="both")
    p.set_defaults(func=cmd_drc, mode="exact")

    p = sub.add_parser("tables", parents=[_common("text")], help="Regenerate the d_RC tables")
    p.add_argument("--n-max", type=int, default=DRC_TABLE_MAX_N)
    p.add_argument("--output", default=REPORT_DIR, help="Output directory")
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("verify", parents=[_common()], help="Run the property suites")
    p.add_argument("--n-max", type=int, default=VERIFY_MAX_N)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("rings", parents=[_common("text")], help="Dump the ring tables")
    p.set_defaults(func=cmd_rings)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.parallel < 1:
        parser.error("--parallel must be at least 1")

    command = " ".join(filter(None, (args.command, getattr(args, "action", None))))
    status(args, f"🚀 {command} starting at {datetime.now().isoformat(timespec='seconds')}")
    try:
        return args.func(args)
    except SearchBudgetExceeded as e:
        status(args, f"⏸️ {e}")
        return EXIT_BUDGET
    except USAGE_ERRORS as e:
        status(args, f"❌ Error in {command}: {e}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
