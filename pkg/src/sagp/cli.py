"""Command-line interface: find, gen, bench, verify.

Exit codes: 0 success, 1 verification mismatch, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .core import Text
from .generate import random_text
from .oracle import DEFAULT_ORACLE_BOUND
from .pipeline import BACKEND_CHOICES, Prepared, combined_rows
from .verify import verify_text


def _read_input(path, ints: bool) -> Text:
    if path is None or path == "-":
        data = sys.stdin.read()
    else:
        with open(path, "r") as fh:
            data = fh.read()
    if data.endswith("\n"):
        data = data[:-1]
    if ints:
        return Text([int(tok) for tok in data.split()])
    return Text(data)


def cmd_find(args) -> int:
    try:
        text = _read_input(args.file, args.ints)
    except (OSError, ValueError) as exc:
        print(f"sagp find: {exc}", file=sys.stderr)
        return 2
    prep = Prepared(text)
    rows = combined_rows(prep, args.backend)
    out = sys.stdout
    if args.format == "tsv":
        for pivot, kind, w, g, u in rows:
            out.write(f"{pivot}\t{kind}\t{w}\t{g}\t{u}\n")
    else:
        occ1 = int((rows[:, 1] == 1).sum())
        payload = {
            "n": text.n,
            "occ1": occ1,
            "occ2": int(len(rows) - occ1),
            "sagps": [
                {
                    "pivot": int(p),
                    "type": int(k),
                    "w_len": int(w),
                    "gap_len": int(g),
                    "u_len": int(u),
                }
                for p, k, w, g, u in rows
            ],
        }
        json.dump(payload, out, indent=2)
        out.write("\n")
    return 0


def cmd_gen(args) -> int:
    if args.sigma < 1:
        print("sagp gen: sigma must be at least 1", file=sys.stderr)
        return 2
    sys.stdout.write(random_text(args.length, args.sigma, args.seed))
    sys.stdout.write("\n")
    return 0


def cmd_bench(args) -> int:
    from .bench import render_plots, rows_to_csv, run_benchmark

    try:
        lengths = [int(tok) for tok in args.lengths.split(",") if tok]
    except ValueError:
        print("sagp bench: --lengths expects comma-separated integers", file=sys.stderr)
        return 2
    backends = args.backends.split(",") if args.backends else list(BACKEND_CHOICES)
    for b in backends:
        if b not in BACKEND_CHOICES:
            print(f"sagp bench: unknown backend {b!r}", file=sys.stderr)
            return 2
    rows = run_benchmark(lengths, args.sigma, args.repeats, backends, seed=args.seed)
    sys.stdout.write(rows_to_csv(rows))
    if args.plot_dir:
        for path in render_plots(rows, args.plot_dir):
            print(f"sagp bench: wrote {path}", file=sys.stderr)
    return 0


def cmd_verify(args) -> int:
    try:
        text = _read_input(args.file, args.ints)
    except (OSError, ValueError) as exc:
        print(f"sagp verify: {exc}", file=sys.stderr)
        return 2
    if text.n > args.max_oracle_n:
        print(
            f"sagp verify: input of length {text.n} exceeds --max-oracle-n "
            f"{args.max_oracle_n}",
            file=sys.stderr,
        )
        return 2
    ok, diffs = verify_text(text, max_oracle_n=args.max_oracle_n)
    if ok:
        print(f"ok: {text.n} symbols, all backends agree with the oracle")
        return 0
    for line in diffs:
        print(line, file=sys.stderr)
    return 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="sagp",
        description="Canonical longest single-arm-gapped palindromes.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("find", help="report all canonical longest SAGPs")
    p.add_argument("file", nargs="?", help="input file (default: stdin)")
    p.add_argument("--backend", choices=BACKEND_CHOICES, default="traverse")
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")
    p.add_argument("--ints", action="store_true",
                   help="parse input as whitespace-separated integers")
    p.set_defaults(func=cmd_find)

    p = sub.add_parser("gen", help="emit a deterministic random string")
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--sigma", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="time the type-1 backends (CSV to stdout)")
    p.add_argument("--lengths", required=True, help="comma-separated lengths")
    p.add_argument("--sigma", type=int, default=10)
    p.add_argument("--repeats", type=int, default=10)
    p.add_argument("--backends", default=None,
                   help="comma-separated subset of: " + ",".join(BACKEND_CHOICES))
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--plot-dir", default=None,
                   help="also render PNG charts into this directory")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("verify", help="all backends vs the brute-force oracle")
    p.add_argument("file", nargs="?", help="input file (default: stdin)")
    p.add_argument("--max-oracle-n", type=int, default=DEFAULT_ORACLE_BOUND)
    p.add_argument("--ints", action="store_true",
                   help="parse input as whitespace-separated integers")
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
