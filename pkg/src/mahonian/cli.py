"""Command-line front end: statistics, codecs, distributions, verification.

Exit codes: 0 success, 1 verification found a counterexample, 2 usage or
input error.  The json and csv outputs are deterministic byte-for-byte for
identical inputs; schemas are documented in the README.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Sequence

from . import distributions, verify
from .permutations import (
    ENUM_CAP_DEFAULT,
    descent_positions,
    inv_stat,
    maj_stat,
    make_permutation,
)
from .tables import CODECS, DECODERS, ENCODERS, make_table


def _parse_ints(text: str) -> tuple[int, ...]:
    values = []
    for token in text.split(","):
        token = token.strip()
        try:
            values.append(int(token))
        except ValueError:
            raise ValueError(f"cannot parse {token!r} as an integer") from None
    return tuple(values)


def parse_word(text: str) -> tuple[int, ...]:
    """Parse a permutation: compact digits ('241350', length <= 10) or
    comma-separated integers ('2,4,1,3,5,0').  Empty text is the empty word."""
    text = text.strip()
    if text == "":
        return ()
    if "," in text:
        return make_permutation(_parse_ints(text))
    for ch in text:
        if not ch.isdigit():
            raise ValueError(
                f"cannot parse {text!r}: {ch!r} is not a digit; "
                "use comma-separated integers"
            )
    if len(text) > 10:
        raise ValueError(
            f"compact digit form only covers lengths up to 10; "
            f"write {text!r} comma-separated"
        )
    return make_permutation(tuple(int(ch) for ch in text))


def parse_table(text: str) -> tuple[int, ...]:
    """Parse an inversion table from comma-separated integers."""
    text = text.strip()
    if text == "":
        return make_table(())
    return make_table(_parse_ints(text))


def format_word(p: Sequence[int]) -> str:
    """Compact digit string for length <= 10, comma-separated otherwise."""
    if len(p) <= 10:
        return "".join(str(v) for v in p)
    return ",".join(str(v) for v in p)


def format_table(t: Sequence[int]) -> str:
    return ",".join(str(v) for v in t)


def _spaced(seq: Sequence[int]) -> str:
    return " ".join(str(v) for v in seq)


def _write_csv(header: list[str], rows: list[list]) -> None:
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)


def cmd_stats(args: argparse.Namespace) -> int:
    word = parse_word(args.word)
    inv = inv_stat(word)
    maj = maj_stat(word)
    descents = descent_positions(word)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "n": len(word),
                    "word": list(word),
                    "inv": inv,
                    "maj": maj,
                    "descents": descents,
                }
            )
        )
    elif args.format == "csv":
        _write_csv(
            ["word", "n", "inv", "maj", "descents"],
            [[format_word(word), len(word), inv, maj, _spaced(descents)]],
        )
    else:
        print(f"word: {format_word(word)}")
        print(f"n: {len(word)}")
        print(f"inv: {inv}")
        print(f"maj: {maj}")
        print(f"descents: {_spaced(descents)}")
    return 0


def cmd_decode(args: argparse.Namespace) -> int:
    table = parse_table(args.table)
    word = DECODERS[args.codec](table)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "n": len(table),
                    "codec": args.codec,
                    "table": list(table),
                    "data": list(word),
                }
            )
        )
    elif args.format == "csv":
        _write_csv(
            ["codec", "n", "table", "permutation"],
            [[args.codec, len(table), _spaced(table), _spaced(word)]],
        )
    else:
        print(format_word(word))
    return 0


def cmd_encode(args: argparse.Namespace) -> int:
    word = parse_word(args.word)
    table = ENCODERS[args.codec](word)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "n": len(word),
                    "codec": args.codec,
                    "word": list(word),
                    "data": list(table),
                }
            )
        )
    elif args.format == "csv":
        _write_csv(
            ["codec", "n", "permutation", "table"],
            [[args.codec, len(word), _spaced(word), _spaced(table)]],
        )
    else:
        print(format_table(table))
    return 0


def cmd_dist(args: argparse.Namespace) -> int:
    if args.stat == "mahonian":
        vec = distributions.mahonian_numbers(args.n)
    else:
        try:
            vec = distributions.stat_distribution(args.n, args.stat, args.max_enum)
        except ValueError as exc:
            raise ValueError(
                f"{exc}; --stat mahonian computes the same counts for large n "
                "without enumerating permutations"
            ) from None
    rows = list(enumerate(vec.counts))
    if args.format == "json":
        print(
            json.dumps(
                {
                    "n": args.n,
                    "stat": args.stat,
                    "data": [{"k": k, "count": c} for k, c in rows],
                }
            )
        )
    elif args.format == "csv":
        _write_csv(["k", "count"], [[k, c] for k, c in rows])
    else:
        for k, c in rows:
            print(f"{k} {c}")
    return 0


def cmd_joint(args: argparse.Namespace) -> int:
    m = distributions.joint_distribution(args.n, args.max_enum)
    size = len(m.cells)
    rows = [
        (k, k2, m.cells[k][k2])
        for k in range(size)
        for k2 in range(size)
        if m.cells[k][k2]
    ]
    if args.format == "json":
        print(
            json.dumps(
                {
                    "n": args.n,
                    "data": [{"k": k, "k_prime": k2, "count": c} for k, k2, c in rows],
                }
            )
        )
    elif args.format == "csv":
        _write_csv(["k", "k_prime", "count"], [[k, k2, c] for k, k2, c in rows])
    else:
        for k, k2, c in rows:
            print(f"{k} {k2} {c}")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    if args.checks == "all":
        names = list(verify.CHECKS)
    else:
        names = [s.strip() for s in args.checks.split(",") if s.strip()]
    results = verify.run_checks(names, args.n_max, args.max_enum)
    ok = all(r.ok for r in results)
    total = sum(r.cases for r in results)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "n_max": args.n_max,
                    "lengths": f"0..{args.n_max}",
                    "checks": [
                        {
                            "name": r.name,
                            "cases": r.cases,
                            "ok": r.ok,
                            "counterexample": r.failure,
                        }
                        for r in results
                    ],
                    "ok": ok,
                }
            )
        )
    elif args.format == "csv":
        _write_csv(
            ["check", "cases", "status", "counterexample"],
            [
                [r.name, r.cases, "pass" if r.ok else "fail", r.failure or ""]
                for r in results
            ],
        )
    else:
        print(f"checking lengths 0..{args.n_max} (0-length cases included)")
        for r in results:
            if r.ok:
                print(f"{r.name}: pass ({r.cases} cases)")
            else:
                print(f"{r.name}: FAIL after {r.cases} cases")
                print(f"  counterexample: {r.failure}")
        if ok:
            print(f"all checks passed ({total} cases)")
        else:
            print("verification FAILED")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mahonian",
        description="Permutation statistics: inv/maj, inversion-table codecs, "
        "Mahonian distributions, and exhaustive verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--format",
            choices=("plain", "json", "csv"),
            default="plain",
            help="output format (default: plain)",
        )

    def add_max_enum(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--max-enum",
            type=int,
            default=ENUM_CAP_DEFAULT,
            help=f"enumeration cap on n (default: {ENUM_CAP_DEFAULT})",
        )

    p = sub.add_parser("stats", help="inv, maj, and descent positions of a word")
    p.add_argument("word", help="permutation, e.g. '241350' or '2,4,1,3,5,0'")
    add_format(p)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("decode", help="decode an inversion table to a permutation")
    p.add_argument("--codec", choices=CODECS, required=True)
    p.add_argument("table", help="comma-separated entries, e.g. '0,1,0,3,3'")
    add_format(p)
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("encode", help="encode a permutation as an inversion table")
    p.add_argument("--codec", choices=CODECS, required=True)
    p.add_argument("word", help="permutation, e.g. '34102' or '3,4,1,0,2'")
    add_format(p)
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("dist", help="distribution of a statistic over all of S_n")
    p.add_argument("--n", type=int, required=True, help="word length")
    p.add_argument("--stat", choices=("inv", "maj", "mahonian"), required=True)
    add_max_enum(p)
    add_format(p)
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("joint", help="nonzero joint (inv, maj) counts over S_n")
    p.add_argument("--n", type=int, required=True, help="word length")
    add_max_enum(p)
    add_format(p)
    p.set_defaults(func=cmd_joint)

    p = sub.add_parser("verify", help="run the exhaustive identity checks")
    p.add_argument(
        "--n-max", type=int, default=5, help="check all lengths 0..n-max (default: 5)"
    )
    p.add_argument(
        "--checks",
        default="all",
        help="comma-separated subset of: " + ", ".join(verify.CHECKS) + " (default: all)",
    )
    add_max_enum(p)
    add_format(p)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
