"""Command-line entry point.

Exit codes: 0 success, 1 a verification or assertion failed, 2 bad arguments.
"""
from __future__ import annotations

import argparse
import contextlib
import csv
import json
import sys
from typing import Iterator, List, Optional, TextIO

from .exceptional import (
    DEFAULT_HEIGHT_CAP,
    ExceptionalEntry,
    VerificationError,
    exceptional_set,
    verify_exceptional,
)
from .scan import ScanConfig, save_report, scan_range, write_jsonl, write_tsv
from .solver import InvalidTriple, Triple, enumerate_solutions, parse_height
from .system import brute_force_system, theorem_certificate


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@contextlib.contextmanager
def _output(path: Optional[str]) -> Iterator[TextIO]:
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", newline="") as fh:
            yield fh


def _dump(fh: TextIO, doc: dict) -> None:
    fh.write(json.dumps(doc, separators=(",", ":")) + "\n")


def _write_table(fh: TextIO, fmt: str, columns: List[str], docs: List[dict]) -> None:
    if fmt == "jsonl":
        for d in docs:
            _dump(fh, d)
        return
    w = csv.writer(fh, delimiter="\t", lineterminator="\n")
    w.writerow(columns)
    for d in docs:
        w.writerow([v if isinstance(v, (str, int)) and not isinstance(v, bool)
                    else json.dumps(v, separators=(",", ":")) for v in (d[k] for k in columns)])


def _triple(args) -> Triple:
    try:
        return Triple(args.a, args.b, args.c)
    except InvalidTriple as exc:
        raise UsageError(str(exc)) from None


def _height(text: str, c: Optional[int] = None) -> int:
    try:
        return parse_height(text, c)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_solve(args) -> int:
    t = _triple(args)
    h = _height(args.height, t.c)
    if h < t.c:
        raise UsageError(f"height must be at least c={t.c}")
    sols = enumerate_solutions(t, h)
    if args.cmd == "count":
        docs = [{"a": t.a, "b": t.b, "c": t.c, "H": str(h), "N": len(sols)}]
        cols = ["a", "b", "c", "H", "N"]
    else:
        docs = [
            {"a": t.a, "b": t.b, "c": t.c, "x": s.x, "y": s.y, "z": s.z, "value": str(t.c ** s.z)}
            for s in sols
        ]
        cols = ["a", "b", "c", "x", "y", "z", "value"]
    with _output(args.out) as fh:
        _write_table(fh, args.format, cols, docs)
    return 0


def cmd_scan(args) -> int:
    try:
        cfg = ScanConfig(
            args.a_max, args.b_max, args.c_max, _height(args.height),
            exclude_perfect_powers=not args.allow_perfect_powers, workers=args.workers,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    report = scan_range(cfg)
    if args.out:
        if args.format == "tsv":
            with open(args.out, "w", newline="") as fh:
                write_tsv(report.rows, fh)
        else:
            save_report(report, args.out)
    else:
        (write_tsv if args.format == "tsv" else write_jsonl)(report.rows, sys.stdout)
    print(f"checksum {report.checksum} rows {len(report.rows)}", file=sys.stderr)
    return 0


def _entry_doc(e: ExceptionalEntry, height: Optional[int], ok: bool, error: str = "") -> dict:
    t = e.triple
    doc = {
        "a": t.a,
        "b": t.b,
        "c": t.c,
        "H": "auto" if height is None else str(height),
        "N": len(e.witnesses),
        "solutions": [list(s) for s in e.witnesses],
        "exceptional": True,
        "kind": e.kind,
        "r": e.r,
        "verified": ok,
    }
    if error:
        doc["error"] = error
    return doc


def cmd_exceptional(args) -> int:
    if args.r_max < 2:
        raise UsageError("--r-max must be >= 2")
    height = None if args.height == "auto" else _height(args.height)
    failures = 0
    docs = []
    for e in exceptional_set(args.r_max, verify=False):
        try:
            v = verify_exceptional(e, height, cap=args.cap)
            docs.append(_entry_doc(v, height, True))
        except VerificationError as exc:
            failures += 1
            docs.append(_entry_doc(e, height, False, str(exc)))
    with _output(args.out) as fh:
        _write_table(fh, args.format, ["a", "b", "c", "H", "N", "solutions", "kind", "r", "verified"], docs)
    print(f"{len(docs) - failures}/{len(docs)} exceptional triples verified", file=sys.stderr)
    return 1 if failures else 0


def cmd_system(args) -> int:
    try:
        sols = brute_force_system(args.c, args.a_max, args.z_max)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    docs = [dict(zip(("a", "b", "c", "z", "Z"), map(str, s))) for s in sols]
    with _output(args.out) as fh:
        _write_table(fh, args.format, ["a", "b", "c", "z", "Z"], docs)
    return 0


def cmd_certify(args) -> int:
    if args.r_scan < 1 or args.oracle_c_max < 2:
        raise UsageError("--r-scan must be >= 1 and --oracle-c-max >= 2")
    cert = theorem_certificate(args.r_scan, args.oracle_c_max)
    with _output(args.out) as fh:
        json.dump(cert.to_json(), fh, separators=(",", ":"))
        fh.write("\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="expdioph", description=__doc__)
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    def common(sp, fmt=True):
        if fmt:
            sp.add_argument("--format", choices=("jsonl", "tsv"), default="jsonl")
        sp.add_argument("--out", metavar="PATH")

    for name in ("solve", "count"):
        sp = sub.add_parser(name, help=f"{name} solutions of a^x + b^y = c^z")
        sp.add_argument("--a", type=int, required=True)
        sp.add_argument("--b", type=int, required=True)
        sp.add_argument("--c", type=int, required=True)
        sp.add_argument("--height", default="10^12",
                        help="bound on c^z: decimal, B^k, or c^k (default 10^12)")
        common(sp)
        sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("scan", help="census of multi-solution triples")
    sp.add_argument("--a-max", type=int, required=True)
    sp.add_argument("--b-max", type=int, required=True)
    sp.add_argument("--c-max", type=int, required=True)
    sp.add_argument("--height", required=True)
    sp.add_argument("--allow-perfect-powers", action="store_true")
    sp.add_argument("--workers", type=int, default=1)
    common(sp)
    sp.set_defaults(func=cmd_scan)

    sp = sub.add_parser("exceptional", help="verify the known exceptional triples")
    sp.add_argument("--r-max", type=int, required=True)
    sp.add_argument("--height", default="auto",
                    help="'auto' starts at max(c^3, 10^8) and doubles as needed")
    sp.add_argument("--cap", type=lambda s: _height(s), default=DEFAULT_HEIGHT_CAP,
                    help="upper limit for the auto height (default 2^256)")
    common(sp)
    sp.set_defaults(func=cmd_exceptional)

    sp = sub.add_parser("system", help="brute-force search of a^2+b=c^z, a+b^2=c^Z")
    sp.add_argument("--c", type=int, required=True)
    sp.add_argument("--a-max", type=int, default=10 ** 4)
    sp.add_argument("--z-max", type=int, default=40)
    common(sp)
    sp.set_defaults(func=cmd_system)

    sp = sub.add_parser("certify", help="replay the case analysis and cross-check by brute force")
    sp.add_argument("--r-scan", type=int, default=10 ** 4)
    sp.add_argument("--oracle-c-max", type=int, default=200)
    common(sp, fmt=False)
    sp.set_defaults(func=cmd_certify)
    return p


def run(argv: Optional[List[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (AssertionError, VerificationError) as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
