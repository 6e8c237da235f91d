"""Command-line front end.

Exit codes: 0 ok, 2 parse error, 3 guard exceeded, 4 finite input,
5 Serre violation, 6 golden mismatch.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional, Sequence

from .coxeter import EnumerationLimitError
from .documents import DocumentError, format_decimal, parse_matrix_document, report_document
from .ideal3 import TABLE1, AngleDataError, SerreViolationError, Table1Row, pyramid_family, validate
from .perron import DEFAULT_WIDTH, GrowthReport, report_for_matrix, report_for_vector
from .steinberg import FiniteGroupError

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_GUARD = 3
EXIT_FINITE = 4
EXIT_SERRE = 5
EXIT_MISMATCH = 6

MAX_FAMILY_M = 10**4


def _width_for(n: int, digits: int) -> Fraction:
    # tau width is about (root width) * n^2, since the root is at least 1/n
    return min(DEFAULT_WIDTH, Fraction(1, 10 ** (digits + 3) * max(n, 2) ** 2))


def _emit(doc: Dict[str, Any], fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(doc, sort_keys=True) + "\n")
    else:
        out.write(_render_text(doc) + "\n")


def _render_text(doc: Dict[str, Any]) -> str:
    lines = [f"input:        {json.dumps(doc['input'], sort_keys=True)}"]
    lines.append(f"numerator:    {doc['numerator']}")
    lines.append(f"denominator:  {doc['denominator']}")
    tau = doc["tau"]
    if tau is None:
        lines.append("tau:          not certified")
    elif tau["exact"]:
        lines.append(f"tau:          {tau['lo']} (exact) ~ {tau['decimal']}")
    else:
        lines.append(f"tau:          {tau['decimal']}  in [{tau['lo']}, {tau['hi']}]")
    perron = doc["perron"]
    verdict = "certified" if perron["certified"] else "not certified"
    if perron["reasons"] and not perron["certified"]:
        verdict += f" ({'; '.join(perron['reasons'])})"
    lines.append(f"perron:       {verdict}")
    b = doc["bounds"]
    lines.append(f"bounds:       {b['claim']}: {'proved' if b['proved'] else 'failed'} [{b['method']}]")
    if doc.get("right_angled_equality") is not None:
        lines.append(f"right-angled: {'consistent' if doc['right_angled_equality'] else 'INCONSISTENT'}")
    if "timing_seconds" in doc:
        lines.append(f"time:         {doc['timing_seconds']}s")
    return "\n".join(lines)


# -- commands ----------------------------------------------------------------


def cmd_growth(args, out, err) -> int:
    try:
        with open(args.file, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_PARSE
    try:
        document = parse_matrix_document(text)
        M = document.to_matrix()
    except (DocumentError, ValueError) as exc:
        err.write(f"parse error: {exc}\n")
        return EXIT_PARSE
    start = time.perf_counter()
    try:
        report = report_for_matrix(M, _width_for(M.size, args.digits))
    except EnumerationLimitError as exc:
        err.write(f"guard: {exc}\n")
        return EXIT_GUARD
    except FiniteGroupError as exc:
        err.write("finite Coxeter group; use the Solomon polynomial instead\n")
        if args.format == "json":
            out.write(json.dumps({"finite": True, "solomon": list(exc.solomon.coeffs)}) + "\n")
        else:
            out.write(f"solomon polynomial: {list(exc.solomon.coeffs)}\n")
        return EXIT_FINITE
    elapsed = time.perf_counter() - start if args.timing else None
    echo = {"size": document.size, "labels": [list(x) for x in document.labels]}
    if document.name:
        echo["name"] = document.name
    _emit(report_document(report, echo, args.digits, elapsed), args.format, out)
    return EXIT_OK


def cmd_ideal(args, out, err) -> int:
    try:
        v = validate(args.n, args.p, args.q, args.r, args.s)
    except SerreViolationError as exc:
        err.write(f"Serre violation: {exc}\n")
        out.write(f"residual: {exc.residual}\n")
        return EXIT_SERRE
    except AngleDataError as exc:
        err.write(f"invalid angle data: {exc}\n")
        return EXIT_PARSE
    start = time.perf_counter()
    report = report_for_vector(v, _width_for(v.n, args.digits))
    elapsed = time.perf_counter() - start if args.timing else None
    echo = {"n": v.n, "p": v.p, "q": v.q, "r": v.r, "s": v.s}
    _emit(report_document(report, echo, args.digits, elapsed), args.format, out)
    return EXIT_OK


@dataclass(frozen=True)
class Table1Outcome:
    row: Table1Row
    report: GrowthReport
    denominator_match: bool
    computed_rate: Optional[str]

    @property
    def rate_match(self) -> bool:
        return self.computed_rate == self.row.rate

    @property
    def passed(self) -> bool:
        return self.denominator_match and self.rate_match


def check_table1(rows: Sequence[Table1Row] = TABLE1, digits: int = 5) -> List[Table1Outcome]:
    """Recompute each reference row and compare against it."""
    outcomes = []
    for row in rows:
        report = report_for_vector(row.vector)
        rate = None
        if report.tau is not None:
            rate = format_decimal(sum(report.tau) / 2, digits)
        outcomes.append(
            Table1Outcome(row, report, report.growth.denominator == row.denominator, rate)
        )
    return outcomes


def _table1_line(o: Table1Outcome) -> str:
    v = o.row.vector
    label = f"({v.p},{v.q},{v.r},{v.s}) {o.row.kind:<7}"
    if o.passed:
        return f"PASS {label} denominator (t-1)({o.row.h}) rate {o.computed_rate}"
    diffs = []
    if not o.denominator_match:
        diffs.append(
            f"denominator: computed {list(o.report.growth.denominator.coeffs)}, "
            f"expected {list(o.row.denominator.coeffs)}"
        )
    if not o.rate_match:
        diffs.append(f"rate: computed {o.computed_rate}, expected {o.row.rate}")
    return f"FAIL {label} " + "; ".join(diffs)


def cmd_table1(args, out, err, rows: Sequence[Table1Row] = TABLE1) -> int:
    outcomes = check_table1(rows, args.digits)
    for o in outcomes:
        if args.format == "json":
            v = o.row.vector
            doc = report_document(o.report, {"n": v.n, "p": v.p, "q": v.q, "r": v.r, "s": v.s}, args.digits)
            doc["golden"] = {
                "kind": o.row.kind,
                "denominator": list(o.row.denominator.coeffs),
                "rate": o.row.rate,
                "denominator_match": o.denominator_match,
                "rate_match": o.rate_match,
                "passed": o.passed,
            }
            out.write(json.dumps(doc, sort_keys=True) + "\n")
        else:
            out.write(_table1_line(o) + "\n")
    return EXIT_OK if all(o.passed for o in outcomes) else EXIT_MISMATCH


def family_item(m: int, digits: int = 5) -> Dict[str, Any]:
    v, expected = pyramid_family(m)
    report = report_for_vector(v, _width_for(v.n, digits))
    doc = report_document(report, {"m": m, "n": v.n, "p": v.p, "q": v.q, "r": v.r, "s": v.s}, digits)
    doc["expected_denominator"] = list(expected.coeffs)
    doc["denominator_match"] = report.growth.denominator == expected
    return doc


def _family_docs(lo: int, hi: int, digits: int, jobs: int) -> Iterable[Dict[str, Any]]:
    ms = range(lo, hi + 1)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            # map keeps the results in order of m
            yield from pool.map(family_item, ms, [digits] * len(ms), chunksize=16)
    else:
        for m in ms:
            yield family_item(m, digits)


_CSV_FIELDS = ["m", "n", "p", "q", "r", "s", "denominator_match", "tau_lo", "tau_hi", "tau", "bounds_proved"]


def cmd_family(args, out, err) -> int:
    lo, hi = args.m_from, args.m_to
    if not 1 <= lo <= hi <= MAX_FAMILY_M:
        err.write(f"guard: need 1 <= from <= to <= {MAX_FAMILY_M}, got {lo}..{hi}\n")
        return EXIT_GUARD
    ok = True
    writer = None
    if args.format == "csv":
        writer = csv.DictWriter(out, fieldnames=_CSV_FIELDS, lineterminator="\n")
        writer.writeheader()
    for doc in _family_docs(lo, hi, args.digits, args.jobs):
        passed = doc["denominator_match"] and doc["bounds"]["proved"]
        ok = ok and passed
        if args.format == "json":
            out.write(json.dumps(doc, sort_keys=True) + "\n")
        elif writer is not None:
            e, tau = doc["input"], doc["tau"]
            writer.writerow(
                {
                    **{k: e[k] for k in "mnpqrs"},
                    "denominator_match": doc["denominator_match"],
                    "tau_lo": tau["lo"],
                    "tau_hi": tau["hi"],
                    "tau": tau["decimal"],
                    "bounds_proved": doc["bounds"]["proved"],
                }
            )
        else:
            e = doc["input"]
            out.write(
                f"{'PASS' if passed else 'FAIL'} m={e['m']} n={e['n']} "
                f"denominator {'ok' if doc['denominator_match'] else 'MISMATCH'} "
                f"tau {doc['tau']['decimal']} {doc['bounds']['claim']}: "
                f"{'proved' if doc['bounds']['proved'] else 'failed'}\n"
            )
    return EXIT_OK if ok else EXIT_MISMATCH


# -- argument parsing ------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="coxgrowth", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, formats=("text", "json")):
        p.add_argument("--digits", type=int, default=5, help="decimal places for tau (default 5)")
        p.add_argument("--format", choices=formats, default="text")
        p.add_argument("--timing", action="store_true", help="include wall-clock timing")

    p = sub.add_parser("growth", help="growth report for a Coxeter matrix document")
    p.add_argument("file")
    common(p)

    p = sub.add_parser("ideal", help="closed-form report for ideal angle data n p q r s")
    for name in "npqrs":
        p.add_argument(name, type=int)
    common(p)

    p = sub.add_parser("table1", help="recompute the six reference polytopes")
    common(p)

    p = sub.add_parser("family", help="sweep the glued pyramid family")
    p.add_argument("--from", dest="m_from", type=int, required=True)
    p.add_argument("--to", dest="m_to", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    common(p, formats=("text", "json", "csv"))
    return parser


COMMANDS = {"growth": cmd_growth, "ideal": cmd_ideal, "table1": cmd_table1, "family": cmd_family}


def main(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.digits < 0:
        err.write("--digits must be non-negative\n")
        return EXIT_PARSE
    return COMMANDS[args.command](args, out, err)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
