"""Matrix input documents and report output documents.

A matrix document is either line-oriented text::

    # comment
    name tetrahedron
    size 4
    0 1 3
    0 2 inf

or the equivalent JSON object ``{"size": 4, "labels": [[0, 1, 3], [0, 2, "inf"]]}``.
Pairs not listed default to label 2.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple, Union

from .coxeter import INF, CoxeterMatrix
from .perron import GrowthReport

LabelValue = Union[int, str]


class DocumentError(ValueError):
    """Malformed input document; ``position`` locates the problem."""

    def __init__(self, message: str, position: Optional[str] = None):
        self.position = position
        super().__init__(f"{position}: {message}" if position else message)


@dataclass(frozen=True)
class MatrixDocument:
    size: int
    labels: Tuple[Tuple[int, int, LabelValue], ...] = ()
    name: Optional[str] = None

    def to_matrix(self) -> CoxeterMatrix:
        return CoxeterMatrix.from_labels(
            self.size,
            {(i, j): INF if m == "inf" else m for i, j, m in self.labels},
        )

    @classmethod
    def from_matrix(cls, M: CoxeterMatrix, name: Optional[str] = None) -> "MatrixDocument":
        labels = tuple(
            (i, j, "inf" if m == INF else m) for (i, j), m in sorted(M.labels().items())
        )
        return cls(M.size, labels, name)

    def to_text(self) -> str:
        lines = []
        if self.name:
            lines.append(f"name {self.name}")
        lines.append(f"size {self.size}")
        lines += [f"{i} {j} {m}" for i, j, m in self.labels]
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        doc: Dict[str, Any] = {"size": self.size, "labels": [list(x) for x in self.labels]}
        if self.name:
            doc["name"] = self.name
        return json.dumps(doc, sort_keys=True)


def _label(token: Any, where: str) -> LabelValue:
    if token == "inf":
        return "inf"
    if isinstance(token, str):
        try:
            token = int(token)
        except ValueError:
            raise DocumentError(f"label {token!r} is neither an integer nor 'inf'", where) from None
    if isinstance(token, bool) or not isinstance(token, int):
        raise DocumentError(f"label {token!r} is neither an integer nor 'inf'", where)
    if token < 2:
        raise DocumentError(f"label {token} must be at least 2", where)
    return token


def _index(token: Any, size: int, where: str) -> int:
    if isinstance(token, str):
        try:
            token = int(token)
        except ValueError:
            raise DocumentError(f"generator index {token!r} is not an integer", where) from None
    if isinstance(token, bool) or not isinstance(token, int):
        raise DocumentError(f"generator index {token!r} is not an integer", where)
    if not 0 <= token < size:
        raise DocumentError(f"generator index {token} out of range for size {size}", where)
    return token


def _build(size: int, entries: List[Tuple[Any, Any, Any, str]], name: Optional[str]) -> MatrixDocument:
    seen = set()
    labels = []
    for i, j, m, where in entries:
        i, j = _index(i, size, where), _index(j, size, where)
        if not i < j:
            raise DocumentError(f"pair ({i}, {j}) must satisfy i < j", where)
        if (i, j) in seen:
            raise DocumentError(f"duplicate pair ({i}, {j})", where)
        seen.add((i, j))
        labels.append((i, j, _label(m, where)))
    return MatrixDocument(size, tuple(labels), name)


def _check_size(size: Any, where: str) -> int:
    if isinstance(size, str):
        try:
            size = int(size)
        except ValueError:
            raise DocumentError(f"size {size!r} is not an integer", where) from None
    if isinstance(size, bool) or not isinstance(size, int) or size < 1:
        raise DocumentError(f"size must be a positive integer, got {size!r}", where)
    return size


def parse_text(text: str) -> MatrixDocument:
    size = None
    name = None
    entries = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        where = f"line {lineno}"
        tokens = line.split()
        if tokens[0] == "name":
            name = line[len("name"):].strip() or None
        elif tokens[0] == "size":
            if size is not None:
                raise DocumentError("repeated size header", where)
            if len(tokens) != 2:
                raise DocumentError("expected 'size N'", where)
            size = _check_size(tokens[1], where)
        else:
            if size is None:
                raise DocumentError("label triple before the 'size N' header", where)
            if len(tokens) != 3:
                raise DocumentError(f"expected 'i j m', got {line!r}", where)
            entries.append((*tokens, where))
    if size is None:
        raise DocumentError("missing 'size N' header")
    return _build(size, entries, name)


def parse_json(text: str) -> MatrixDocument:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(exc.msg, f"line {exc.lineno} column {exc.colno}") from None
    if not isinstance(doc, dict):
        raise DocumentError("top-level JSON value must be an object")
    if "size" not in doc:
        raise DocumentError("missing 'size'")
    size = _check_size(doc["size"], "size")
    name = doc.get("name")
    entries = []
    for k, item in enumerate(doc.get("labels", [])):
        where = f"labels[{k}]"
        if not isinstance(item, list) or len(item) != 3:
            raise DocumentError("expected a [i, j, m] triple", where)
        entries.append((*item, where))
    return _build(size, entries, name)


def parse_matrix_document(text: str) -> MatrixDocument:
    """Parse either accepted format, sniffing JSON by a leading ``{``."""
    if text.lstrip().startswith("{"):
        return parse_json(text)
    return parse_text(text)


# -- reports ---------------------------------------------------------------


def format_decimal(x: Fraction, digits: int) -> str:
    """Exact round-half-even decimal rendering of a rational."""
    scaled = round(Fraction(x) * 10**digits)
    sign = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(scaled), 10**digits)
    if digits == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:0{digits}d}"


def _fraction_str(x: Fraction) -> str:
    return str(Fraction(x))


def report_document(
    report: GrowthReport,
    echo: Dict[str, Any],
    digits: int = 5,
    timing: Optional[float] = None,
) -> Dict[str, Any]:
    doc: Dict[str, Any] = {
        "input": echo,
        "numerator": list(report.growth.numerator.coeffs),
        "denominator": list(report.growth.denominator.coeffs),
    }
    if report.tau is not None:
        lo, hi = report.tau
        doc["tau"] = {
            "lo": _fraction_str(lo),
            "hi": _fraction_str(hi),
            "exact": lo == hi,
            "decimal": format_decimal((lo + hi) / 2, digits),
        }
    else:
        doc["tau"] = None
    cert = report.perron
    doc["perron"] = {
        "certified": report.certified,
        "polynomial": list(report.h.coeffs) if report.h is not None else None,
        "support_gcd": cert.support_gcd if cert else None,
        "negative_coefficient_indices": list(cert.negative_coefficient_indices) if cert else [],
        "reasons": list(cert.reasons) if cert else [],
    }
    b = report.bounds
    doc["bounds"] = {
        "claim": f"{report.n - 3} <= tau <= {report.n - 1}",
        "proved": b.proved,
        "method": b.method,
        "lower": b.lower,
        "upper": b.upper,
        "witnesses": {k: _fraction_str(v) for k, v in b.witnesses.items()},
    }
    doc["right_angled_equality"] = report.right_angled_equality
    if timing is not None:
        doc["timing_seconds"] = round(timing, 6)
    return doc

