"""Reading and writing distance matrices and characteristics records.

Two on-disk formats for matrices:
  * CSV: n rows of n comma-separated decimals, optionally preceded by a
    header row of point labels.
  * JSON: an object {"labels": [...], "dist": [[...], ...]} where "labels"
    is optional.
NaN and infinite entries are rejected at parse time in both formats.

Characteristics records travel as JSON objects with keys m, diam,
alpha_minus, alpha_plus, d_minus, d_plus (optional eps). The string "inf" is
accepted and emitted for the infinite alpha sentinel of m = 1.
"""

from __future__ import annotations

import csv
import io
import json
import math
from pathlib import Path

from .errors import ParseError
from .metric import FiniteMetricSpace


def _reject_constant(token: str):
    raise ParseError(f"non-finite value {token!r} in JSON input")


def _parse_float(token: str) -> float:
    try:
        value = float(token)
    except ValueError:
        raise ParseError(f"expected a number, got {token!r}") from None
    if not math.isfinite(value):
        raise ParseError(f"non-finite matrix entry {token!r}")
    return value


def _looks_numeric(token: str) -> bool:
    try:
        float(token)
        return True
    except ValueError:
        return False


def parse_matrix_csv(text: str) -> tuple[list[str] | None, list[list[float]]]:
    """Parse CSV text into (labels or None, matrix rows)."""
    rows = [row for row in csv.reader(io.StringIO(text)) if row and any(c.strip() for c in row)]
    if not rows:
        raise ParseError("empty CSV input")
    labels = None
    first = [c.strip() for c in rows[0]]
    if not all(_looks_numeric(c) for c in first):
        labels = first
        rows = rows[1:]
        if not rows:
            raise ParseError("CSV has a header row but no matrix rows")
    matrix = [[_parse_float(c.strip()) for c in row] for row in rows]
    n = len(matrix)
    for row in matrix:
        if len(row) != n:
            raise ParseError(
                f"matrix must be square, got a row of length {len(row)} for n={n}"
            )
    if labels is not None and len(labels) != n:
        raise ParseError(f"{len(labels)} header labels for a {n}-row matrix")
    return labels, matrix


def parse_matrix_json(text: str) -> tuple[list[str] | None, list[list[float]]]:
    """Parse JSON text of the form {"labels": [...], "dist": [[...]]}."""
    try:
        obj = json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(obj, dict) or "dist" not in obj:
        raise ParseError('JSON matrix input must be an object with a "dist" key')
    dist = obj["dist"]
    if not isinstance(dist, list) or not all(isinstance(r, list) for r in dist):
        raise ParseError('"dist" must be a list of rows')
    matrix = []
    for row in dist:
        parsed = []
        for cell in row:
            if not isinstance(cell, (int, float)) or isinstance(cell, bool):
                raise ParseError(f"matrix entry {cell!r} is not a number")
            if not math.isfinite(float(cell)):
                raise ParseError(f"non-finite matrix entry {cell!r}")
            parsed.append(float(cell))
        matrix.append(parsed)
    labels = obj.get("labels")
    if labels is not None:
        if not isinstance(labels, list) or not all(isinstance(s, str) for s in labels):
            raise ParseError('"labels" must be a list of strings')
    return labels, matrix


def load_space(
    path: str | Path,
    *,
    strict_triangle: bool = True,
    tol: float | None = None,
) -> FiniteMetricSpace:
    """Read a distance matrix file (CSV or JSON, chosen by extension)."""
    path = Path(path)
    text = path.read_text()
    if path.suffix.lower() == ".json":
        labels, matrix = parse_matrix_json(text)
    else:
        labels, matrix = parse_matrix_csv(text)
    return FiniteMetricSpace(matrix, labels, strict_triangle=strict_triangle, tol=tol)


def space_to_csv(space: FiniteMetricSpace) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(space.labels)
    for row in space.dist:
        writer.writerow([format(float(v), ".17g") for v in row])
    return out.getvalue()


def space_to_json(space: FiniteMetricSpace) -> str:
    return json.dumps(
        {"labels": list(space.labels), "dist": [[float(v) for v in row] for row in space.dist]},
        indent=2,
    ) + "\n"


def save_space(space: FiniteMetricSpace, path: str | Path) -> None:
    path = Path(path)
    if path.suffix.lower() == ".json":
        path.write_text(space_to_json(space))
    else:
        path.write_text(space_to_csv(space))


_CHAR_KEYS = ("m", "diam", "alpha_minus", "alpha_plus", "d_minus", "d_plus")


def parse_characteristics_json(text: str):
    """Parse a characteristics JSON object; returns a Characteristics."""
    from .simplex_distance import Characteristics

    try:
        obj = json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise ParseError("characteristics input must be a JSON object")
    missing = [k for k in _CHAR_KEYS if k not in obj]
    if missing:
        raise ParseError(f"characteristics JSON missing keys: {', '.join(missing)}")

    def num(key, allow_inf=False):
        v = obj[key]
        if v == "inf" and allow_inf:
            return math.inf
        if not isinstance(v, (int, float)) or isinstance(v, bool):
            raise ParseError(f"characteristics field {key!r} is not a number")
        return float(v)

    eps = None
    if "eps" in obj and obj["eps"] is not None:
        v = obj["eps"]
        if not isinstance(v, (int, float)) or isinstance(v, bool):
            raise ParseError('characteristics field "eps" is not a number')
        eps = float(v)
    m = obj["m"]
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise ParseError(f'characteristics field "m" must be a positive integer, got {m!r}')
    return Characteristics(
        m=m,
        diam=num("diam"),
        alpha_minus=num("alpha_minus", allow_inf=True),
        alpha_plus=num("alpha_plus", allow_inf=True),
        d_minus=num("d_minus"),
        d_plus=num("d_plus"),
        eps=eps,
    )


def characteristics_to_json(chars) -> str:
    def enc(v: float):
        return "inf" if math.isinf(v) else v

    obj = {
        "m": chars.m,
        "diam": chars.diam,
        "alpha_minus": enc(chars.alpha_minus),
        "alpha_plus": enc(chars.alpha_plus),
        "d_minus": chars.d_minus,
        "d_plus": chars.d_plus,
    }
    if chars.eps is not None:
        obj["eps"] = chars.eps
    return json.dumps(obj, indent=2) + "\n"


def load_input(path: str | Path, *, strict_triangle: bool = True, tol: float | None = None):
    """Load either a distance matrix or a characteristics record.

    JSON objects are dispatched on their keys ("dist" vs "alpha_minus");
    anything else is treated as matrix CSV.
    """
    path = Path(path)
    text = path.read_text()
    if path.suffix.lower() == ".json":
        try:
            obj = json.loads(text, parse_constant=_reject_constant)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from None
        if isinstance(obj, dict) and "dist" in obj:
            labels, matrix = parse_matrix_json(text)
            return FiniteMetricSpace(matrix, labels, strict_triangle=strict_triangle, tol=tol)
        if isinstance(obj, dict) and "alpha_minus" in obj:
            return parse_characteristics_json(text)
        raise ParseError('JSON input must contain either "dist" or "alpha_minus"')
    labels, matrix = parse_matrix_csv(text)
    return FiniteMetricSpace(matrix, labels, strict_triangle=strict_triangle, tol=tol)
