"""Matrix JSON format.

``{"rows": r, "cols": c, "entries": [[e, ...], ...]}`` where each entry is
an integer or a string ``"p"`` / ``"p/q"`` with integer ``p``, ``q``.
Floats, decimals, exponents and NaN-like tokens are rejected.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path

from .core import Mat
from .errors import ParseError

_RAT = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_rat(token, where: str = "") -> Fraction:
    if isinstance(token, bool):
        raise ParseError(f"{where}: boolean is not a rational entry")
    if isinstance(token, int):
        return Fraction(token)
    if isinstance(token, str):
        m = _RAT.match(token)
        if m:
            den = int(m.group(2)) if m.group(2) is not None else 1
            if den == 0:
                raise ParseError(f"{where}: zero denominator in {token!r}")
            return Fraction(int(m.group(1)), den)
    raise ParseError(f"{where}: {token!r} is not an integer or 'p/q' rational")


def format_rat(x: Fraction) -> int | str:
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def mat_to_obj(M: Mat) -> dict:
    return {"rows": M.rows, "cols": M.cols,
            "entries": [[format_rat(x) for x in M.row(i)] for i in range(M.rows)]}


def mat_from_obj(obj, source: str = "matrix") -> Mat:
    if not isinstance(obj, dict):
        raise ParseError(f"{source}: expected a JSON object")
    try:
        rows, cols, entries = obj["rows"], obj["cols"], obj["entries"]
    except KeyError as exc:
        raise ParseError(f"{source}: missing field {exc.args[0]!r}") from None
    for name, val in (("rows", rows), ("cols", cols)):
        if isinstance(val, bool) or not isinstance(val, int) or val < 0:
            raise ParseError(f"{source}: {name!r} must be a nonnegative integer")
    if not isinstance(entries, list) or len(entries) != rows:
        raise ParseError(f"{source}: expected {rows} rows of entries")
    flat = []
    for i, row in enumerate(entries):
        if not isinstance(row, list) or len(row) != cols:
            got = len(row) if isinstance(row, list) else type(row).__name__
            raise ParseError(f"{source}: row {i + 1} has {got} entries, expected {cols}")
        for j, tok in enumerate(row):
            flat.append(parse_rat(tok, f"{source}[{i + 1},{j + 1}]"))
    return Mat(rows, cols, flat)


def dumps_mat(M: Mat) -> str:
    return json.dumps(mat_to_obj(M))


def loads_mat(text: str, source: str = "matrix") -> Mat:
    try:
        obj = json.loads(text, parse_float=_reject_float, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{source}: malformed JSON ({exc.msg} at line {exc.lineno} col {exc.colno})") from None
    return mat_from_obj(obj, source)


def read_mat(path) -> Mat:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror}") from None
    return loads_mat(text, str(path))


def write_mat(M: Mat, path) -> None:
    Path(path).write_text(dumps_mat(M) + "\n")


def _reject_float(token: str):
    raise ParseError(f"non-integer number {token!r}; write rationals as \"p/q\"")


def _reject_constant(token: str):
    raise ParseError(f"invalid numeric token {token!r}")
