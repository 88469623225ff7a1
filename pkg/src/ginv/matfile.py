"""Text format for matrices: a "rows cols" header, then whitespace-separated
complex entries like ``2``, ``-1.5i``, ``3+4i`` or ``1-2j`` (no spaces inside
an entry).  Blank lines and ``#`` comments are skipped.  Printing always uses
``i`` and %.17g parts, so print-then-parse round-trips every double exactly.
"""

from __future__ import annotations

import re

import numpy as np

from .errors import MatrixParseError
from .matcore import as_matrix

__all__ = ["parse_matrix", "format_matrix", "load_matrix", "save_matrix"]

_FLOAT = r"(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?"
_RE_REAL = re.compile(rf"^[+-]?{_FLOAT}$")
_RE_IMAG = re.compile(rf"^(?P<coeff>[+-]?(?:{_FLOAT})?)[ij]$")
_RE_BOTH = re.compile(rf"^(?P<real>[+-]?{_FLOAT})(?P<coeff>[+-](?:{_FLOAT})?)[ij]$")


def _imag_coeff(text: str) -> float:
    if text in ("", "+"):
        return 1.0
    if text == "-":
        return -1.0
    return float(text)


def _parse_entry(token: str, line: int, column: int) -> complex:
    m = _RE_BOTH.match(token)
    if m:
        return complex(float(m.group("real")), _imag_coeff(m.group("coeff")))
    m = _RE_IMAG.match(token)
    if m:
        return complex(0.0, _imag_coeff(m.group("coeff")))
    if _RE_REAL.match(token):
        return complex(float(token), 0.0)
    raise MatrixParseError(f"malformed entry {token!r}", line, column)


def _content_tokens(text: str):
    """Yield (token, line_number, column_number), 1-based, skipping comments."""
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.split("#", 1)[0]
        for m in re.finditer(r"\S+", stripped):
            yield m.group(0), lineno, m.start() + 1


def parse_matrix(text: str) -> np.ndarray:
    tokens = _content_tokens(text)
    try:
        rows_tok, rline, rcol = next(tokens)
    except StopIteration:
        raise MatrixParseError("empty matrix file", 1, 1) from None
    try:
        cols_tok, cline, ccol = next(tokens)
    except StopIteration:
        raise MatrixParseError("header must be 'rows cols'", rline, rcol) from None
    try:
        rows = int(rows_tok)
    except ValueError:
        raise MatrixParseError(f"row count {rows_tok!r} is not an integer", rline, rcol) from None
    try:
        cols = int(cols_tok)
    except ValueError:
        raise MatrixParseError(f"column count {cols_tok!r} is not an integer", cline, ccol) from None
    if rows < 1 or cols < 1:
        raise MatrixParseError(f"dimensions must be positive, got {rows} x {cols}", rline, rcol)

    entries = np.zeros(rows * cols, dtype=complex)
    for i in range(rows * cols):
        try:
            token, line, col = next(tokens)
        except StopIteration:
            raise MatrixParseError(
                f"expected {rows * cols} entries, found {i}", rline, rcol
            ) from None
        entries[i] = _parse_entry(token, line, col)
    try:
        extra, line, col = next(tokens)
    except StopIteration:
        pass
    else:
        raise MatrixParseError(f"unexpected trailing token {extra!r}", line, col)
    return as_matrix(entries.reshape(rows, cols))


def _format_part(x: float) -> str:
    return "%.17g" % x


def format_entry(z: complex) -> str:
    re_part, im_part = z.real, z.imag
    if im_part == 0.0:
        return _format_part(re_part)
    if re_part == 0.0:
        return _format_part(im_part) + "i"
    sign = "+" if im_part > 0 else "-"
    return _format_part(re_part) + sign + _format_part(abs(im_part)) + "i"


def format_matrix(a: np.ndarray) -> str:
    a = as_matrix(a)
    lines = [f"{a.shape[0]} {a.shape[1]}"]
    for row in a:
        lines.append(" ".join(format_entry(z) for z in row))
    return "\n".join(lines) + "\n"


def load_matrix(path) -> np.ndarray:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_matrix(fh.read())


def save_matrix(path, a: np.ndarray) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_matrix(a))
