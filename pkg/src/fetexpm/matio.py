"""Plain-text square-matrix files.

Layout: any number of ``#`` comment lines, one header line holding the
dimension ``n``, then exactly ``n`` rows of ``n`` whitespace-separated
entries.  A bare number is a real entry; a complex entry is a
parenthesized pair, ``(re,im)`` or ``(re im)``.  Values are written back
with 17 significant digits, which round-trips doubles exactly.
"""

import math

import numpy as np

from .dense import as_complex_matrix


class MatrixParseError(ValueError):
    """Malformed matrix text, with 1-based line/column of the offence."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def _tokenize(text: str, line_no: int):
    """Split one line into (token, line, column) triples; parens group."""
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        start = i
        if ch == "(":
            end = text.find(")", i)
            if end < 0:
                raise MatrixParseError("unterminated '('", line_no, start + 1)
            tokens.append((text[i : end + 1], line_no, start + 1))
            i = end + 1
        else:
            while i < len(text) and not text[i].isspace() and text[i] != "(":
                i += 1
            tokens.append((text[start:i], line_no, start + 1))
    return tokens


def _parse_real(text: str, line: int, column: int) -> float:
    try:
        value = float(text)
    except ValueError:
        raise MatrixParseError(f"not a number: {text!r}", line, column) from None
    if not math.isfinite(value):
        raise MatrixParseError(f"non-finite value: {text!r}", line, column)
    return value


def _parse_entry(token: str, line: int, column: int) -> complex:
    if token.startswith("("):
        inner = token[1:-1]
        parts = inner.split(",") if "," in inner else inner.split()
        if len(parts) != 2:
            raise MatrixParseError(
                f"complex entry needs two components: {token!r}", line, column
            )
        re = _parse_real(parts[0].strip(), line, column)
        im = _parse_real(parts[1].strip(), line, column)
        return complex(re, im)
    return complex(_parse_real(token, line, column), 0.0)


def parse_matrix(text: str) -> np.ndarray:
    """Parse matrix text into a complex array, reporting line/column on failure."""
    rows = []
    last_line = 0
    for line_no, line in enumerate(text.splitlines(), start=1):
        last_line = line_no
        if line.lstrip().startswith("#") or not line.strip():
            continue
        rows.append(_tokenize(line, line_no))

    if not rows:
        raise MatrixParseError("empty matrix file", last_line + 1, 1)
    header = rows[0]
    if len(header) != 1:
        tok, line, col = header[1]
        raise MatrixParseError(f"header must be a single dimension, got {tok!r}", line, col)
    tok, line, col = header[0]
    try:
        n = int(tok)
    except ValueError:
        raise MatrixParseError(f"dimension must be an integer, got {tok!r}", line, col) from None
    if n < 1:
        raise MatrixParseError(f"dimension must be positive, got {n}", line, col)

    data_rows = rows[1:]
    if len(data_rows) < n:
        raise MatrixParseError(
            f"expected {n} rows, found {len(data_rows)}", last_line + 1, 1
        )
    if len(data_rows) > n:
        _, line, col = data_rows[n][0]
        raise MatrixParseError(f"unexpected data after {n} rows", line, col)

    out = np.empty((n, n), dtype=np.complex128)
    for i, row in enumerate(data_rows):
        if len(row) != n:
            _, line, col = row[n] if len(row) > n else row[-1]
            raise MatrixParseError(
                f"expected {n} entries in row, found {len(row)}", line, col
            )
        for j, (tok, line, col) in enumerate(row):
            out[i, j] = _parse_entry(tok, line, col)
    return out


def load_matrix(path) -> np.ndarray:
    """Read and parse a matrix file from disk."""
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise MatrixParseError(f"cannot read {path}: {exc.strerror}", 0, 0) from exc
    return parse_matrix(text)


def format_matrix(a) -> str:
    """Render a matrix as parseable text: header line, then one row per line."""
    a = as_complex_matrix(a)
    n, n_cols = a.shape
    if n != n_cols:
        raise ValueError(f"matrix must be square, got {a.shape}")
    lines = [str(n)]
    for row in a:
        lines.append(" ".join(f"({z.real:.17g},{z.imag:.17g})" for z in row))
    return "\n".join(lines) + "\n"
