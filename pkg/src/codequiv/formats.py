"""Text formats for matrices and vectors.

Matrix file::

    B2 <rows> <cols>
    <rows lines of exactly <cols> characters from {0,1}>

Every line ends with a single ``\\n`` and carries no trailing whitespace.
A vector file is one line of ``0``/``1`` characters.  Permutations are
stored as permutation matrices (a 1 at row ``j``, column ``image[j]``).
"""

from __future__ import annotations

from pathlib import Path

from .f2linalg import BitMatrix, Permutation, format_row, parse_row


class FormatError(ValueError):
    pass


def dumps_matrix(M: BitMatrix) -> str:
    lines = [f"B2 {M.nrows} {M.ncols}"]
    lines.extend(format_row(r, M.ncols) for r in M.rows)
    return "\n".join(lines) + "\n"


def loads_matrix(text: str) -> BitMatrix:
    if not text.endswith("\n"):
        raise FormatError("matrix file must end with a newline")
    lines = text[:-1].split("\n")
    header = lines[0].split(" ")
    if len(header) != 3 or header[0] != "B2" or not all(h.isdigit() for h in header[1:]):
        raise FormatError(f"bad header {lines[0]!r}")
    nrows, ncols = int(header[1]), int(header[2])
    body = lines[1:]
    if len(body) != nrows:
        raise FormatError(f"expected {nrows} rows, found {len(body)}")
    rows = []
    for i, line in enumerate(body):
        if len(line) != ncols:
            raise FormatError(f"row {i} has {len(line)} characters, expected {ncols}")
        try:
            rows.append(parse_row(line))
        except ValueError as exc:
            raise FormatError(str(exc)) from None
    return BitMatrix(tuple(rows), ncols)


def dumps_vector(bits) -> str:
    return "".join("1" if b else "0" for b in bits) + "\n"


def loads_vector(text: str) -> list[int]:
    if not text.endswith("\n") or "\n" in text[:-1]:
        raise FormatError("vector file must be exactly one newline-terminated line")
    line = text[:-1]
    if any(c not in "01" for c in line):
        raise FormatError("vector contains characters outside {0,1}")
    return [int(c) for c in line]


def write_matrix(path, M: BitMatrix) -> None:
    Path(path).write_text(dumps_matrix(M))


def read_matrix(path) -> BitMatrix:
    return loads_matrix(Path(path).read_text())


def write_vector(path, bits) -> None:
    Path(path).write_text(dumps_vector(bits))


def read_vector(path) -> list[int]:
    return loads_vector(Path(path).read_text())


def write_permutation(path, P: Permutation) -> None:
    write_matrix(path, P.to_matrix())


def read_permutation(path) -> Permutation:
    try:
        return Permutation.from_matrix(read_matrix(path))
    except ValueError as exc:
        raise FormatError(f"not a permutation matrix: {exc}") from None
