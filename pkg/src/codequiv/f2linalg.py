"""Exact linear algebra over GF(2).

Rows are stored as Python ints used as bitsets: bit ``j`` of a row is the
entry in column ``j``.  Row operations are single XORs, so access and
elimination cost O(cols / word) per row.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import DimensionMismatch, Singular


@dataclass(frozen=True)
class BitMatrix:
    """Immutable dense binary matrix."""

    rows: tuple[int, ...]
    ncols: int

    def __post_init__(self):
        if self.ncols < 0:
            raise ValueError("ncols must be non-negative")
        limit = 1 << self.ncols
        for r in self.rows:
            if r < 0 or r >= limit:
                raise ValueError(f"row value {r} does not fit in {self.ncols} columns")

    # -- construction -------------------------------------------------
    @classmethod
    def from_rows(cls, rows: Iterable[int], ncols: int) -> "BitMatrix":
        return cls(tuple(int(r) for r in rows), ncols)

    @classmethod
    def from_array(cls, data, ncols: int | None = None) -> "BitMatrix":
        """Build from a nested sequence or 2-D array of 0/1 entries."""
        arr = np.asarray(data, dtype=np.int64)
        if arr.ndim == 1 and arr.size == 0:
            return cls((), 0 if ncols is None else ncols)
        if arr.ndim != 2:
            raise ValueError("expected a 2-D array")
        if np.any((arr != 0) & (arr != 1)):
            raise ValueError("entries must be 0 or 1")
        nr, nc = arr.shape
        if ncols is not None and ncols != nc:
            raise DimensionMismatch(f"expected {ncols} columns, got {nc}")
        return cls(tuple(vector_to_int(row) for row in arr), nc)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "BitMatrix":
        return cls((0,) * nrows, ncols)

    @classmethod
    def identity(cls, size: int) -> "BitMatrix":
        return cls(tuple(1 << i for i in range(size)), size)

    # -- accessors ----------------------------------------------------
    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), self.ncols)

    def __getitem__(self, idx: tuple[int, int]) -> int:
        i, j = idx
        if not 0 <= j < self.ncols:
            raise IndexError(j)
        return (self.rows[i] >> j) & 1

    def column(self, j: int) -> int:
        """Column ``j`` as an int bitset over row indices."""
        out = 0
        for i, r in enumerate(self.rows):
            out |= ((r >> j) & 1) << i
        return out

    def to_array(self) -> np.ndarray:
        out = np.zeros(self.shape, dtype=np.uint8)
        for i, r in enumerate(self.rows):
            out[i] = int_to_vector(r, self.ncols)
        return out

    def to_lists(self) -> list[list[int]]:
        return self.to_array().tolist()

    def transpose(self) -> "BitMatrix":
        return BitMatrix(tuple(self.column(j) for j in range(self.ncols)), self.nrows)

    def select_columns(self, cols: Sequence[int]) -> "BitMatrix":
        """Keep the listed columns, in the listed order."""
        return BitMatrix(tuple(select_bits(r, cols) for r in self.rows), len(cols))

    def vstack(self, other: "BitMatrix") -> "BitMatrix":
        if other.ncols != self.ncols:
            raise DimensionMismatch("vstack needs equal column counts")
        return BitMatrix(self.rows + other.rows, self.ncols)

    def is_zero(self) -> bool:
        return not any(self.rows)

    def __str__(self) -> str:
        return "\n".join(format_row(r, self.ncols) for r in self.rows)


@dataclass(frozen=True)
class Permutation:
    """Bijection of ``{0..n-1}``; ``image[j]`` is where ``j`` goes."""

    image: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.image) != list(range(len(self.image))):
            raise ValueError("image is not a bijection on 0..n-1")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @classmethod
    def from_sequence(cls, seq: Iterable[int]) -> "Permutation":
        return cls(tuple(int(x) for x in seq))

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, j: int) -> int:
        return self.image[j]

    def __len__(self) -> int:
        return len(self.image)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.image)
        for j, t in enumerate(self.image):
            inv[t] = j
        return Permutation(tuple(inv))

    def then(self, other: "Permutation") -> "Permutation":
        """Apply ``self`` first, then ``other``."""
        if other.n != self.n:
            raise DimensionMismatch("permutations act on different point sets")
        return Permutation(tuple(other.image[t] for t in self.image))

    def support(self) -> int:
        return sum(1 for j, t in enumerate(self.image) if j != t)

    def is_identity(self) -> bool:
        return all(j == t for j, t in enumerate(self.image))

    def to_matrix(self) -> BitMatrix:
        """Permutation matrix with a 1 at (j, image[j])."""
        return BitMatrix(tuple(1 << t for t in self.image), self.n)

    @classmethod
    def from_matrix(cls, P: BitMatrix) -> "Permutation":
        if P.nrows != P.ncols:
            raise DimensionMismatch("permutation matrix must be square")
        image = []
        for r in P.rows:
            if r == 0 or r & (r - 1):
                raise ValueError("row is not a unit vector")
            image.append(r.bit_length() - 1)
        return cls(tuple(image))


# -- bit helpers ------------------------------------------------------

def vector_to_int(bits: Iterable[int]) -> int:
    out = 0
    for j, b in enumerate(bits):
        if b:
            out |= 1 << j
    return out


def int_to_vector(x: int, n: int) -> np.ndarray:
    return np.array([(x >> j) & 1 for j in range(n)], dtype=np.uint8)


def format_row(x: int, n: int) -> str:
    return "".join("1" if (x >> j) & 1 else "0" for j in range(n))


def parse_row(s: str) -> int:
    if any(c not in "01" for c in s):
        raise ValueError(f"row contains characters outside {{0,1}}: {s!r}")
    return vector_to_int(c == "1" for c in s)


def select_bits(x: int, cols: Sequence[int]) -> int:
    out = 0
    for i, c in enumerate(cols):
        out |= ((x >> c) & 1) << i
    return out


def popcount(x: int) -> int:
    return bin(x).count("1")


def parity(x: int) -> int:
    return popcount(x) & 1


# -- core operations --------------------------------------------------

def _rref_rows(rows: Sequence[int], ncols: int) -> tuple[list[int], list[int]]:
    work = [r for r in rows if r]
    pivots: list[int] = []
    top = 0
    for col in range(ncols):
        bit = 1 << col
        found = -1
        for i in range(top, len(work)):
            if work[i] & bit:
                found = i
                break
        if found < 0:
            continue
        work[top], work[found] = work[found], work[top]
        p = work[top]
        for i in range(len(work)):
            if i != top and work[i] & bit:
                work[i] ^= p
        pivots.append(col)
        top += 1
        if top == len(work):
            break
    return work[:top], pivots


def rref(M: BitMatrix) -> tuple[BitMatrix, list[int], int]:
    """Reduced row echelon form.

    Returns ``(R, pivots, rank)``.  ``R`` keeps the row count of ``M``,
    with zero rows at the bottom.
    """
    nonzero, pivots = _rref_rows(M.rows, M.ncols)
    R = BitMatrix(tuple(nonzero) + (0,) * (M.nrows - len(nonzero)), M.ncols)
    return R, pivots, len(pivots)


def rank(M: BitMatrix) -> int:
    return len(_rref_rows(M.rows, M.ncols)[1])


def canonical_rows(M: BitMatrix) -> tuple[int, ...]:
    """Nonzero rows of the RREF; identical exactly when row spaces agree."""
    return tuple(_rref_rows(M.rows, M.ncols)[0])


def kernel_basis(M: BitMatrix) -> BitMatrix:
    """Basis (in RREF) of ``{x : M x^T = 0}``."""
    n = M.ncols
    reduced, pivots = _rref_rows(M.rows, n)
    pivot_set = set(pivots)
    basis = []
    for f in range(n):
        if f in pivot_set:
            continue
        v = 1 << f
        for row, p in zip(reduced, pivots):
            if (row >> f) & 1:
                v |= 1 << p
        basis.append(v)
    out, _ = _rref_rows(basis, n)
    return BitMatrix(tuple(out), n)


def mul(A: BitMatrix, B: BitMatrix) -> BitMatrix:
    if A.ncols != B.nrows:
        raise DimensionMismatch(f"cannot multiply {A.shape} by {B.shape}")
    brows = B.rows
    out = []
    for a in A.rows:
        acc = 0
        j = 0
        while a:
            if a & 1:
                acc ^= brows[j]
            a >>= 1
            j += 1
        out.append(acc)
    return BitMatrix(tuple(out), B.ncols)


def vec_mul(v: int, B: BitMatrix) -> int:
    """Row vector (as int over ``B.nrows`` bits) times ``B``."""
    acc = 0
    j = 0
    while v:
        if v & 1:
            acc ^= B.rows[j]
        v >>= 1
        j += 1
    return acc


def invert(M: BitMatrix) -> BitMatrix:
    n = M.nrows
    if M.ncols != n:
        raise DimensionMismatch("only square matrices can be inverted")
    # augment as [M | I] with I in the high bits
    aug = [r | (1 << (n + i)) for i, r in enumerate(M.rows)]
    reduced, pivots = _rref_rows(aug, 2 * n)
    if len(pivots) < n or pivots[n - 1] >= n:
        raise Singular("matrix is singular over GF(2)")
    mask = (1 << n) - 1
    return BitMatrix(tuple((r >> n) & mask for r in reduced[:n]), n)


def apply_perm_cols(M: BitMatrix, P: Permutation) -> BitMatrix:
    """Input column ``j`` lands at output column ``P.image[j]`` (i.e. ``M·P``)."""
    if P.n != M.ncols:
        raise DimensionMismatch("permutation size does not match column count")
    image = P.image
    out = []
    for r in M.rows:
        v = 0
        j = 0
        while r:
            if r & 1:
                v |= 1 << image[j]
            r >>= 1
            j += 1
        out.append(v)
    return BitMatrix(tuple(out), M.ncols)


def permute_vector(v: int, P: Permutation) -> int:
    out = 0
    j = 0
    while v:
        if v & 1:
            out |= 1 << P.image[j]
        v >>= 1
        j += 1
    return out


def row_space_equal(A: BitMatrix, B: BitMatrix) -> bool:
    if A.ncols != B.ncols:
        raise DimensionMismatch("row spaces live in different ambient spaces")
    return canonical_rows(A) == canonical_rows(B)


def in_row_space(v: int, M: BitMatrix) -> bool:
    reduced, pivots = _rref_rows(M.rows, M.ncols)
    for row, p in zip(reduced, pivots):
        if (v >> p) & 1:
            v ^= row
    return v == 0


# -- randomness -------------------------------------------------------

def make_rng(seed: int | None) -> np.random.Generator:
    """PCG64 generator seeded with a 64-bit integer."""
    if seed is not None:
        seed = int(seed) & 0xFFFFFFFFFFFFFFFF
    return np.random.Generator(np.random.PCG64(seed))


def random_matrix(nrows: int, ncols: int, rng: np.random.Generator) -> BitMatrix:
    bits = rng.integers(0, 2, size=(nrows, ncols), dtype=np.uint8)
    return BitMatrix.from_array(bits.reshape(nrows, ncols), ncols)


def random_invertible(k: int, rng: np.random.Generator) -> BitMatrix:
    """Uniform element of GL_k(F_2) by rejection sampling."""
    if k < 1:
        raise ValueError("k must be at least 1")
    while True:
        M = random_matrix(k, k, rng)
        if rank(M) == k:
            return M


def random_permutation(n: int, rng: np.random.Generator) -> Permutation:
    return Permutation.from_sequence(rng.permutation(n).tolist())


def random_full_rank(k: int, n: int, rng: np.random.Generator) -> BitMatrix:
    if k > n:
        raise ValueError("k cannot exceed n")
    while True:
        M = random_matrix(k, n, rng)
        if rank(M) == k:
            return M
