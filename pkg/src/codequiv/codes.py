"""Binary linear codes: dual, hull, puncturing and weight enumerators."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable

import numpy as np

from . import f2linalg as la
from .errors import AllPunctured, CostExceeded
from .f2linalg import BitMatrix, Permutation

DEFAULT_CAP = 24

# codewords per enumeration half-table are 2**_TABLE_BITS at most
_TABLE_BITS = 13


@dataclass(frozen=True)
class LinearCode:
    """An ``[n, k]`` binary code held by its RREF generator (no zero rows)."""

    gen: BitMatrix

    def __post_init__(self):
        if la.canonical_rows(self.gen) != self.gen.rows:
            raise ValueError("generator must be in reduced row echelon form with full rank")

    @property
    def n(self) -> int:
        return self.gen.ncols

    @property
    def k(self) -> int:
        return self.gen.nrows

    @property
    def is_zero_code(self) -> bool:
        """Degenerate ``k = 0`` code; representable but usually worth flagging."""
        return self.gen.nrows == 0

    def permuted(self, P: Permutation) -> "LinearCode":
        return from_generator(la.apply_perm_cols(self.gen, P))

    def contains(self, word: int) -> bool:
        return la.in_row_space(word, self.gen)

    def __repr__(self) -> str:
        return f"LinearCode[n={self.n}, k={self.k}]"


@dataclass(frozen=True)
class WeightEnumerator:
    counts: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.counts) - 1

    def __getitem__(self, w: int) -> int:
        return self.counts[w]

    def __iter__(self):
        return iter(self.counts)

    def total(self) -> int:
        return sum(self.counts)


def from_generator(M: BitMatrix) -> LinearCode:
    return LinearCode(BitMatrix(la.canonical_rows(M), M.ncols))


def full_space(n: int) -> LinearCode:
    return LinearCode(BitMatrix.identity(n))


def zero_code(n: int) -> LinearCode:
    return LinearCode(BitMatrix((), n))


def repetition(n: int) -> LinearCode:
    return LinearCode(BitMatrix(((1 << n) - 1,), n))


def dual(C: LinearCode) -> LinearCode:
    return LinearCode(la.kernel_basis(C.gen))


def hull(C: LinearCode) -> LinearCode:
    """``C ∩ C^⊥`` as the common kernel of both parity-check matrices."""
    checks = dual(C).gen.vstack(C.gen)
    return LinearCode(la.kernel_basis(checks))


def puncture(C: LinearCode, J: Iterable[int]) -> LinearCode:
    drop = set(J)
    if any(not 0 <= j < C.n for j in drop):
        raise ValueError("puncture coordinates out of range")
    if len(drop) == C.n and C.n > 0:
        raise AllPunctured("cannot puncture every coordinate")
    if not drop:
        return C
    keep = [j for j in range(C.n) if j not in drop]
    return from_generator(C.gen.select_columns(keep))


def _pack(rows: Iterable[int], n: int) -> np.ndarray:
    """Pack int-bitset rows into an (len, words) uint64 array."""
    words = max(1, (n + 63) // 64)
    rows = list(rows)
    out = np.zeros((len(rows), words), dtype=np.uint64)
    mask = (1 << 64) - 1
    for i, r in enumerate(rows):
        for w in range(words):
            out[i, w] = (r >> (64 * w)) & mask
    return out


def _span_table(packed: np.ndarray) -> np.ndarray:
    """All 2**len(packed) XOR combinations of the packed rows."""
    table = np.zeros((1, packed.shape[1]), dtype=np.uint64)
    for row in packed:
        table = np.concatenate([table, table ^ row])
    return table


def weight_enumerator(C: LinearCode, cap: int = DEFAULT_CAP) -> WeightEnumerator:
    """Exact weight distribution by enumerating all ``2**k`` codewords.

    Raises ``CostExceeded`` when ``k > cap``.
    """
    k, n = C.k, C.n
    if k > cap:
        raise CostExceeded(
            f"enumerating 2^{k} codewords exceeds the cap of 2^{cap}", required=k, cap=cap
        )
    counts = np.zeros(n + 1, dtype=np.int64)
    if k == 0:
        counts[0] = 1
        return WeightEnumerator(tuple(int(c) for c in counts))
    packed = _pack(C.gen.rows, n)
    lo_bits = min(k, _TABLE_BITS)
    low = _span_table(packed[:lo_bits])
    high = _span_table(packed[lo_bits:])
    for h in high:
        weights = np.bitwise_count(low ^ h).sum(axis=1, dtype=np.int64)
        counts += np.bincount(weights, minlength=n + 1)
    return WeightEnumerator(tuple(int(c) for c in counts))


def min_distance(C: LinearCode, cap: int = DEFAULT_CAP) -> int:
    if C.k < 1:
        raise ValueError("minimum distance is undefined for the zero code")
    we = weight_enumerator(C, cap)
    return next(w for w in range(1, C.n + 1) if we[w])


def krawtchouk(j: int, i: int, n: int) -> int:
    """Binary Krawtchouk polynomial K_j(i; n)."""
    return sum((-1) ** s * comb(i, s) * comb(n - i, j - s) for s in range(j + 1))


def macwilliams_transform(we: WeightEnumerator, k: int) -> WeightEnumerator:
    """Weight distribution of the dual code predicted from ``we``."""
    n = we.n
    out = []
    for j in range(n + 1):
        total = sum(a * krawtchouk(j, i, n) for i, a in enumerate(we.counts))
        if total % (1 << k):
            raise ValueError("input is not the weight enumerator of a dimension-k code")
        out.append(total >> k)
    return WeightEnumerator(tuple(out))
