"""Binary Reed-Muller codes RM(r, m).

Point ordering: point ``i`` (0-based) is the vector whose coordinate ``j``
(variable ``x_{j+1}``) is bit ``j`` of ``i``.  Monomials are ordered by
degree, then lexicographically on their sorted variable-index sets; this
fixes the meaning of message coordinates for ``rm_encode``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Sequence

import numpy as np

from .codes import LinearCode, from_generator
from .errors import DecodeFailure, InvalidParams, LengthMismatch
from .f2linalg import BitMatrix


@dataclass(frozen=True)
class RMParams:
    r: int
    m: int

    def __post_init__(self):
        _check(self.r, self.m)

    @property
    def n(self) -> int:
        return 1 << self.m

    @property
    def k(self) -> int:
        return rm_dimension(self.r, self.m)

    @property
    def radius(self) -> int:
        """Guaranteed correction radius ``2^(m-r-1) - 1``."""
        return (1 << (self.m - self.r - 1)) - 1


def _check(r: int, m: int) -> None:
    if not (isinstance(r, int) and isinstance(m, int)) or not 0 <= r < m:
        raise InvalidParams(f"need 0 <= r < m, got r={r}, m={m}")


def point(i: int, m: int) -> tuple[int, ...]:
    return tuple((i >> j) & 1 for j in range(m))


def monomials(r: int, m: int) -> list[tuple[int, ...]]:
    """Variable-index sets of all monomials of degree <= r, in message order."""
    out: list[tuple[int, ...]] = []
    for d in range(r + 1):
        out.extend(combinations(range(m), d))
    return out


def rm_dimension(r: int, m: int) -> int:
    _check(r, m)
    return sum(comb(m, j) for j in range(r + 1))


def monomial_row(T: Sequence[int], m: int) -> int:
    """Evaluation vector of the monomial prod_{j in T} x_j as an int bitset."""
    mask = 0
    for j in T:
        mask |= 1 << j
    row = 0
    for i in range(1 << m):
        if i & mask == mask:
            row |= 1 << i
    return row


@lru_cache(maxsize=None)
def raw_generator(r: int, m: int) -> BitMatrix:
    """Monomial-basis generator: row ``t`` evaluates the ``t``-th monomial."""
    _check(r, m)
    return BitMatrix(tuple(monomial_row(T, m) for T in monomials(r, m)), 1 << m)


def rm_generator(r: int, m: int) -> LinearCode:
    return from_generator(raw_generator(r, m))


def rm_min_distance(r: int, m: int) -> int:
    _check(r, m)
    return 1 << (m - r)


def rm_encode(params: RMParams, message: Sequence[int]) -> np.ndarray:
    G = raw_generator(params.r, params.m)
    if len(message) != G.nrows:
        raise LengthMismatch(f"message length {len(message)} != k = {G.nrows}")
    word = 0
    for bit, row in zip(message, G.rows):
        if bit:
            word ^= row
    return np.array([(word >> i) & 1 for i in range(params.n)], dtype=np.uint8)


def reed_decode(params: RMParams, word: Sequence[int]) -> tuple[np.ndarray, np.ndarray]:
    """Reed majority-logic decoding.

    Returns ``(message, codeword)``.  Each degree-``s`` coefficient is the
    majority of its ``2^(m-s)`` coset checks; an exact tie raises
    ``DecodeFailure``.
    """
    r, m, n = params.r, params.m, params.n
    y = np.asarray(word, dtype=np.int64).copy()
    if y.shape != (n,):
        raise LengthMismatch(f"word length {y.size} != n = {n}")
    if np.any((y != 0) & (y != 1)):
        raise ValueError("word entries must be 0 or 1")
    idx = np.arange(n)
    mons = monomials(r, m)
    coeffs = dict.fromkeys(mons, 0)
    for s in range(r, -1, -1):
        level = [T for T in mons if len(T) == s]
        for T in level:
            mask = sum(1 << j for j in T)
            # coset label: the coordinates outside T
            votes = np.bincount(idx & ~mask, weights=y, minlength=n)[idx[(idx & mask) == 0]]
            votes = votes.astype(np.int64) & 1
            ones = int(votes.sum())
            zeros = votes.size - ones
            if ones == zeros:
                raise DecodeFailure(f"majority tie on monomial {T}")
            coeffs[T] = int(ones > zeros)
        for T in level:
            if coeffs[T]:
                y ^= _eval_mask(T, idx)
    message = np.array([coeffs[T] for T in mons], dtype=np.uint8)
    return message, rm_encode(params, message)


def _eval_mask(T: Sequence[int], idx: np.ndarray) -> np.ndarray:
    mask = sum(1 << j for j in T)
    return ((idx & mask) == mask).astype(np.int64)


def fht_decode_first_order(params: RMParams, word: Sequence[int]) -> tuple[np.ndarray, np.ndarray]:
    """Maximum-likelihood RM(1, m) decoder via the fast Walsh-Hadamard transform.

    Same contract as ``reed_decode``; ties in the largest correlation
    raise ``DecodeFailure``.
    """
    if params.r != 1:
        raise InvalidParams("the Hadamard decoder handles first-order codes only")
    m, n = params.m, params.n
    y = np.asarray(word, dtype=np.int64)
    if y.shape != (n,):
        raise LengthMismatch(f"word length {y.size} != n = {n}")
    spectrum = 1 - 2 * y
    h = 1
    while h < n:
        spectrum = spectrum.reshape(-1, 2, h)
        spectrum = np.stack([spectrum[:, 0] + spectrum[:, 1], spectrum[:, 0] - spectrum[:, 1]], axis=1)
        spectrum = spectrum.reshape(n)
        h *= 2
    mags = np.abs(spectrum)
    best = int(mags.max())
    winners = np.flatnonzero(mags == best)
    if winners.size != 1:
        raise DecodeFailure("tie between candidate first-order codewords")
    a = int(winners[0])
    message = np.zeros(m + 1, dtype=np.uint8)
    message[0] = 1 if spectrum[a] < 0 else 0
    for j in range(m):
        message[1 + j] = (a >> j) & 1
    return message, rm_encode(params, message)
