"""The general affine group GA(m, 2) acting on the 2^m Reed-Muller points."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterator

import numpy as np

from . import f2linalg as la
from .codes import LinearCode
from .errors import CostExceeded, DimensionMismatch
from .f2linalg import BitMatrix, Permutation

DEFAULT_GROUP_BOUND = 4
BRUTE_FORCE_MAX_N = 8


@dataclass(frozen=True)
class AffineMap:
    """``x -> A x + beta``; ``beta`` is an int bitset over the m coordinates."""

    A: BitMatrix
    beta: int = 0

    def __post_init__(self):
        if self.A.nrows != self.A.ncols:
            raise DimensionMismatch("linear part must be square")
        if not 0 <= self.beta < (1 << self.m):
            raise ValueError("translation does not fit in m bits")
        if la.rank(self.A) != self.m:
            raise la.Singular("linear part is not invertible")

    @property
    def m(self) -> int:
        return self.A.nrows

    def __call__(self, x: int) -> int:
        return _apply_linear(self.A, x) ^ self.beta

    def compose(self, other: "AffineMap") -> "AffineMap":
        """``self ∘ other``: apply ``other`` first."""
        return AffineMap(la.mul(self.A, other.A), _apply_linear(self.A, other.beta) ^ self.beta)

    @classmethod
    def identity(cls, m: int) -> "AffineMap":
        return cls(BitMatrix.identity(m), 0)


def _apply_linear(A: BitMatrix, x: int) -> int:
    # row j of A gives output coordinate j
    y = 0
    for j, row in enumerate(A.rows):
        y |= la.parity(row & x) << j
    return y


def as_permutation(sigma: AffineMap, m: int | None = None) -> Permutation:
    if m is not None and m != sigma.m:
        raise DimensionMismatch(f"affine map acts on F_2^{sigma.m}, not F_2^{m}")
    return Permutation(tuple(sigma(i) for i in range(1 << sigma.m)))


def support(sigma: AffineMap) -> int:
    """Number of points of F_2^m moved by ``sigma``."""
    return sum(1 for x in range(1 << sigma.m) if sigma(x) != x)


def iter_gl(m: int) -> Iterator[BitMatrix]:
    """All invertible m x m matrices, by rank-filtering all 2^(m^2) candidates."""
    for rows in product(range(1 << m), repeat=m):
        M = BitMatrix(rows, m)
        if la.rank(M) == m:
            yield M


def iter_ga(m: int) -> Iterator[AffineMap]:
    for A in iter_gl(m):
        for beta in range(1 << m):
            yield AffineMap(A, beta)


def _check_bound(m: int, bound: int) -> None:
    if m > bound:
        raise CostExceeded(f"enumerating GA({m},2) exceeds the bound m <= {bound}", required=m, cap=bound)


def minimal_degree_affine(m: int, bound: int = DEFAULT_GROUP_BOUND) -> int:
    """Smallest support of a non-identity element of GA(m, 2), by enumeration.

    Every (A, beta) pair is visited: for fixed A the fixed-point count of
    x -> Ax + beta equals the number of x with Ax + x = beta, so one
    histogram over x yields the support of all 2^m translates at once.
    """
    if m < 1:
        raise ValueError("m must be positive")
    _check_bound(m, bound)
    n = 1 << m
    xs = np.arange(n)
    best = None
    for A in iter_gl(m):
        images = np.array([_apply_linear(A, x) for x in range(n)])
        fixed = np.bincount(images ^ xs, minlength=n)
        supports = n - fixed
        if A.rows == BitMatrix.identity(m).rows:
            supports = supports[1:]
        low = int(supports.min())
        best = low if best is None else min(best, low)
    return best


def support_histogram(m: int, bound: int = DEFAULT_GROUP_BOUND) -> dict[int, int]:
    """How many elements of GA(m, 2) have each support value."""
    _check_bound(m, bound)
    n = 1 << m
    xs = np.arange(n)
    hist: dict[int, int] = {}
    for A in iter_gl(m):
        images = np.array([_apply_linear(A, x) for x in range(n)])
        for s in (n - np.bincount(images ^ xs, minlength=n)).tolist():
            hist[s] = hist.get(s, 0) + 1
    return dict(sorted(hist.items()))


def gl_order(m: int) -> int:
    out = 1
    for i in range(m):
        out *= (1 << m) - (1 << i)
    return out


def ga_order(m: int) -> tuple[int, int]:
    """Returns ``(|GA(m,2)|, 2^(m^2+m))``; the order never exceeds the bound."""
    if m < 0:
        raise ValueError("m must be non-negative")
    order = (1 << m) * gl_order(m)
    bound = 1 << (m * m + m)
    assert order <= bound
    return order, bound


def ga_permutations(m: int, bound: int = DEFAULT_GROUP_BOUND) -> set[tuple[int, ...]]:
    _check_bound(m, bound)
    return {as_permutation(s).image for s in iter_ga(m)}


def is_automorphism(C: LinearCode, P: Permutation) -> bool:
    if P.n != C.n:
        raise DimensionMismatch("permutation does not act on the code's coordinates")
    return la.canonical_rows(la.apply_perm_cols(C.gen, P)) == C.gen.rows


def brute_force_aut(C: LinearCode, max_n: int = BRUTE_FORCE_MAX_N) -> list[Permutation]:
    """Every permutation of the n coordinates that preserves C (full n! scan)."""
    if C.n > max_n:
        raise CostExceeded(f"n = {C.n} exceeds the brute-force limit {max_n}", required=C.n, cap=max_n)
    return [
        Permutation(image)
        for image in permutations(range(C.n))
        if is_automorphism(C, Permutation(image))
    ]
