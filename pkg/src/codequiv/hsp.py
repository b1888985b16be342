"""Exact checks of the hardness conditions for Code Equivalence as an HSP.

A code is reported hard when

* ``q^(k^2) <= n^(0.2 n)``,
* ``|Aut| <= e^(o(n))``  -- instantiated as ``log2 |Aut| <= n / 10``,
* minimal degree of ``Aut`` is ``Omega(n)`` -- instantiated as ``>= n / 2``.

The two asymptotic conditions cannot be decided for a single instance; the
surrogate thresholds are an interpretation and every verdict says so.
All comparisons use integers or ``Fraction``; no floats.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, replace
from fractions import Fraction
from math import comb

from .affine import ga_order
from .errors import InvalidParams
from .rm import rm_dimension

AUT_SURROGATE = "log2|Aut| <= n/10 stands in for |Aut| <= e^o(n)"
DEGREE_SURROGATE = "min_degree >= n/2 stands in for min_degree = Omega(n)"
MAX_GENERAL_N = 1 << 20


@dataclass(frozen=True)
class HardnessVerdict:
    n: int
    k: int
    size_cond: bool
    aut_cond: bool
    degree_cond: bool
    size_lhs: Fraction  # k^2 log2 q
    size_rhs: Fraction | None  # 0.2 n log2 n, exact only when n is a power of two
    log2_aut: Fraction | None
    aut_order: int | None
    aut_threshold: Fraction
    min_degree: int
    degree_threshold: Fraction
    surrogates: tuple[str, str] = (AUT_SURROGATE, DEGREE_SURROGATE)
    # Reed-Muller extras, filled in by rm_hsp_check
    r: int | None = None
    m: int | None = None
    r_small: bool | None = None  # r <= 0.1 m
    k_squared_cond: bool | None = None  # k^2 <= 0.2 m 2^m

    @property
    def overall(self) -> bool:
        return self.size_cond and self.aut_cond and self.degree_cond

    def as_dict(self) -> dict:
        out = {"overall": self.overall}
        for key, value in asdict(self).items():
            if isinstance(value, Fraction):
                value = str(value)
            elif isinstance(value, tuple):
                value = list(value)
            out[key] = value
        return out


def _log2_exact(x: int) -> int | None:
    """log2 of a power of two, else None."""
    return x.bit_length() - 1 if x > 0 and x & (x - 1) == 0 else None


def pow2_le(a: Fraction, x: int) -> bool:
    """Whether ``2^a <= x`` for a non-negative rational ``a`` and integer ``x > 0``."""
    # 2^(p/q) <= x  <=>  2^p <= x^q
    a = Fraction(a)
    if a < 0:
        raise ValueError("exponent must be non-negative")
    return _pow2_le_int(a.numerator, x**a.denominator)


def _pow2_le_int(p: int, y: int) -> bool:
    # 2^p <= y  <=>  floor(log2 y) >= p
    return y > 0 and y.bit_length() - 1 >= p


def size_condition(q: int, n: int, k: int) -> tuple[bool, Fraction, Fraction | None]:
    """``q^(k^2) <= n^(n/5)``, decided exactly."""
    lq = _log2_exact(q)
    if lq is None:
        raise InvalidParams("only binary (or power-of-two) alphabets are supported")
    lhs = Fraction(k * k * lq)
    ln = _log2_exact(n)
    if ln is not None:
        rhs = Fraction(n * ln, 5)
        return lhs <= rhs, lhs, rhs
    if n > MAX_GENERAL_N:
        raise InvalidParams(f"n = {n} is not a power of two and exceeds {MAX_GENERAL_N}")
    # 2^(5 k^2 lq) <= n^n
    return pow2_le(5 * lhs, n**n), lhs, None


def theorem1_check(
    q: int,
    n: int,
    k: int,
    min_degree: int,
    *,
    log2_aut: Fraction | int | None = None,
    aut_order: int | None = None,
) -> HardnessVerdict:
    """Evaluate the three hardness conditions for a q-ary [n, k] code.

    Supply the automorphism group either as an exact ``aut_order`` or as a
    rational ``log2_aut``.
    """
    if q != 2:
        raise InvalidParams("only binary codes are in scope (q = 2)")
    if n < 2 or not 1 <= k <= n:
        raise InvalidParams(f"need n >= 2 and 1 <= k <= n, got n={n}, k={k}")
    if (log2_aut is None) == (aut_order is None):
        raise InvalidParams("give exactly one of log2_aut or aut_order")
    size_cond, lhs, rhs = size_condition(q, n, k)
    aut_threshold = Fraction(n, 10)
    if aut_order is not None:
        if aut_order < 1:
            raise InvalidParams("group order must be positive")
        # log2 |Aut| <= n/10  <=>  |Aut|^10 <= 2^n
        x = aut_order**10
        aut_cond = x.bit_length() <= n or (x.bit_length() == n + 1 and _log2_exact(x) is not None)
        exact = _log2_exact(aut_order)
        log2_aut = None if exact is None else Fraction(exact)
    else:
        log2_aut = Fraction(log2_aut)
        aut_cond = log2_aut <= aut_threshold
    degree_threshold = Fraction(n, 2)
    return HardnessVerdict(
        n=n,
        k=k,
        size_cond=size_cond,
        aut_cond=aut_cond,
        degree_cond=min_degree >= degree_threshold,
        size_lhs=lhs,
        size_rhs=rhs,
        log2_aut=log2_aut,
        aut_order=aut_order,
        aut_threshold=aut_threshold,
        min_degree=min_degree,
        degree_threshold=degree_threshold,
    )


def rm_hsp_check(r: int, m: int) -> HardnessVerdict:
    """Hardness conditions for RM(r, m), using exact |GA(m,2)| and minimal degree 2^(m-1)."""
    if not 1 <= r < m:
        raise InvalidParams(f"need 1 <= r < m, got r={r}, m={m}")
    n = 1 << m
    k = rm_dimension(r, m)
    order, _ = ga_order(m)
    v = theorem1_check(2, n, k, 1 << (m - 1), aut_order=order)
    return replace(v, r=r, m=m, r_small=10 * r <= m, k_squared_cond=5 * k * k <= m * n)


def iroot_ceil(x: int, e: int) -> int:
    """Smallest integer c with ``c^e >= x``."""
    if x <= 1:
        return x
    lo, hi = 1, 1 << (x.bit_length() // e + 1)
    while lo < hi:
        mid = (lo + hi) // 2
        if mid**e >= x:
            hi = mid
        else:
            lo = mid + 1
    return lo


@dataclass(frozen=True)
class DimensionBound:
    m: int
    r: int
    k: int
    binom_bound: int | None  # r * C(m, m/10), when m/10 is an integer
    pow_bound: int  # r * ceil(2^(0.47 m))
    holds: bool


def dimension_bound_check(m: int) -> DimensionBound:
    """Check ``rm_dimension(r, m) < r * 2^(0.47 m)`` at ``r = floor(m / 10)``."""
    r = m // 10
    if r < 1:
        raise InvalidParams("need m >= 10 so that r = floor(m/10) >= 1")
    k = rm_dimension(r, m)
    pow_bound = r * iroot_ceil(1 << (47 * m), 100)
    binom_bound = r * comb(m, m // 10) if m % 10 == 0 else None
    holds = k < pow_bound and (binom_bound is None or k < binom_bound)
    return DimensionBound(m, r, k, binom_bound, pow_bound, holds)
