"""Sidelnikov-style McEliece scheme over Reed-Muller codes.

The public generator is ``S · G · P`` where ``G`` is the monomial-basis
RM(r, m) generator, ``S`` a random scrambler and ``P`` a random coordinate
permutation.  The error weight is the unique-decoding radius
``2^(m-r-1) - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import f2linalg as la
from .errors import InvalidParams, LengthMismatch
from .f2linalg import BitMatrix, Permutation
from .rm import RMParams, raw_generator, reed_decode


@dataclass(frozen=True)
class PrivateKey:
    S: BitMatrix
    params: RMParams
    P: Permutation


@dataclass(frozen=True)
class PublicKey:
    Mpub: BitMatrix
    t: int

    @property
    def k(self) -> int:
        return self.Mpub.nrows

    @property
    def n(self) -> int:
        return self.Mpub.ncols


@dataclass(frozen=True)
class KnownCodeInstance:
    """Code Equivalence instance ``(M, M')`` plus the hidden witness."""

    Mknown: BitMatrix
    Mpub: BitMatrix
    S: BitMatrix
    P: Permutation


def make_keys(params: RMParams, S: BitMatrix, P: Permutation) -> tuple[PrivateKey, PublicKey]:
    """Assemble a key pair from explicit secret components."""
    G = raw_generator(params.r, params.m)
    if S.shape != (G.nrows, G.nrows) or P.n != G.ncols:
        raise la.DimensionMismatch("scrambler or permutation has the wrong size")
    Mpub = la.apply_perm_cols(la.mul(S, G), P)
    return PrivateKey(S, params, P), PublicKey(Mpub, params.radius)


def keygen(r: int, m: int, rng: np.random.Generator) -> tuple[PrivateKey, PublicKey]:
    if not 1 <= r < m:
        raise InvalidParams(f"need 1 <= r < m, got r={r}, m={m}")
    params = RMParams(r, m)
    S = la.random_invertible(params.k, rng)
    P = la.random_permutation(params.n, rng)
    return make_keys(params, S, P)


def random_error(n: int, t: int, rng: np.random.Generator) -> int:
    positions = rng.choice(n, size=t, replace=False) if t else []
    e = 0
    for p in positions:
        e |= 1 << int(p)
    return e


def encrypt(pk: PublicKey, msg: Sequence[int], rng: np.random.Generator, t: int | None = None) -> np.ndarray:
    """``msg · Mpub + e`` with ``e`` uniform of weight ``t`` (default ``pk.t``)."""
    if len(msg) != pk.k:
        raise LengthMismatch(f"message length {len(msg)} != k = {pk.k}")
    t = pk.t if t is None else t
    word = la.vec_mul(la.vector_to_int(msg), pk.Mpub) ^ random_error(pk.n, t, rng)
    return la.int_to_vector(word, pk.n)


def decrypt(sk: PrivateKey, ct: Sequence[int]) -> np.ndarray:
    """Undo P, Reed-decode, undo S.  ``DecodeFailure`` propagates."""
    n = sk.params.n
    if len(ct) != n:
        raise LengthMismatch(f"ciphertext length {len(ct)} != n = {n}")
    ct = np.asarray(ct, dtype=np.uint8)
    # private coordinate j was published at position P[j]
    private_word = ct[list(sk.P.image)]
    scrambled, _ = reed_decode(sk.params, private_word)
    msg = la.vec_mul(la.vector_to_int(scrambled), la.invert(sk.S))
    return la.int_to_vector(msg, sk.S.nrows)


def known_code_instance(r: int, m: int, rng: np.random.Generator) -> KnownCodeInstance:
    sk, pk = keygen(r, m, rng)
    return KnownCodeInstance(raw_generator(r, m), pk.Mpub, sk.S, sk.P)
