"""Support splitting: recover the hidden permutation between equivalent codes.

Each coordinate ``i`` is labelled by the weight enumerator of the hull of
the code punctured at ``i``.  Labels are refined by puncturing at extra,
already-matched coordinates (at most three punctured positions in total),
and the coordinate matching is read off once every label is unique.
Every permutation handed back has been checked against the row spaces.
"""

from __future__ import annotations

import logging
import struct
from collections import Counter
from dataclasses import dataclass, field
from itertools import permutations
from typing import Iterable, Sequence

from . import f2linalg as la
from .codes import DEFAULT_CAP, LinearCode, WeightEnumerator, from_generator, hull, puncture, weight_enumerator
from .errors import Ambiguous, InvalidParams, CostExceeded, NotConsistent, NotEquivalent, SignatureMismatch
from .f2linalg import BitMatrix, Permutation

log = logging.getLogger(__name__)

MAX_PUNCTURED = 3
BRUTE_FORCE_MAX_N = 8


def encode_enumerator(we: WeightEnumerator) -> bytes:
    """Length-prefixed big-endian encoding of the enumerator counts."""
    return struct.pack(f">I{len(we.counts)}Q", len(we.counts), *we.counts)


def signature(C: LinearCode, J: Iterable[int], cap: int = DEFAULT_CAP) -> bytes:
    J = frozenset(J)
    if len(J) >= C.n:
        raise ValueError("cannot puncture every coordinate")
    return encode_enumerator(weight_enumerator(hull(puncture(C, J)), cap))


@dataclass(frozen=True)
class CoordinatePartition:
    """Per-coordinate labels; coordinates sharing a label form a block."""

    labels: tuple[bytes, ...]

    @property
    def blocks(self) -> dict[bytes, list[int]]:
        out: dict[bytes, list[int]] = {}
        for i, lab in enumerate(self.labels):
            out.setdefault(lab, []).append(i)
        return dict(sorted(out.items()))

    def is_discrete(self) -> bool:
        return len(set(self.labels)) == len(self.labels)

    def singletons(self) -> dict[bytes, int]:
        return {lab: b[0] for lab, b in self.blocks.items() if len(b) == 1}

    def block_sizes(self) -> list[int]:
        return sorted(len(b) for b in self.blocks.values())

    def as_lists(self) -> list[list[int]]:
        return list(self.blocks.values())

    def extended(self, extra: dict[int, bytes]) -> "CoordinatePartition":
        return CoordinatePartition(
            tuple(lab + extra.get(i, b"") for i, lab in enumerate(self.labels))
        )


@dataclass(frozen=True)
class RefinementHistory:
    """Matched anchor pairs already used, and anchor pairs already tried as triples."""

    anchors: tuple[tuple[int, int], ...] = ()
    triples: tuple[tuple[int, int], ...] = ()


class _SignatureCache:
    def __init__(self, C: LinearCode, cap: int):
        self.C = C
        self.cap = cap
        self._memo: dict[frozenset, bytes] = {}

    def __call__(self, J: Iterable[int]) -> bytes:
        key = frozenset(J)
        sig = self._memo.get(key)
        if sig is None:
            sig = signature(self.C, key, self.cap)
            self._memo[key] = sig
        return sig


def _check_matched(part: CoordinatePartition, part2: CoordinatePartition) -> None:
    if Counter(part.labels) != Counter(part2.labels):
        raise SignatureMismatch("coordinate signatures differ between the two codes")


def initial_partition(C: LinearCode, cap: int = DEFAULT_CAP, _sig=None) -> CoordinatePartition:
    sig = _sig or _SignatureCache(C, cap)
    return CoordinatePartition(tuple(sig((i,)) for i in range(C.n)))


def _ambiguous_coords(part: CoordinatePartition) -> list[int]:
    return [i for b in part.blocks.values() if len(b) > 1 for i in b]


def refine(
    C: LinearCode,
    C2: LinearCode,
    part: CoordinatePartition,
    part2: CoordinatePartition,
    history: RefinementHistory = RefinementHistory(),
    cap: int = DEFAULT_CAP,
    _sigs=None,
) -> tuple[CoordinatePartition, CoordinatePartition, RefinementHistory]:
    """Split at least one block of both partitions, consistently.

    Anchors are coordinates matched one-to-one between the codes (singleton
    blocks with equal labels).  A coordinate ``x`` in an ambiguous block is
    relabelled with the signature of ``C`` punctured at ``{anchor, x}``;
    when no unused anchor is left, the two most recent anchors are combined
    into ``{a, b, x}``.  Raises ``SignatureMismatch`` if the codes diverge
    and ``Ambiguous`` if nothing can be split within the puncture budget.
    """
    _check_matched(part, part2)
    if part.is_discrete():
        return part, part2, history
    sig, sig2 = _sigs or (_SignatureCache(C, cap), _SignatureCache(C2, cap))
    while True:
        used = {a for a, _ in history.anchors}
        single2 = part2.singletons()
        fresh = [(i, single2[lab]) for lab, i in part.singletons().items() if i not in used]
        fresh.sort()
        if fresh:
            a, a2 = fresh[0]
            history = RefinementHistory(history.anchors + ((a, a2),), history.triples)
            J, J2 = (a,), (a2,)
        else:
            pairs = [p for p in _anchor_pairs(history.anchors) if p not in history.triples]
            if not pairs:
                raise Ambiguous(
                    "refinement exhausted without individualizing every coordinate",
                    part.as_lists(),
                    part2.as_lists(),
                )
            (a, a2), (b, b2) = pairs[0]
            history = RefinementHistory(history.anchors, history.triples + (pairs[0],))
            J, J2 = (a, b), (a2, b2)
        before = len(part.blocks)
        part = part.extended({x: sig((*J, x)) for x in _ambiguous_coords(part)})
        part2 = part2.extended({x: sig2((*J2, x)) for x in _ambiguous_coords(part2)})
        _check_matched(part, part2)
        if len(part.blocks) > before:
            return part, part2, history


def _anchor_pairs(anchors):
    # most recent anchors first
    recent = list(reversed(anchors))
    return [(recent[i], recent[j]) for i in range(len(recent)) for j in range(i + 1, len(recent))]


def _refine_fully(C, C2, part, part2, history, cap, sigs):
    """Refine until discrete; returns the last partitions and whether they are discrete."""
    while not part.is_discrete():
        try:
            part, part2, history = refine(C, C2, part, part2, history, cap, sigs)
        except Ambiguous:
            return part, part2, history, False
    return part, part2, history, True


def _matching(part: CoordinatePartition, part2: CoordinatePartition) -> Permutation:
    where = {lab: j for j, lab in enumerate(part2.labels)}
    return Permutation(tuple(where[lab] for lab in part.labels))


def _is_zero_signature(sig: bytes) -> bool:
    count = struct.unpack(">I", sig[:4])[0]
    return struct.unpack(f">{count}Q", sig[4:]) == (1,) + (0,) * (count - 1)


def recover_permutation(C: LinearCode, C2: LinearCode, cap: int = DEFAULT_CAP) -> Permutation:
    """Find P with ``C · P = C2`` by support splitting.

    Raises ``NotEquivalent`` (or its subclass ``SignatureMismatch``),
    ``Ambiguous`` carrying the final partitions, or ``CostExceeded``.
    """
    if C.n != C2.n or C.k != C2.k:
        raise NotEquivalent(f"parameters differ: [{C.n},{C.k}] vs [{C2.n},{C2.k}]")
    sigs = (_SignatureCache(C, cap), _SignatureCache(C2, cap))
    part = initial_partition(C, cap, sigs[0])
    part2 = initial_partition(C2, cap, sigs[1])
    _check_matched(part, part2)
    if len(part.blocks) == 1 and C.n > 1 and _is_zero_signature(part.labels[0]):
        raise Ambiguous("every punctured hull is trivial; all signatures collide", part.as_lists(), part2.as_lists())

    part, part2, history, discrete = _refine_fully(C, C2, part, part2, RefinementHistory(), cap, sigs)
    if not discrete:
        return _guess_and_refine(C, C2, part, part2, history, cap, sigs)
    P = _matching(part, part2)
    if not la.row_space_equal(la.apply_perm_cols(C.gen, P), C2.gen):
        raise NotEquivalent("unique signatures induce a matching that is not an equivalence")
    return P


def _guess_and_refine(C, C2, part, part2, history, cap, sigs) -> Permutation:
    # one level of individualization: match the first coordinate of the
    # smallest ambiguous block against each candidate in turn
    blocks, blocks2 = part.blocks, part2.blocks
    label = min((lab for lab, b in blocks.items() if len(b) > 1), key=lambda lab: (len(blocks[lab]), blocks[lab][0]))
    i = blocks[label][0]
    for j in blocks2[label]:
        p1 = part.extended({i: b"\x00*"})
        p2 = part2.extended({j: b"\x00*"})
        guessed = RefinementHistory(history.anchors + ((i, j),), history.triples)
        try:
            p1, p2, _, discrete = _refine_fully(C, C2, p1, p2, guessed, cap, sigs)
        except SignatureMismatch:
            log.debug("guess %d -> %d contradicted", i, j)
            continue
        if not discrete:
            raise Ambiguous(
                f"individualizing coordinate {i} left blocks of sizes {p1.block_sizes()}",
                p1.as_lists(),
                p2.as_lists(),
            )
        P = _matching(p1, p2)
        if la.row_space_equal(la.apply_perm_cols(C.gen, P), C2.gen):
            return P
        log.debug("guess %d -> %d produced an invalid matching", i, j)
    raise NotEquivalent(f"no image of coordinate {i} is consistent with the signatures")


def recover_scrambler(M: BitMatrix, M2: BitMatrix, P: Permutation) -> BitMatrix:
    """Solve ``S · (M · P) = M2`` on an information set and verify it everywhere."""
    MP = la.apply_perm_cols(M, P)
    k = M.nrows
    if M2.shape != MP.shape:
        raise NotConsistent("matrices have different shapes")
    _, pivots, rank = la.rref(MP)
    if rank != k:
        raise NotConsistent("M must have full row rank for S to be determined")
    inv = la.invert(MP.select_columns(pivots))
    S = la.mul(M2.select_columns(pivots), inv)
    if la.mul(S, MP) != M2 or la.rank(S) != k:
        raise NotConsistent("S · M · P != M' for the supplied permutation")
    return S


def solve_equivalence(M: BitMatrix, M2: BitMatrix, cap: int = DEFAULT_CAP) -> tuple[BitMatrix, Permutation]:
    """Return ``(S, P)`` with ``S · M · P = M2`` exactly."""
    if M.shape != M2.shape:
        raise NotEquivalent(f"shapes differ: {M.shape} vs {M2.shape}")
    C, C2 = from_generator(M), from_generator(M2)
    if C.k != M.nrows or C2.k != M2.nrows:
        raise InvalidParams("generator matrices must have full row rank")
    P = recover_permutation(C, C2, cap)
    return recover_scrambler(M, M2, P), P


def brute_force_equivalence(
    M: BitMatrix, M2: BitMatrix, max_n: int = BRUTE_FORCE_MAX_N
) -> tuple[BitMatrix, Permutation]:
    """Ground-truth oracle: scan all n! permutations."""
    if M.shape != M2.shape:
        raise NotEquivalent(f"shapes differ: {M.shape} vs {M2.shape}")
    n = M.ncols
    if n > max_n:
        raise CostExceeded(f"n = {n} exceeds the brute-force limit {max_n}", required=n, cap=max_n)
    target = la.canonical_rows(M2)
    for image in permutations(range(n)):
        P = Permutation(image)
        if la.canonical_rows(la.apply_perm_cols(M, P)) == target:
            return recover_scrambler(M, M2, P), P
    raise NotEquivalent("no coordinate permutation maps one row space onto the other")
