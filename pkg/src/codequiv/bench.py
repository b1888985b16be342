"""Benchmark harness for the support splitting attack on random codes."""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass

import numpy as np

from . import f2linalg as la
from .codes import DEFAULT_CAP, from_generator, hull
from .errors import Ambiguous, CostExceeded, NotEquivalent
from .f2linalg import BitMatrix, Permutation
from .ssa import initial_partition, solve_equivalence

HULL_RANGE = (1, 6)
OUTCOMES = ("success", "ambiguous", "cost_exceeded", "not_equivalent", "wrong")


@dataclass(frozen=True)
class Instance:
    M: BitMatrix
    Mpub: BitMatrix
    S: BitMatrix
    P: Permutation
    hull_dim: int


def random_instance(n: int, k: int, rng: np.random.Generator, hull_range=HULL_RANGE) -> Instance:
    """Random equivalent pair ``(M, S M P)``, resampled until the hull dimension is in range."""
    lo, hi = hull_range
    while True:
        M = la.random_full_rank(k, n, rng)
        h = hull(from_generator(M)).k
        if lo <= h <= hi:
            break
    S = la.random_invertible(k, rng)
    P = la.random_permutation(n, rng)
    return Instance(M, la.apply_perm_cols(la.mul(S, M), P), S, P, h)


@dataclass(frozen=True)
class TrialResult:
    trial: int
    n: int
    k: int
    hull_dim: int
    outcome: str
    singleton_fraction: float
    blocks: int
    seconds: float

    FIELDS = ("trial", "n", "k", "hull_dim", "outcome", "singleton_fraction", "blocks", "seconds")

    def row(self) -> list[str]:
        return [
            str(self.trial),
            str(self.n),
            str(self.k),
            str(self.hull_dim),
            self.outcome,
            f"{self.singleton_fraction:.4f}",
            str(self.blocks),
            f"{self.seconds:.4f}",
        ]


def run_trial(inst: Instance, cap: int = DEFAULT_CAP, trial: int = 0) -> TrialResult:
    M, M2 = inst.M, inst.Mpub
    n, k = M.ncols, M.nrows
    start = time.perf_counter()
    part = initial_partition(from_generator(M), cap)
    sizes = part.block_sizes()
    try:
        S, P = solve_equivalence(M, M2, cap)
    except Ambiguous:
        outcome = "ambiguous"
    except CostExceeded:
        outcome = "cost_exceeded"
    except NotEquivalent:
        outcome = "not_equivalent"
    else:
        ok = la.apply_perm_cols(la.mul(S, M), P) == M2
        outcome = "success" if ok else "wrong"
    return TrialResult(
        trial=trial,
        n=n,
        k=k,
        hull_dim=inst.hull_dim,
        outcome=outcome,
        singleton_fraction=sizes.count(1) / n,
        blocks=len(sizes),
        seconds=time.perf_counter() - start,
    )


def run_bench(n: int, k: int, trials: int, seed: int, cap: int = DEFAULT_CAP, hull_range=HULL_RANGE) -> list[TrialResult]:
    rng = la.make_rng(seed)
    out = []
    for t in range(trials):
        inst = random_instance(n, k, rng, hull_range)
        out.append(run_trial(inst, cap, t))
    return out


def summarize(results: list[TrialResult]) -> dict:
    counts = Counter(r.outcome for r in results)
    total = len(results)
    return {
        "trials": total,
        "outcomes": {o: counts.get(o, 0) for o in OUTCOMES},
        "success_rate": counts.get("success", 0) / total if total else 0.0,
        "mean_singleton_fraction": sum(r.singleton_fraction for r in results) / total if total else 0.0,
        "seconds": sum(r.seconds for r in results),
    }
