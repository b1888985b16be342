"""Matplotlib figures written next to the text reports."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .bench import OUTCOMES, TrialResult  # noqa: E402
from .codes import WeightEnumerator  # noqa: E402


def plot_weight_enumerator(we: WeightEnumerator, path, title: str = "") -> None:
    fig, ax = plt.subplots(figsize=(6, 3.5))
    weights = list(range(len(we.counts)))
    ax.bar(weights, we.counts, color="0.3", width=0.8)
    ax.set_yscale("log")
    ax.set_xlabel("Hamming weight")
    ax.set_ylabel("codewords")
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def plot_bench(results: list[TrialResult], path, title: str = "") -> None:
    fig, (left, right) = plt.subplots(1, 2, figsize=(9, 3.5))

    counts = [sum(r.outcome == o for r in results) for o in OUTCOMES]
    left.bar(range(len(OUTCOMES)), counts, color="0.3")
    left.set_xticks(range(len(OUTCOMES)))
    left.set_xticklabels([o.replace("_", "\n") for o in OUTCOMES], fontsize=8)
    left.set_ylabel("trials")
    left.set_title("outcome")

    right.hist([r.singleton_fraction for r in results], bins=20, range=(0, 1), color="0.5")
    right.set_xlabel("singleton fraction of initial partition")
    right.set_ylabel("trials")

    if title:
        fig.suptitle(title)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
