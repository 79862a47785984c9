"""Figure rendering for the reporting paths; always writes files, never shows.

The Agg backend is forced before pyplot loads so rendering works in
headless environments.
"""
from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)


def save_bench_figures(
    steps: Sequence[int],
    conflicts: Sequence[int],
    bound: float | None,
    out_dir: str | Path,
    stem: str = "bench",
) -> list[Path]:
    """Histogram the per-run step and conflict counts; returns file paths."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    paths = []
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.hist(steps, bins=min(30, max(5, len(set(steps)))), color="#4878a8", edgecolor="white")
    if bound is not None:
        ax.axvline(bound, color="#a84848", linestyle="--", label=f"expected-steps bound {bound:.1f}")
        ax.legend()
    ax.set_xlabel("steps per run")
    ax.set_ylabel("runs")
    ax.set_title("Steps until completion")
    fig.tight_layout()
    p = out_dir / f"{stem}_steps.png"
    fig.savefig(p, dpi=120)
    plt.close(fig)
    paths.append(p)

    fig, ax = plt.subplots(figsize=(6, 4))
    top = max(conflicts) if conflicts else 0
    ax.hist(conflicts, bins=range(0, top + 2), color="#5a9367", edgecolor="white", align="left")
    ax.set_xlabel("conflicts per run")
    ax.set_ylabel("runs")
    ax.set_title("Conflict counts")
    fig.tight_layout()
    p = out_dir / f"{stem}_conflicts.png"
    fig.savefig(p, dpi=120)
    plt.close(fig)
    paths.append(p)
    return paths


def save_ratio_figure(
    ratios: Sequence[tuple[int, float]],
    gamma: float | None,
    out_dir: str | Path,
    stem: str = "ratios",
) -> Path:
    """Plot consecutive count ratios against the characteristic growth rate."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    fig, ax = plt.subplots(figsize=(6, 4))
    xs = [t for t, _ in ratios]
    ys = [r for _, r in ratios]
    ax.plot(xs, ys, marker="o", markersize=3, linewidth=1, color="#4878a8", label="count ratio")
    if gamma is not None:
        ax.axhline(gamma, color="#a84848", linestyle="--", label=f"growth rate {gamma:.6f}")
    ax.set_xlabel("word half-length t")
    ax.set_ylabel("C(t) / C(t-1) geometric step")
    ax.set_title("Count growth versus characteristic rate")
    ax.legend()
    fig.tight_layout()
    p = out_dir / f"{stem}.png"
    fig.savefig(p, dpi=120)
    plt.close(fig)
    return p
