"""Figure rendering for the scan reports.

Each renderer takes already-computed scan results and writes one file;
nothing here recomputes mathematics.  matplotlib is imported lazily so
plain data runs never pay for it.
"""

from __future__ import annotations

from typing import Iterable

from .minus_two import Minus2Verdict


def _agg_pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def render_minus2_figure(
    verdicts: Iterable[Minus2Verdict], path: str, lo: int, hi: int
) -> None:
    """Scatter the valid pairs over the scan window, with the two
    geometry boundary lines high = 2*low and low = 2*high."""
    plt = _agg_pyplot()
    xs = [v.low for v in verdicts if v.valid]
    ys = [v.high for v in verdicts if v.valid]
    fig, ax = plt.subplots(figsize=(6.4, 6.4))
    ax.scatter(xs, ys, s=4, color="#1f77b4", label="valid pair")
    span = range(lo, hi + 1)
    ax.plot(span, [2 * x for x in span], lw=0.8, color="#888888", label="high = 2 low")
    ax.plot(span, [x / 2 for x in span], lw=0.8, color="#bbbbbb", label="low = 2 high")
    ax.set_xlim(lo, hi)
    ax.set_ylim(lo, hi)
    ax.set_xlabel("smaller digit")
    ax.set_ylabel("larger digit")
    ax.set_title(f"valid base -2 pairs in [{lo}, {hi}]")
    ax.legend(loc="lower right", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_zero_digit_figure(lengths: dict[int, int | None], path: str) -> None:
    """Zero-expansion length against each candidate zero digit; absent
    expansions are marked on the axis."""
    plt = _agg_pyplot()
    present = {d: n for d, n in lengths.items() if n is not None}
    absent = [d for d, n in lengths.items() if n is None]
    fig, ax = plt.subplots(figsize=(6.4, 4.0))
    if present:
        ax.stem(list(present.keys()), list(present.values()), basefmt=" ")
    if absent:
        ax.scatter(absent, [0] * len(absent), marker="x", color="#d62728", label="no expansion")
        ax.legend(fontsize=8)
    ax.set_xlabel("zero digit")
    ax.set_ylabel("zero-expansion length")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
