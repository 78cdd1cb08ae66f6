"""Matplotlib figures for the survey and comparison reports.

Rendered to files next to the CSV output: generator counts and x0 bounds as
bar charts against the (p, a) pairs, the same ordered by discriminant, and
the empirical-vs-predicted norm comparison on a log scale.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

from .survey import CompareRow, SurveyRow  # noqa: E402


def _bar(ax, labels: list[str], values, ylabel: str, color: str) -> None:
    ax.bar(range(len(values)), values, color=color)
    ax.set_xticks(range(len(labels)))
    ax.set_xticklabels(labels, rotation=90, fontsize=7)
    ax.set_ylabel(ylabel)
    ax.margins(x=0.01)


def survey_figures(rows: list[SurveyRow], outdir: str | Path) -> list[Path]:
    """Four bar charts: generators and max |x0| by pair and by discriminant."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    by_dh = sorted(rows, key=lambda r: (r.d_h, r.p, r.a))
    panels = [
        ("generators_by_pair.png", rows, lambda r: r.n_generators,
         "number of generators", lambda r: f"({r.p},{r.a})"),
        ("x0_by_pair.png", rows, lambda r: r.max_abs_x0,
         "max |x0| over generators", lambda r: f"({r.p},{r.a})"),
        ("generators_by_discriminant.png", by_dh, lambda r: r.n_generators,
         "number of generators", lambda r: f"dH={r.d_h} ({r.p},{r.a})"),
        ("x0_by_discriminant.png", by_dh, lambda r: r.max_abs_x0,
         "max |x0| over generators", lambda r: f"dH={r.d_h} ({r.p},{r.a})"),
    ]
    written = []
    for name, data, value, ylabel, label in panels:
        fig, ax = plt.subplots(figsize=(max(6.0, 0.32 * len(data)), 4.0))
        _bar(ax, [label(r) for r in data], [value(r) for r in data], ylabel,
             "#1a3fa0")
        ax.set_xlabel("(p, a)")
        fig.tight_layout()
        path = outdir / name
        fig.savefig(path, dpi=130)
        plt.close(fig)
        written.append(path)
    return written


def compare_figure(rows: list[CompareRow], outdir: str | Path) -> Path:
    """Grouped bars, log scale: measured max generator norm vs the
    radius-cutoff bound (exact-radius variant)."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    labels = [f"({r.p},{r.a})" for r in rows]
    xs = range(len(rows))
    fig, ax = plt.subplots(figsize=(max(6.0, 0.4 * len(rows)), 4.5))
    width = 0.42
    ax.bar([x - width / 2 for x in xs], [r.max_chalk_norm for r in rows],
           width=width, color="#1a3fa0", label="measured max norm")
    ax.bar([x + width / 2 for x in xs], [r.bound_exact for r in rows],
           width=width, color="#c0392b", label="norm bound")
    ax.set_yscale("log")
    ax.set_xticks(list(xs))
    ax.set_xticklabels(labels, rotation=90, fontsize=7)
    ax.set_ylabel("Chalk norm (log scale)")
    ax.legend()
    fig.tight_layout()
    path = outdir / "norm_vs_bound.png"
    fig.savefig(path, dpi=130)
    plt.close(fig)
    return path
