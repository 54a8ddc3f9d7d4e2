"""Deterministic figure rendering for the report path.

All builders return a bare `matplotlib.figure.Figure` (no pyplot, no global
state), and `save_svg` writes it with a fixed hash salt and without the
date stamp, so identical inputs produce byte-identical SVG files.
Coefficient plots use a symlog axis: the polynomials here have coefficient
ranges spanning dozens of orders of magnitude with both signs.
"""

from __future__ import annotations

from typing import Mapping, Sequence

import matplotlib
from matplotlib.figure import Figure

from .laurent import BiLaurentPoly, LaurentPoly

__all__ = [
    "save_svg",
    "polynomial_figure",
    "bilaurent_figure",
    "kh_support_figure",
    "gaussian_figure",
    "twist_figure",
    "bounds_figure",
    "correlation_figure",
]

_RC = {"svg.hashsalt": "weavekit", "svg.fonttype": "path"}


def save_svg(fig: Figure, path: str) -> None:
    """Write `fig` as SVG with reproducible ids and no date metadata."""
    with matplotlib.rc_context(_RC):
        fig.savefig(path, format="svg", metadata={"Date": None})


def _new_figure() -> Figure:
    return Figure(figsize=(7.0, 4.5), dpi=100)


def polynomial_figure(polys: Mapping[str, LaurentPoly], var: str,
                      title: str) -> Figure:
    """Stem-style coefficient profiles, one series per named polynomial."""
    fig = _new_figure()
    ax = fig.add_subplot()
    for name, poly in polys.items():
        pairs = sorted(poly.terms())
        ax.plot([e for e, _ in pairs], [c for _, c in pairs],
                marker="o", markersize=3, linewidth=1, label=name)
    ax.set_yscale("symlog")
    ax.set_xlabel(f"exponent of {var}")
    ax.set_ylabel("coefficient")
    ax.set_title(title)
    ax.axhline(0, color="0.8", linewidth=0.8, zorder=0)
    if len(polys) > 1:
        ax.legend(fontsize=8)
    return fig


def bilaurent_figure(poly: BiLaurentPoly, title: str) -> Figure:
    """Support of a two-variable polynomial; marker area tracks |coefficient|."""
    fig = _new_figure()
    ax = fig.add_subplot()
    entries = sorted((e1, e2, c) for (e1, e2), c in poly.terms.items())
    import math

    for sign, color in ((1, "tab:blue"), (-1, "tab:red")):
        pts = [(a, z, c) for a, z, c in entries if (c > 0) == (sign > 0)]
        if pts:
            ax.scatter([a for a, _, _ in pts], [z for _, z, _ in pts],
                       s=[12 + 10 * math.log10(abs(c)) for _, _, c in pts],
                       color=color, label="positive" if sign > 0 else "negative")
    ax.set_xlabel("exponent of a")
    ax.set_ylabel("exponent of z")
    ax.set_title(title)
    ax.legend(fontsize=8)
    return fig


def kh_support_figure(entries: Sequence[tuple[int, int, int, int]],
                      title: str) -> Figure:
    """Dot plot of homology support: (i, j, free rank, 2-torsion exponent)."""
    fig = _new_figure()
    ax = fig.add_subplot()
    free = [(i, j) for i, j, f, _ in entries if f]
    tors = [(i, j) for i, j, _, t in entries if t]
    if free:
        ax.scatter([i for i, _ in free], [j for _, j in free],
                   marker="o", color="tab:blue", label="free part")
    if tors:
        ax.scatter([i for i, _ in tors], [j for _, j in tors],
                   marker="s", facecolors="none", edgecolors="tab:red",
                   s=90, label="2-torsion")
    ax.set_xlabel("homological grading i")
    ax.set_ylabel("quantum grading j")
    ax.set_title(title)
    ax.legend(fontsize=8)
    return fig


def gaussian_figure(n: int, points: Sequence[tuple[int, int]],
                    mu: float, sigma: float,
                    curve: Sequence[tuple[float, float]]) -> Figure:
    """Normalized dimension profile against its fitted normal density."""
    fig = _new_figure()
    ax = fig.add_subplot()
    total = sum(d for _, d in points)
    ax.bar([i for i, _ in points], [d / total for _, d in points],
           width=0.85, color="0.75", label="normalized dimensions")
    ax.plot([x for x, _ in curve], [y for _, y in curve],
            color="tab:red", linewidth=1.5, label="fitted density")
    ax.set_xlabel("homological grading")
    ax.set_ylabel("fraction of total dimension")
    ax.set_title(f"n={n}: mu={mu:.6g}, sigma={sigma:.6g}")
    ax.legend(fontsize=8)
    return fig


def twist_figure(series: Mapping[int, Sequence[tuple[int, int]]]) -> Figure:
    """Twist numbers T_k against n, one line per k, log-scaled."""
    fig = _new_figure()
    ax = fig.add_subplot()
    for k, pairs in sorted(series.items()):
        ax.plot([n for n, _ in pairs], [t for _, t in pairs],
                marker=".", linewidth=1, label=f"T{k}")
    ax.set_yscale("log")
    ax.set_xlabel("n")
    ax.set_ylabel("twist number")
    ax.set_title("higher twist numbers")
    ax.legend(fontsize=8)
    return fig


def bounds_figure(rows: Sequence[tuple[int, float, float, float | None,
                                       float | None, float | None,
                                       float | None]]) -> Figure:
    """Relative volume bounds and normalized twist curves against n."""
    fig = _new_figure()
    ax = fig.add_subplot()
    ns = [r[0] for r in rows]
    ax.plot(ns, [r[1] for r in rows], color="black", label="lower bound")
    ax.plot(ns, [r[2] for r in rows], color="black", linestyle="--",
            label="upper bound")
    for idx, label, color in ((3, "curve k=2", "tab:blue"),
                              (4, "curve k=3", "tab:orange"),
                              (5, "curve k=4", "tab:green")):
        pts = [(r[0], r[idx]) for r in rows if r[idx] is not None]
        if pts:
            ax.plot([n for n, _ in pts], [v for _, v in pts],
                    color=color, linewidth=1, label=label)
    vol = [(r[0], r[6]) for r in rows if r[6] is not None]
    if vol:
        ax.scatter([n for n, _ in vol], [v for _, v in vol],
                   color="tab:red", s=12, label="volume / 2n")
    ax.set_xlabel("n")
    ax.set_ylabel("volume per crossing pair")
    ax.set_title("relative volume bounds")
    ax.legend(fontsize=8)
    return fig


def correlation_figure(scatter: Sequence[tuple[int, int, float]], k: int,
                       pearson_r: float) -> Figure:
    """Volume against T_k for the ingested records."""
    fig = _new_figure()
    ax = fig.add_subplot()
    ax.scatter([t for _, t, _ in scatter], [v for _, _, v in scatter],
               color="tab:blue", s=18)
    ax.set_xlabel(f"T{k}")
    ax.set_ylabel("volume")
    ax.set_title(f"twist-volume correlation (r = {pearson_r:.6g})")
    return fig
