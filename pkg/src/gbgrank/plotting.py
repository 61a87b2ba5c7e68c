"""Figures for verification reports."""

from __future__ import annotations

from pathlib import Path
from typing import Sequence, Union

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.colors import ListedColormap  # noqa: E402

from .verify import VerificationReport  # noqa: E402

_STATUS_CMAP = ListedColormap(["#d9d9d9", "#c0392b", "#b7e4c7", "#27ae60"])


def _column_label(cell):
    label = f"t{cell.t} N{cell.N} v{cell.nu}"
    if cell.j is not None:
        label += f" j{cell.j}"
    return label


def plot_grid_status(reports: Sequence[VerificationReport], path: Union[str, Path]) -> Path:
    """One panel per formula: rank k down the side, (t, N, nu[, j]) along the bottom.

    Dark green cells matched with a nonzero series, pale green ones matched
    with the zero series, red cells diverged, grey cells were not run.
    """
    path = Path(path)
    names = list(dict.fromkeys(r.cell.formula for r in reports))
    if not names:
        raise ValueError("no reports to plot")
    fig, axes = plt.subplots(len(names), 1, figsize=(12, 2.6 * len(names)), squeeze=False)
    for ax, name in zip(axes[:, 0], names):
        rows = [r for r in reports if r.cell.formula == name]
        ks = sorted({r.cell.k for r in rows})
        cols = list(dict.fromkeys(_column_label(r.cell) for r in rows))
        grid = [[0] * len(cols) for _ in ks]
        for r in rows:
            if not r.matched:
                status = 1
            else:
                status = 3 if any(r.oracle_coeffs) else 2
            grid[ks.index(r.cell.k)][cols.index(_column_label(r.cell))] = status
        ax.imshow(grid, cmap=_STATUS_CMAP, vmin=0, vmax=3, aspect="auto", interpolation="nearest")
        ax.set_yticks(range(len(ks)))
        ax.set_yticklabels([str(k) for k in ks], fontsize=7)
        ax.set_ylabel("k")
        step = max(1, len(cols) // 40)
        ax.set_xticks(range(0, len(cols), step))
        ax.set_xticklabels(cols[::step], rotation=90, fontsize=6)
        bad = sum(not r.matched for r in rows)
        ax.set_title(f"{name}: {len(rows) - bad}/{len(rows)} cells matched", fontsize=10)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def plot_coefficients(report: VerificationReport, path: Union[str, Path]) -> Path:
    """Formula and oracle coefficients of a single cell on a symlog axis."""
    path = Path(path)
    exps = range(len(report.formula_coeffs))
    fig, ax = plt.subplots(figsize=(8, 4))
    ax.plot(exps, report.oracle_coeffs, "o", color="#2c3e50", label="enumeration", markersize=6, fillstyle="none")
    ax.plot(exps, report.formula_coeffs, ".", color="#e67e22", label="closed form", markersize=5)
    if report.first_divergence is not None:
        ax.axvline(report.first_divergence, color="#c0392b", linestyle="--", linewidth=1, label="first divergence")
    ax.set_yscale("symlog", linthresh=1)
    ax.set_xlabel("exponent of q")
    ax.set_ylabel("coefficient")
    c = report.cell
    title = f"{c.formula}  t={c.t} N={c.N} nu={c.nu} k={c.k}"
    if c.j is not None:
        title += f" j={c.j}"
    ax.set_title(title + ("" if report.matched else "  (MISMATCH)"))
    ax.legend(frameon=False, fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
