"""Render sweep tables to figure files next to their CSV output."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .scenarios import SweepResult

_GRID = {"alpha": 0.4, "linestyle": ":"}


def _ris_columns(result: SweepResult, prefix: str) -> list:
    return [c for c in result.columns if c.startswith(prefix)]


def save_rate_figure(result: SweepResult, path, threshold_rate: float | None = None):
    """Rate-versus-position curves for all scenarios."""
    x = result.column("x")
    fig, ax = plt.subplots(figsize=(7, 4.5))
    ax.plot(x, result.column("R_los"), "k--", label="donor link (LoS)")
    ax.plot(x, result.column("R_nlos"), "k:", label="healing link (NLoS)")
    for col in _ris_columns(result, "R_ris_N"):
        ax.plot(x, result.column(col), label=f"panel, N={col.removeprefix('R_ris_N')}")
    if threshold_rate is not None:
        ax.axhline(threshold_rate, color="gray", linewidth=1.0,
                   label="threshold rate")
    ax.set_xlabel("panel position x [m]")
    ax.set_ylabel("achievable rate [bit/s/Hz]")
    ax.grid(True, **_GRID)
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_power_figure(result: SweepResult, path, budget_dbm: float | None = None):
    """Required transmit power versus position, one line style per carrier."""
    x = result.column("x")
    carriers = sorted({c.rsplit("_", 1)[-1] for c in result.columns if c != "x"})
    styles = ["-", "--", "-.", ":"]
    fig, ax = plt.subplots(figsize=(7, 4.5))
    for style, lab in zip(styles, carriers):
        for col in result.columns:
            if col == "x" or not col.endswith(f"_{lab}"):
                continue
            name = col.removesuffix(f"_{lab}")
            ax.plot(x, result.column(col), style,
                    label=f"{name.removeprefix('P_')} @ {lab}")
    if budget_dbm is not None:
        ax.axhline(budget_dbm, color="red", linewidth=1.0, label="power budget")
    ax.set_xlabel("panel position x [m]")
    ax.set_ylabel("required transmit power [dBm]")
    ax.grid(True, **_GRID)
    ax.legend(fontsize=7, ncols=2)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_ee_figure(result: SweepResult, path):
    """Energy efficiency versus target rate, with the sized element count."""
    r = result.column("r_bar")
    fig, ax = plt.subplots(figsize=(7, 4.5))
    ax.semilogy(r, result.column("EE_los"), "k--", label="donor link (LoS)")
    ax.semilogy(r, result.column("EE_nlos"), "k:", label="healing link (NLoS)")
    ax.semilogy(r, result.column("EE_ris"), "-", label="panel-assisted (sized)")
    ax.set_xlabel("target rate [bit/s/Hz]")
    ax.set_ylabel("energy efficiency [bit/J]")
    ax.grid(True, **_GRID)
    twin = ax.twinx()
    twin.plot(r, result.column("N_star"), "C3-.", label="optimal element count")
    twin.set_ylabel("optimal element count")
    handles, labels = ax.get_legend_handles_labels()
    h2, l2 = twin.get_legend_handles_labels()
    ax.legend(handles + h2, labels + l2, fontsize=8, loc="center left")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
