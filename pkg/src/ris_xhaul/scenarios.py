"""Deployment geometry, per-link gains, and the three sweep families.

A sweep produces a SweepResult: a small, strictly ordered table that is the
backing store for the CSV reports and the rendered figures.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Sequence

from .geometry import (
    AntennaGains,
    ChannelGain,
    NodePosition,
    NoisePower,
    channel_gain,
    distance,
    dbm_to_watts,
    los_params,
    nlos_params,
    noise_power,
    watts_to_dbm,
)
from .link_budget import (
    PowerModel,
    ScenarioKind,
    energy_efficiency,
    required_power_direct,
    required_power_ris,
    ris_rate,
    shannon_rate,
    total_power,
)
from .ris import cascaded_gain
from .sizing import SizingProblem, optimal_elements_int

DEFAULT_N_ELEMENTS = (200, 500, 1000)
DEFAULT_CARRIERS_HZ = (3e9, 28e9)


@dataclass(frozen=True)
class ScenarioConfig:
    """Full deployment description in internal units (meters, Hz, watts).

    Defaults reproduce the reference street-level setup: neighbor and failed
    BS 100 m apart, donor BS at the same distance from the failed BS, panel
    offset 15 m from the connecting line, 3 GHz carrier, 10 MHz bandwidth,
    30 dBm transmit power.
    """

    nbs: NodePosition = NodePosition(0.0, 0.0)
    fbs: NodePosition = NodePosition(100.0, 0.0)
    dbs: NodePosition = NodePosition(100.0, 100.0)
    ris_height: float = 15.0
    carrier_hz: float = 3e9
    bandwidth_hz: float = 10e6
    noise_figure_db: float = 10.0
    gains: AntennaGains = AntennaGains(5.0, 5.0)
    epsilon: float = 1.0
    tx_power_w: float = dbm_to_watts(30.0)
    power_model: PowerModel = PowerModel()
    target_rate: float = 4.0
    threshold_fraction: float = 0.5
    allow_short_distance: bool = False

    def __post_init__(self) -> None:
        if self.tx_power_w < 0:
            raise ValueError(f"tx_power_w must be >= 0, got {self.tx_power_w}")
        if not (0.0 < self.epsilon <= 1.0):
            raise ValueError(f"epsilon must be in (0, 1], got {self.epsilon}")
        if not (0.0 <= self.threshold_fraction <= 1.0):
            raise ValueError(
                f"threshold_fraction must be in [0, 1], got {self.threshold_fraction}"
            )
        if self.ris_height <= 0:
            raise ValueError(f"ris_height must be > 0, got {self.ris_height}")

    def noise(self) -> NoisePower:
        return noise_power(self.bandwidth_hz, self.noise_figure_db)

    @property
    def d_nf(self) -> float:
        return distance(self.nbs, self.fbs)

    @property
    def d_df(self) -> float:
        return distance(self.dbs, self.fbs)


@dataclass(frozen=True)
class LinkGains:
    """Per-link power gains for one panel position."""

    beta_df: ChannelGain
    beta_nf: ChannelGain
    beta_ni: ChannelGain
    beta_if: ChannelGain
    beta_nif: ChannelGain


@dataclass(frozen=True)
class SweepResult:
    """Rows of (independent variable, dependent values), strictly ascending."""

    columns: tuple
    rows: tuple

    def __post_init__(self) -> None:
        cols = tuple(str(c) for c in self.columns)
        rows = tuple(tuple(float(v) for v in row) for row in self.rows)
        for row in rows:
            if len(row) != len(cols):
                raise ValueError(
                    f"row width {len(row)} does not match {len(cols)} columns"
                )
            if not all(math.isfinite(v) for v in row):
                raise ValueError(f"non-finite value in row {row}")
        for prev, cur in zip(rows, rows[1:]):
            if not cur[0] > prev[0]:
                raise ValueError("rows must be strictly ascending in the first column")
        object.__setattr__(self, "columns", cols)
        object.__setattr__(self, "rows", rows)

    def column(self, name: str) -> tuple:
        idx = self.columns.index(name)
        return tuple(row[idx] for row in self.rows)

    def to_csv_text(self) -> str:
        """Canonical CSV rendering: 9 significant digits, LF line endings."""
        lines = [",".join(self.columns)]
        for row in self.rows:
            lines.append(",".join(f"{v:.9g}" for v in row))
        return "\n".join(lines) + "\n"

    def write_csv(self, path) -> None:
        with open(path, "w", newline="") as fh:
            fh.write(self.to_csv_text())

    @classmethod
    def from_csv_text(cls, text: str) -> "SweepResult":
        lines = [line for line in text.split("\n") if line]
        if not lines:
            raise ValueError("empty CSV")
        header = tuple(lines[0].split(","))
        rows = tuple(tuple(float(v) for v in line.split(",")) for line in lines[1:])
        return cls(columns=header, rows=rows)

    @classmethod
    def read_csv(cls, path) -> "SweepResult":
        with open(path, "r", newline="") as fh:
            return cls.from_csv_text(fh.read())


def build_links(cfg: ScenarioConfig, ris_x: float) -> LinkGains:
    """Per-link gains with the panel at (ris_x, ris_height).

    The donor link and both panel hops are line of sight; the bare healing
    link is not. Each hop is evaluated with the full endpoint antenna gains.
    """
    los = los_params(cfg.carrier_hz)
    nlos = nlos_params(cfg.carrier_hz)
    ris = NodePosition(ris_x, cfg.ris_height)
    d_ni = distance(cfg.nbs, ris)
    d_if = distance(ris, cfg.fbs)
    allow = cfg.allow_short_distance
    beta_ni = channel_gain(d_ni, los, cfg.gains, allow)
    beta_if = channel_gain(d_if, los, cfg.gains, allow)
    return LinkGains(
        beta_df=channel_gain(cfg.d_df, los, cfg.gains, allow),
        beta_nf=channel_gain(cfg.d_nf, nlos, cfg.gains, allow),
        beta_ni=beta_ni,
        beta_if=beta_if,
        beta_nif=cascaded_gain(beta_ni, beta_if),
    )


def _x_grid(x_range: Sequence[float], step: float) -> list:
    if step <= 0:
        raise ValueError(f"step must be > 0, got {step}")
    x0, x1 = float(x_range[0]), float(x_range[1])
    if x1 < x0:
        raise ValueError(f"x_range must be ascending, got ({x0}, {x1})")
    count = int(round((x1 - x0) / step))
    grid = [x0 + i * step for i in range(count + 1)]
    if grid[-1] > x1 + 1e-9:
        grid.pop()
    return grid


def sweep_position(
    cfg: ScenarioConfig,
    n_list: Sequence[int] = DEFAULT_N_ELEMENTS,
    x_range: Sequence[float] = (0.0, 200.0),
    step: float = 1.0,
) -> SweepResult:
    """Achievable rate versus panel position at the configured transmit power.

    The donor and bare healing links do not depend on the panel position, so
    their columns are flat.
    """
    noise = cfg.noise()
    columns = ["x", "R_los", "R_nlos"] + [f"R_ris_N{n}" for n in n_list]
    rows = []
    for x in _x_grid(x_range, step):
        links = build_links(cfg, x)
        row = [
            x,
            shannon_rate(cfg.tx_power_w, links.beta_df, noise),
            shannon_rate(cfg.tx_power_w, links.beta_nf, noise),
        ]
        for n in n_list:
            row.append(
                ris_rate(cfg.tx_power_w, links.beta_nf, links.beta_nif,
                         cfg.epsilon, n, noise)
            )
        rows.append(row)
    return SweepResult(columns=tuple(columns), rows=tuple(rows))


def _carrier_label(carrier_hz: float) -> str:
    return f"{carrier_hz / 1e9:g}GHz"


def sweep_power(
    cfg: ScenarioConfig,
    n_list: Sequence[int] = DEFAULT_N_ELEMENTS,
    x_range: Sequence[float] = (0.0, 200.0),
    step: float = 1.0,
    carriers_hz: Sequence[float] | None = None,
) -> SweepResult:
    """Required transmit power (dBm) versus panel position, per carrier."""
    if cfg.target_rate <= 0:
        raise ValueError(f"target_rate must be > 0 for a power sweep, got {cfg.target_rate}")
    carriers = tuple(carriers_hz) if carriers_hz else DEFAULT_CARRIERS_HZ
    noise = cfg.noise()
    columns = ["x"]
    for c in carriers:
        lab = _carrier_label(c)
        columns += [f"P_los_{lab}", f"P_nlos_{lab}"]
        columns += [f"P_ris_N{n}_{lab}" for n in n_list]
    rows = []
    for x in _x_grid(x_range, step):
        row = [x]
        for c in carriers:
            links = build_links(replace(cfg, carrier_hz=c), x)
            row.append(watts_to_dbm(
                required_power_direct(cfg.target_rate, links.beta_df, noise)))
            row.append(watts_to_dbm(
                required_power_direct(cfg.target_rate, links.beta_nf, noise)))
            for n in n_list:
                row.append(watts_to_dbm(required_power_ris(
                    cfg.target_rate, links.beta_nf, links.beta_nif,
                    cfg.epsilon, n, noise)))
        rows.append(row)
    return SweepResult(columns=tuple(columns), rows=tuple(rows))


def sweep_ee(
    cfg: ScenarioConfig,
    rate_grid: Sequence[float],
    ris_x: float = 0.0,
) -> SweepResult:
    """Energy efficiency versus target rate with the element count optimized.

    For every target rate the panel is sized by the closed form plus integer
    refinement, then required powers, total powers, and bit-per-joule figures
    are reported for all three scenarios.
    """
    grid = [float(r) for r in rate_grid]
    if not grid:
        raise ValueError("rate_grid must not be empty")
    if any(r <= 0 for r in grid):
        raise ValueError("rate_grid entries must be > 0")
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise ValueError("rate_grid must be strictly increasing")

    noise = cfg.noise()
    links = build_links(cfg, ris_x)
    model = cfg.power_model
    columns = (
        "r_bar", "N_star",
        "P_los", "P_nlos", "P_ris",
        "Ptot_los", "Ptot_nlos", "Ptot_ris",
        "EE_los", "EE_nlos", "EE_ris",
    )
    rows = []
    for r_bar in grid:
        prob = SizingProblem.from_power_model(
            r_bar, noise, cfg.epsilon, links.beta_nf, links.beta_nif, model
        )
        n_star = optimal_elements_int(prob, model)
        p_los = required_power_direct(r_bar, links.beta_df, noise)
        p_nlos = required_power_direct(r_bar, links.beta_nf, noise)
        p_ris = required_power_ris(
            r_bar, links.beta_nf, links.beta_nif, cfg.epsilon, n_star, noise
        )
        ptot_los = total_power(ScenarioKind.DBS_FBS_LOS, p_los, model)
        ptot_nlos = total_power(ScenarioKind.NBS_FBS_NLOS, p_nlos, model)
        ptot_ris = total_power(ScenarioKind.NBS_RIS_FBS, p_ris, model, n_star)
        rows.append([
            r_bar, n_star,
            watts_to_dbm(p_los), watts_to_dbm(p_nlos), watts_to_dbm(p_ris),
            watts_to_dbm(ptot_los), watts_to_dbm(ptot_nlos), watts_to_dbm(ptot_ris),
            energy_efficiency(cfg.bandwidth_hz, r_bar, ptot_los),
            energy_efficiency(cfg.bandwidth_hz, r_bar, ptot_nlos),
            energy_efficiency(cfg.bandwidth_hz, r_bar, ptot_ris),
        ])
    return SweepResult(columns=columns, rows=tuple(rows))
