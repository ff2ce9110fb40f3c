"""Command-line front end: sweep subcommands, CSV + manifest emission, summary.

Exit codes: 0 success, 2 invalid configuration, 3 model-domain error,
4 I/O error. Diagnostics go to stderr; stdout carries only the summary table.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import logging
import math
import sys
from dataclasses import dataclass, replace
from pathlib import Path

from . import __version__
from .config import RunConfig, load_config, render_config
from .errors import ConfigInvalid, ModelDomainError
from .geometry import watts_to_dbm
from .link_budget import ScenarioKind, total_power
from .scenarios import (
    ScenarioConfig,
    SweepResult,
    build_links,
    sweep_ee,
    sweep_position,
    sweep_power,
)
from .sizing import (
    SizingProblem,
    brute_force_optimal,
    optimal_elements_int,
    optimal_elements_real,
)

log = logging.getLogger("ris_xhaul")


@dataclass(frozen=True)
class RunManifest:
    """Reproducibility record serialized alongside every output file."""

    tool: str
    version: str
    subcommand: str
    deterministic: bool
    seed: int | None
    config: dict
    outputs: dict

    def write(self, path: Path) -> None:
        payload = dataclasses.asdict(self)
        with open(path, "w", newline="") as fh:
            json.dump(payload, fh, indent=2, sort_keys=True)
            fh.write("\n")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ris-xhaul",
        description=(
            "Quantify how a reconfigurable intelligent surface restores a "
            "failed wireless X-haul link: rate/power/energy-efficiency sweeps "
            "and optimal element counts."
        ),
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--config", metavar="PATH", help="YAML config file")
        p.add_argument("--out", metavar="PATH", required=True, help="output CSV path")
        p.add_argument("--step", type=float, metavar="M", help="position grid step [m]")
        p.add_argument("--carrier", type=float, metavar="GHZ", help="carrier frequency [GHz]")
        p.add_argument("--n", metavar="LIST", help="comma-separated element counts")
        p.add_argument("--rate", type=float, metavar="R", help="target rate [bit/s/Hz]")
        p.add_argument("--seed", type=int, metavar="INT",
                       help="recorded in the manifest; the math is deterministic")
        p.add_argument("--no-figure", action="store_true",
                       help="skip rendering the figure next to the CSV")
        return p

    add("rate-vs-position", "achievable rate vs panel position")
    add("power-vs-position", "required transmit power vs panel position")
    add("ee-vs-rate", "energy efficiency vs target rate with sized panel")
    add("size-ris", "optimal element count for the target rate")
    return parser


def _parse_n_list(raw: str) -> tuple:
    try:
        values = tuple(int(part) for part in raw.split(","))
    except ValueError:
        raise ConfigInvalid(f"config field '--n': expected comma-separated integers, got {raw!r}")
    if not values or any(n < 0 for n in values):
        raise ConfigInvalid(f"config field '--n': entries must be integers >= 0, got {raw!r}")
    return values


def _apply_overrides(rc: RunConfig, args: argparse.Namespace) -> RunConfig:
    scenario, sweep = rc.scenario, rc.sweep
    if args.step is not None:
        if args.step <= 0:
            raise ConfigInvalid(f"config field '--step': must be > 0, got {args.step}")
        sweep = replace(sweep, step=args.step)
    if args.carrier is not None:
        if args.carrier <= 0:
            raise ConfigInvalid(f"config field '--carrier': must be > 0, got {args.carrier}")
        scenario = replace(scenario, carrier_hz=args.carrier * 1e9)
        sweep = replace(sweep, carriers_hz=(args.carrier * 1e9,))
    if args.n is not None:
        sweep = replace(sweep, n_elements=_parse_n_list(args.n))
    if args.rate is not None:
        if args.rate < 0:
            raise ConfigInvalid(f"config field '--rate': must be >= 0, got {args.rate}")
        if args.subcommand == "ee-vs-rate":
            sweep = replace(sweep, ee_rate_max=args.rate)
        else:
            scenario = replace(scenario, target_rate=args.rate)
    return RunConfig(scenario=scenario, sweep=sweep, defaulted=rc.defaulted)


def _rate_grid(sweep) -> list:
    count = int(round((sweep.ee_rate_max - sweep.ee_rate_min) / sweep.ee_rate_step))
    grid = [sweep.ee_rate_min + i * sweep.ee_rate_step for i in range(count + 1)]
    return [r for r in grid if r <= sweep.ee_rate_max + 1e-9]


def _emit(result: SweepResult, rc: RunConfig, args, render) -> dict:
    """Write CSV, optional figure, and the manifest; returns output paths."""
    out = Path(args.out)
    if out.parent and not out.parent.exists():
        out.parent.mkdir(parents=True, exist_ok=True)
    result.write_csv(out)
    outputs = {"csv": str(out)}
    if render is not None and not args.no_figure:
        figure = out.with_suffix(".png")
        render(figure)
        outputs["figure"] = str(figure)
    manifest_path = out.with_suffix(".manifest.json")
    outputs["manifest"] = str(manifest_path)
    RunManifest(
        tool="ris-xhaul",
        version=__version__,
        subcommand=args.subcommand,
        deterministic=True,
        seed=args.seed,
        config=render_config(rc),
        outputs=outputs,
    ).write(manifest_path)
    log.info("wrote %s", ", ".join(outputs.values()))
    return outputs


def _print_table(rows: list) -> None:
    widths = [max(len(str(r[i])) for r in rows) for i in range(len(rows[0]))]
    for row in rows:
        print("  ".join(str(v).ljust(w) for v, w in zip(row, widths)).rstrip())


def _run_rate(rc: RunConfig, args) -> None:
    sc, sw = rc.scenario, rc.sweep
    result = sweep_position(sc, sw.n_elements, (sw.x_min, sw.x_max), sw.step)
    r_los = result.column("R_los")[0]
    threshold = sc.threshold_fraction * r_los

    def render(path):
        from .plots import save_rate_figure

        save_rate_figure(result, path, threshold_rate=threshold)

    _emit(result, rc, args, render)
    x = result.column("x")
    rows = [["curve", "max [bit/s/Hz]", "at x [m]", "meets threshold"]]
    for col in result.columns[1:]:
        values = result.column(col)
        best = max(range(len(values)), key=values.__getitem__)
        met = sum(1 for v in values if v >= threshold)
        rows.append([col, f"{values[best]:.6g}", f"{x[best]:g}", f"{met}/{len(values)} positions"])
    print(f"threshold rate: {threshold:.6g} bit/s/Hz "
          f"({sc.threshold_fraction:.0%} of the pre-failure rate {r_los:.6g})")
    _print_table(rows)


def _run_power(rc: RunConfig, args) -> None:
    sc, sw = rc.scenario, rc.sweep
    result = sweep_power(sc, sw.n_elements, (sw.x_min, sw.x_max), sw.step, sw.carriers_hz)
    budget = watts_to_dbm(sc.tx_power_w)

    def render(path):
        from .plots import save_power_figure

        save_power_figure(result, path, budget_dbm=budget)

    _emit(result, rc, args, render)
    x = result.column("x")
    rows = [["curve", "min [dBm]", "at x [m]", "within budget"]]
    for col in result.columns[1:]:
        values = result.column(col)
        best = min(range(len(values)), key=values.__getitem__)
        ok = sum(1 for v in values if v <= budget)
        rows.append([col, f"{values[best]:.6g}", f"{x[best]:g}", f"{ok}/{len(values)} positions"])
    print(f"target rate: {sc.target_rate:g} bit/s/Hz, power budget: {budget:.6g} dBm")
    _print_table(rows)


def _run_ee(rc: RunConfig, args) -> None:
    sc, sw = rc.scenario, rc.sweep
    result = sweep_ee(sc, _rate_grid(sw), sw.ris_x)

    def render(path):
        from .plots import save_ee_figure

        save_ee_figure(result, path)

    _emit(result, rc, args, render)
    rates = result.column("r_bar")
    n_star = result.column("N_star")
    ee_ris = result.column("EE_ris")
    ee_los = result.column("EE_los")
    first_on = next((r for r, n in zip(rates, n_star) if n > 0), None)
    beats_los = next((r for r, a, b in zip(rates, ee_ris, ee_los) if a > b), None)
    print(f"panel position: x={sw.ris_x:g} m, offset {sc.ris_height:g} m")
    print("panel pays off from rate: "
          + (f"{first_on:g} bit/s/Hz" if first_on is not None else "never on this grid"))
    print("panel beats donor-link EE from rate: "
          + (f"{beats_los:g} bit/s/Hz" if beats_los is not None else "never on this grid"))
    print(f"sized element count at {rates[-1]:g} bit/s/Hz: {n_star[-1]:.0f}")


def _run_size(rc: RunConfig, args) -> None:
    sc, sw = rc.scenario, rc.sweep
    links = build_links(sc, sw.ris_x)
    model = sc.power_model
    prob = SizingProblem.from_power_model(
        sc.target_rate, sc.noise(), sc.epsilon, links.beta_nf, links.beta_nif, model
    )
    n_real = optimal_elements_real(prob)
    candidates = sorted({0, math.floor(n_real), math.ceil(n_real)})
    from .sizing import _total_power_at

    p_at = {n: _total_power_at(prob, model, n) for n in candidates}
    n_opt = optimal_elements_int(prob, model)
    n_brute = brute_force_optimal(prob, model)

    result = SweepResult(
        columns=("r_bar", "N_real", "N_floor", "N_ceil",
                 "Ptot_zero", "Ptot_floor", "Ptot_ceil", "N_opt", "N_brute"),
        rows=((sc.target_rate, n_real, math.floor(n_real), math.ceil(n_real),
               watts_to_dbm(p_at[0]),
               watts_to_dbm(p_at[math.floor(n_real)]),
               watts_to_dbm(p_at[math.ceil(n_real)]),
               n_opt, n_brute),),
    )
    _emit(result, rc, args, render=None)
    print(f"target rate            : {sc.target_rate:g} bit/s/Hz")
    print(f"panel position         : x={sw.ris_x:g} m, offset {sc.ris_height:g} m")
    print(f"continuous optimum     : {n_real:.3f} elements")
    for n in candidates:
        print(f"total power at N={n:<6d}: {p_at[n]:.6g} W ({watts_to_dbm(p_at[n]):.4g} dBm)")
    print(f"optimal element count  : {n_opt}")
    agree = "agrees" if n_brute == n_opt else "DISAGREES"
    print(f"brute-force check      : {n_brute} ({agree})")


_HANDLERS = {
    "rate-vs-position": _run_rate,
    "power-vs-position": _run_power,
    "ee-vs-rate": _run_ee,
    "size-ris": _run_size,
}


def main(argv=None) -> int:
    logging.basicConfig(stream=sys.stderr, level=logging.INFO, format="%(message)s")
    args = _build_parser().parse_args(argv)
    try:
        rc = _apply_overrides(load_config(args.config), args)
        _HANDLERS[args.subcommand](rc, args)
    except ConfigInvalid as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ModelDomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    return 0


def entrypoint() -> None:
    raise SystemExit(main())
