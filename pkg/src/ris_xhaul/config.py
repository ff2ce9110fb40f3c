"""YAML configuration ingestion with deployment defaults.

Every field is optional; an empty (or absent) file reproduces the reference
setup. Values at this boundary use field units (dBm, dBi, GHz, MHz, mW,
meters) and are converted to internal linear units on load.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import yaml

from .errors import ConfigInvalid
from .geometry import AntennaGains, NodePosition, dbm_to_watts
from .link_budget import PowerModel
from .scenarios import ScenarioConfig

log = logging.getLogger("ris_xhaul")

DEFAULTS = {
    "geometry": {
        "nbs": [0.0, 0.0],
        "fbs": [100.0, 0.0],
        "dbs": [100.0, 100.0],
        "ris_height_m": 15.0,
    },
    "radio": {
        "carrier_ghz": 3.0,
        "bandwidth_mhz": 10.0,
        "noise_figure_db": 10.0,
        "antenna_gain_tx_dbi": 5.0,
        "antenna_gain_rx_dbi": 5.0,
        "epsilon": 1.0,
        "tx_power_dbm": 30.0,
    },
    "power": {
        "nu": 0.5,
        "p_d_mw": 100.0,
        "p_n_mw": 100.0,
        "p_f_mw": 100.0,
        "p_e_mw": 5.0,
    },
    "target": {
        "rate": 4.0,
        "threshold_fraction": 0.5,
    },
    "sweep": {
        "x_min_m": 0.0,
        "x_max_m": 200.0,
        "step_m": 1.0,
        "n_elements": [200, 500, 1000],
        "carriers_ghz": [3.0, 28.0],
        "ris_x_m": 0.0,
        "ee_rate_min": 0.5,
        "ee_rate_max": 25.0,
        "ee_rate_step": 0.5,
    },
    "allow_short_distance": False,
}


@dataclass(frozen=True)
class SweepSettings:
    """Grid parameters for the sweep subcommands."""

    x_min: float = 0.0
    x_max: float = 200.0
    step: float = 1.0
    n_elements: tuple = (200, 500, 1000)
    carriers_hz: tuple = (3e9, 28e9)
    ris_x: float = 0.0
    ee_rate_min: float = 0.5
    ee_rate_max: float = 25.0
    ee_rate_step: float = 0.5


@dataclass(frozen=True)
class RunConfig:
    scenario: ScenarioConfig
    sweep: SweepSettings
    defaulted: tuple


def _fail(path: str, message: str) -> ConfigInvalid:
    return ConfigInvalid(f"config field '{path}': {message}")


def _number(doc: dict, section: str, key: str, lo=None, hi=None, lo_open=False):
    path = f"{section}.{key}"
    value = doc[section][key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise _fail(path, f"expected a number, got {value!r}")
    value = float(value)
    if not math.isfinite(value):
        raise _fail(path, "must be finite")
    if lo is not None and (value <= lo if lo_open else value < lo):
        raise _fail(path, f"must be {'>' if lo_open else '>='} {lo}, got {value:g}")
    if hi is not None and value > hi:
        raise _fail(path, f"must be <= {hi}, got {value:g}")
    return value


def _position(doc: dict, key: str) -> NodePosition:
    path = f"geometry.{key}"
    value = doc["geometry"][key]
    if not isinstance(value, (list, tuple)) or len(value) != 2:
        raise _fail(path, f"expected [x, y] in meters, got {value!r}")
    try:
        return NodePosition(float(value[0]), float(value[1]))
    except (TypeError, ValueError) as exc:
        raise _fail(path, str(exc)) from None


def _merge(user: dict, defaults: dict, prefix: str, defaulted: list) -> dict:
    merged = {}
    for key, default in defaults.items():
        path = f"{prefix}{key}"
        if key not in user:
            merged[key] = default
            defaulted.append(path)
        elif isinstance(default, dict):
            sub = user[key]
            if sub is None:
                sub = {}
            if not isinstance(sub, dict):
                raise _fail(path, f"expected a mapping, got {sub!r}")
            merged[key] = _merge(sub, default, f"{path}.", defaulted)
        else:
            merged[key] = user[key]
    for key in user:
        if key not in defaults:
            raise _fail(f"{prefix}{key}", "unknown field")
    return merged


def load_config(path: str | None) -> RunConfig:
    """Load and validate a config file; None means all defaults."""
    if path is None:
        user: dict = {}
    else:
        try:
            with open(path, "r") as fh:
                user = yaml.safe_load(fh)
        except OSError as exc:
            raise ConfigInvalid(f"cannot read config file {path}: {exc}") from None
        except yaml.YAMLError as exc:
            raise ConfigInvalid(f"config file {path} is not valid YAML: {exc}") from None
        if user is None:
            user = {}
        if not isinstance(user, dict):
            raise ConfigInvalid(f"config file {path} must contain a mapping")

    defaulted: list = []
    doc = _merge(user, DEFAULTS, "", defaulted)

    nbs = _position(doc, "nbs")
    fbs = _position(doc, "fbs")
    dbs = _position(doc, "dbs")
    ris_height = _number(doc, "geometry", "ris_height_m", lo=0, lo_open=True)

    carrier = _number(doc, "radio", "carrier_ghz", lo=0, lo_open=True) * 1e9
    bandwidth = _number(doc, "radio", "bandwidth_mhz", lo=0, lo_open=True) * 1e6
    noise_figure = _number(doc, "radio", "noise_figure_db")
    gains = AntennaGains(
        _number(doc, "radio", "antenna_gain_tx_dbi"),
        _number(doc, "radio", "antenna_gain_rx_dbi"),
    )
    epsilon = _number(doc, "radio", "epsilon", lo=0, lo_open=True, hi=1.0)
    tx_power = dbm_to_watts(_number(doc, "radio", "tx_power_dbm"))

    model = PowerModel(
        nu=_number(doc, "power", "nu", lo=0, lo_open=True, hi=1.0),
        p_d=_number(doc, "power", "p_d_mw", lo=0) * 1e-3,
        p_n=_number(doc, "power", "p_n_mw", lo=0) * 1e-3,
        p_f=_number(doc, "power", "p_f_mw", lo=0) * 1e-3,
        p_e=_number(doc, "power", "p_e_mw", lo=0, lo_open=True) * 1e-3,
    )

    target_rate = _number(doc, "target", "rate", lo=0)
    threshold_fraction = _number(doc, "target", "threshold_fraction", lo=0, hi=1.0)

    allow_short = doc["allow_short_distance"]
    if not isinstance(allow_short, bool):
        raise _fail("allow_short_distance", f"expected true/false, got {allow_short!r}")

    n_elements = doc["sweep"]["n_elements"]
    if not isinstance(n_elements, (list, tuple)) or not n_elements:
        raise _fail("sweep.n_elements", f"expected a non-empty list, got {n_elements!r}")
    for n in n_elements:
        if isinstance(n, bool) or not isinstance(n, int) or n < 0:
            raise _fail("sweep.n_elements", f"entries must be integers >= 0, got {n!r}")

    carriers = doc["sweep"]["carriers_ghz"]
    if not isinstance(carriers, (list, tuple)) or not carriers:
        raise _fail("sweep.carriers_ghz", f"expected a non-empty list, got {carriers!r}")
    for c in carriers:
        if isinstance(c, bool) or not isinstance(c, (int, float)) or c <= 0:
            raise _fail("sweep.carriers_ghz", f"entries must be > 0, got {c!r}")

    x_min = _number(doc, "sweep", "x_min_m")
    x_max = _number(doc, "sweep", "x_max_m")
    if x_max < x_min:
        raise _fail("sweep.x_max_m", f"must be >= x_min_m, got {x_max:g} < {x_min:g}")
    ee_min = _number(doc, "sweep", "ee_rate_min", lo=0, lo_open=True)
    ee_max = _number(doc, "sweep", "ee_rate_max", lo=0, lo_open=True)
    if ee_max < ee_min:
        raise _fail("sweep.ee_rate_max", f"must be >= ee_rate_min, got {ee_max:g}")

    try:
        scenario = ScenarioConfig(
            nbs=nbs,
            fbs=fbs,
            dbs=dbs,
            ris_height=ris_height,
            carrier_hz=carrier,
            bandwidth_hz=bandwidth,
            noise_figure_db=noise_figure,
            gains=gains,
            epsilon=epsilon,
            tx_power_w=tx_power,
            power_model=model,
            target_rate=target_rate,
            threshold_fraction=threshold_fraction,
            allow_short_distance=allow_short,
        )
    except ValueError as exc:
        raise ConfigInvalid(str(exc)) from None

    sweep = SweepSettings(
        x_min=x_min,
        x_max=x_max,
        step=_number(doc, "sweep", "step_m", lo=0, lo_open=True),
        n_elements=tuple(int(n) for n in n_elements),
        carriers_hz=tuple(float(c) * 1e9 for c in carriers),
        ris_x=_number(doc, "sweep", "ris_x_m"),
        ee_rate_min=ee_min,
        ee_rate_max=ee_max,
        ee_rate_step=_number(doc, "sweep", "ee_rate_step", lo=0, lo_open=True),
    )

    if defaulted:
        log.info("using defaults for: %s", ", ".join(sorted(defaulted)))
    return RunConfig(scenario=scenario, sweep=sweep, defaulted=tuple(defaulted))


def render_config(rc: RunConfig) -> dict:
    """Resolved configuration in boundary units, for the run manifest."""
    sc, sw = rc.scenario, rc.sweep
    return {
        "geometry": {
            "nbs": [sc.nbs.x, sc.nbs.y],
            "fbs": [sc.fbs.x, sc.fbs.y],
            "dbs": [sc.dbs.x, sc.dbs.y],
            "ris_height_m": sc.ris_height,
        },
        "radio": {
            "carrier_ghz": sc.carrier_hz / 1e9,
            "bandwidth_mhz": sc.bandwidth_hz / 1e6,
            "noise_figure_db": sc.noise_figure_db,
            "antenna_gain_tx_dbi": sc.gains.gt,
            "antenna_gain_rx_dbi": sc.gains.gr,
            "epsilon": sc.epsilon,
            "tx_power_dbm": 10.0 * math.log10(sc.tx_power_w) + 30.0,
        },
        "power": {
            "nu": sc.power_model.nu,
            "p_d_mw": sc.power_model.p_d * 1e3,
            "p_n_mw": sc.power_model.p_n * 1e3,
            "p_f_mw": sc.power_model.p_f * 1e3,
            "p_e_mw": sc.power_model.p_e * 1e3,
        },
        "target": {
            "rate": sc.target_rate,
            "threshold_fraction": sc.threshold_fraction,
        },
        "sweep": {
            "x_min_m": sw.x_min,
            "x_max_m": sw.x_max,
            "step_m": sw.step,
            "n_elements": list(sw.n_elements),
            "carriers_ghz": [c / 1e9 for c in sw.carriers_hz],
            "ris_x_m": sw.ris_x,
            "ee_rate_min": sw.ee_rate_min,
            "ee_rate_max": sw.ee_rate_max,
            "ee_rate_step": sw.ee_rate_step,
        },
        "allow_short_distance": sc.allow_short_distance,
    }
