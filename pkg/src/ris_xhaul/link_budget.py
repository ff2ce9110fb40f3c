"""Achievable rates, required transmit powers, total power, and energy efficiency.

Transmit and dissipated powers are watts, rates are spectral efficiencies in
bit/s/Hz, and energy efficiency is bit/J. The three connection scenarios are:
the pre-failure donor link (LoS), the bare healing link (NLoS), and the healing
link assisted by a reflecting panel.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import NonPositiveTotalPower
from .geometry import ChannelGain, NoisePower


class ScenarioKind(Enum):
    """The three connection scenarios."""

    DBS_FBS_LOS = "dbs-fbs-los"
    NBS_FBS_NLOS = "nbs-fbs-nlos"
    NBS_RIS_FBS = "nbs-ris-fbs"


@dataclass(frozen=True)
class PowerModel:
    """Amplifier efficiency and hardware dissipation terms.

    Defaults: 0.5 efficiency, 100 mW per base station, 5 mW per reflecting
    element.
    """

    nu: float = 0.5
    p_d: float = 0.1
    p_n: float = 0.1
    p_f: float = 0.1
    p_e: float = 0.005

    def __post_init__(self) -> None:
        if not (0.0 < self.nu <= 1.0):
            raise ValueError(f"amplifier efficiency must be in (0, 1], got {self.nu}")
        for name in ("p_d", "p_n", "p_f", "p_e"):
            value = getattr(self, name)
            if value < 0 or not math.isfinite(value):
                raise ValueError(f"{name} must be >= 0, got {value}")


def _composite_gain(
    beta_nf: ChannelGain, beta_nif: ChannelGain, epsilon: float, n_elements: float
) -> float:
    """Effective power gain (sqrt(beta_nf) + eps*N*sqrt(beta_nif))^2.

    N = 0 short-circuits to beta_nf so the panel-assisted formulas reduce
    exactly (bit for bit) to the direct-link ones.
    """
    if n_elements < 0:
        raise ValueError(f"n_elements must be >= 0, got {n_elements}")
    if n_elements == 0:
        return beta_nf.beta
    return (beta_nf.amplitude + epsilon * n_elements * beta_nif.amplitude) ** 2


def shannon_rate(p: float, beta: ChannelGain, noise: NoisePower) -> float:
    """Achievable spectral efficiency log2(1 + p*beta/sigma2)."""
    if p < 0:
        raise ValueError(f"transmit power must be >= 0, got {p}")
    return math.log2(1.0 + p * beta.beta / noise.sigma2)


def ris_rate(
    p: float,
    beta_nf: ChannelGain,
    beta_nif: ChannelGain,
    epsilon: float,
    n_elements: float,
    noise: NoisePower,
) -> float:
    """Panel-assisted spectral efficiency with coherent combining.

    log2(1 + p*(sqrt(beta_nf) + eps*N*sqrt(beta_nif))^2 / sigma2)
    """
    if p < 0:
        raise ValueError(f"transmit power must be >= 0, got {p}")
    comp = _composite_gain(beta_nf, beta_nif, epsilon, n_elements)
    return math.log2(1.0 + p * comp / noise.sigma2)


def required_power_direct(r_bar: float, beta: ChannelGain, noise: NoisePower) -> float:
    """Transmit power in watts needed to reach rate r_bar on a direct link.

    p = (2^r_bar - 1) * sigma2 / beta; exact inverse of shannon_rate.
    """
    if r_bar < 0:
        raise ValueError(f"target rate must be >= 0, got {r_bar}")
    return (2.0**r_bar - 1.0) * noise.sigma2 / beta.beta


def required_power_ris(
    r_bar: float,
    beta_nf: ChannelGain,
    beta_nif: ChannelGain,
    epsilon: float,
    n_elements: float,
    noise: NoisePower,
) -> float:
    """Transmit power in watts needed to reach r_bar with an N-element panel."""
    if r_bar < 0:
        raise ValueError(f"target rate must be >= 0, got {r_bar}")
    comp = _composite_gain(beta_nf, beta_nif, epsilon, n_elements)
    return (2.0**r_bar - 1.0) * noise.sigma2 / comp


def total_power(
    scenario: ScenarioKind,
    p_tx: float,
    model: PowerModel,
    n_elements: float = 0,
) -> float:
    """Total consumed power: amplifier draw plus hardware dissipation.

    Donor link dissipates at donor + failed BS; healing links dissipate at
    neighbor + failed BS; the panel adds p_e per reflecting element.
    """
    if p_tx < 0:
        raise ValueError(f"transmit power must be >= 0, got {p_tx}")
    amplifier = p_tx / model.nu
    if scenario is ScenarioKind.DBS_FBS_LOS:
        return amplifier + model.p_d + model.p_f
    if scenario is ScenarioKind.NBS_FBS_NLOS:
        return amplifier + model.p_n + model.p_f
    if scenario is ScenarioKind.NBS_RIS_FBS:
        if n_elements < 0:
            raise ValueError(f"n_elements must be >= 0, got {n_elements}")
        return amplifier + model.p_n + model.p_f + n_elements * model.p_e
    raise ValueError(f"unknown scenario {scenario!r}")


def energy_efficiency(bandwidth_hz: float, rate: float, p_total: float) -> float:
    """Delivered bits per joule: bandwidth * rate / p_total."""
    if p_total <= 0:
        raise NonPositiveTotalPower(f"total power must be > 0, got {p_total}")
    if rate < 0:
        raise ValueError(f"rate must be >= 0, got {rate}")
    return bandwidth_hz * rate / p_total
