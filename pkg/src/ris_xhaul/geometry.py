"""Planar node geometry, urban-micro channel gains, and unit conversions.

All arithmetic downstream of this module happens in linear units (watts and
dimensionless power gains); dB/dBm appear only when values are constructed
from, or rendered to, the outside world.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from .errors import DistanceBelowModelFloor, NonPositiveLinearValue

# The urban-micro distance fits are not defined below this distance.
MODEL_FLOOR_M = 10.0

# Thermal noise density at 290 K.
NOISE_FLOOR_DBM_PER_HZ = -174.0

REFERENCE_CARRIER_HZ = 3e9


@dataclass(frozen=True)
class NodePosition:
    """Planar position in meters; the RIS lateral offset is a y displacement."""

    x: float
    y: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"coordinates must be finite, got ({self.x}, {self.y})")


@dataclass(frozen=True)
class PathLossParams:
    """Log-distance path-loss fit: gain[dB] falls off with slope per decade."""

    intercept_db: float
    slope_db_per_decade: float
    ref_distance: float = 1.0
    freq_offset_db: float = 0.0

    def __post_init__(self) -> None:
        if self.ref_distance <= 0:
            raise ValueError(f"ref_distance must be > 0, got {self.ref_distance}")
        if self.slope_db_per_decade <= 0:
            raise ValueError(
                f"slope_db_per_decade must be > 0, got {self.slope_db_per_decade}"
            )


# Urban-micro street-level fits at the 3 GHz reference carrier.
UMI_LOS = PathLossParams(intercept_db=37.5, slope_db_per_decade=22.0)
UMI_NLOS = PathLossParams(intercept_db=35.1, slope_db_per_decade=36.7)


@dataclass(frozen=True)
class AntennaGains:
    """Endpoint antenna gains in dBi (transmitter, receiver)."""

    gt: float = 5.0
    gr: float = 5.0

    def __post_init__(self) -> None:
        if not (math.isfinite(self.gt) and math.isfinite(self.gr)):
            raise ValueError(f"antenna gains must be finite, got ({self.gt}, {self.gr})")


@dataclass(frozen=True)
class ChannelGain:
    """Linear power gain of a link (dimensionless, strictly positive)."""

    beta: float

    def __post_init__(self) -> None:
        if not (self.beta > 0 and math.isfinite(self.beta)):
            raise NonPositiveLinearValue(
                f"channel gain must be a positive finite number, got {self.beta}"
            )

    @property
    def db(self) -> float:
        return to_db(self.beta)

    @property
    def amplitude(self) -> float:
        """Field amplitude sqrt(beta)."""
        return math.sqrt(self.beta)


@dataclass(frozen=True)
class NoisePower:
    """Receiver noise power in watts."""

    sigma2: float

    def __post_init__(self) -> None:
        if not (self.sigma2 > 0 and math.isfinite(self.sigma2)):
            raise NonPositiveLinearValue(
                f"noise power must be a positive finite number, got {self.sigma2}"
            )

    @property
    def dbm(self) -> float:
        return watts_to_dbm(self.sigma2)


def distance(a: NodePosition, b: NodePosition) -> float:
    """Euclidean distance between two nodes in meters."""
    return math.hypot(a.x - b.x, a.y - b.y)


def to_linear(value_db: float) -> float:
    """dB -> linear power ratio."""
    return 10.0 ** (value_db / 10.0)


def to_db(value: float) -> float:
    """Linear power ratio -> dB; rejects non-positive input."""
    if value <= 0 or not math.isfinite(value):
        raise NonPositiveLinearValue(f"cannot convert {value} to dB")
    return 10.0 * math.log10(value)


def dbm_to_watts(value_dbm: float) -> float:
    return 10.0 ** ((value_dbm - 30.0) / 10.0)


def watts_to_dbm(value_w: float) -> float:
    if value_w <= 0 or not math.isfinite(value_w):
        raise NonPositiveLinearValue(f"cannot convert {value_w} W to dBm")
    return 10.0 * math.log10(value_w) + 30.0


def carrier_offset_db(carrier_hz: float) -> float:
    """Uniform extra attenuation for carriers away from the 3 GHz reference.

    offset[dB] = 20*log10(f_c / 3 GHz); zero at the reference carrier.
    """
    if carrier_hz <= 0:
        raise ValueError(f"carrier frequency must be > 0, got {carrier_hz}")
    if carrier_hz == REFERENCE_CARRIER_HZ:
        return 0.0
    return 20.0 * math.log10(carrier_hz / REFERENCE_CARRIER_HZ)


def los_params(carrier_hz: float = REFERENCE_CARRIER_HZ) -> PathLossParams:
    """Line-of-sight fit with the carrier offset folded in."""
    return PathLossParams(
        intercept_db=UMI_LOS.intercept_db,
        slope_db_per_decade=UMI_LOS.slope_db_per_decade,
        ref_distance=UMI_LOS.ref_distance,
        freq_offset_db=carrier_offset_db(carrier_hz),
    )


def nlos_params(carrier_hz: float = REFERENCE_CARRIER_HZ) -> PathLossParams:
    """Non-line-of-sight fit with the carrier offset folded in."""
    return PathLossParams(
        intercept_db=UMI_NLOS.intercept_db,
        slope_db_per_decade=UMI_NLOS.slope_db_per_decade,
        ref_distance=UMI_NLOS.ref_distance,
        freq_offset_db=carrier_offset_db(carrier_hz),
    )


def path_loss_db(
    d: float,
    params: PathLossParams,
    gains: AntennaGains,
    allow_short_distance: bool = False,
) -> float:
    """Channel gain in dB at distance d.

    gain[dB] = gt + gr - intercept - slope*log10(d/d_ref) - freq_offset

    The fit is defined for d >= 10 m. Shorter distances raise
    DistanceBelowModelFloor unless allow_short_distance is set, in which case
    the fit is extrapolated and a warning is emitted.
    """
    if d < params.ref_distance or d <= 0:
        raise DistanceBelowModelFloor(
            f"distance {d} m is below the reference distance {params.ref_distance} m"
        )
    if d < MODEL_FLOOR_M:
        if not allow_short_distance:
            raise DistanceBelowModelFloor(
                f"distance {d} m is below the {MODEL_FLOOR_M} m model floor"
            )
        warnings.warn(
            f"extrapolating path loss below the {MODEL_FLOOR_M} m model floor (d={d} m)",
            stacklevel=2,
        )
    return (
        gains.gt
        + gains.gr
        - params.intercept_db
        - params.slope_db_per_decade * math.log10(d / params.ref_distance)
        - params.freq_offset_db
    )


def channel_gain(
    d: float,
    params: PathLossParams,
    gains: AntennaGains,
    allow_short_distance: bool = False,
) -> ChannelGain:
    """Linear channel gain at distance d (convenience wrapper)."""
    return ChannelGain(to_linear(path_loss_db(d, params, gains, allow_short_distance)))


def noise_power(bandwidth_hz: float, noise_figure_db: float) -> NoisePower:
    """Thermal noise power over a bandwidth, in watts.

    sigma2[dBm] = -174 + 10*log10(BW) + NF
    """
    if bandwidth_hz <= 0:
        raise ValueError(f"bandwidth must be > 0, got {bandwidth_hz}")
    dbm = NOISE_FLOOR_DBM_PER_HZ + 10.0 * math.log10(bandwidth_hz) + noise_figure_db
    return NoisePower(dbm_to_watts(dbm))
