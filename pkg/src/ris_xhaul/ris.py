"""Reflecting-panel state and coherent combining of direct + reflected paths.

The complex-valued machinery here exists to validate the phase-alignment rule;
scenario evaluation works with deterministic power gains and uses only
cascaded_gain.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import LengthMismatch
from .geometry import ChannelGain

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True, eq=False)
class ComplexChannel:
    """One complex coefficient per reflecting element; scalars have length 1."""

    values: np.ndarray

    def __post_init__(self) -> None:
        arr = np.atleast_1d(np.asarray(self.values, dtype=complex))
        if arr.ndim != 1:
            raise ValueError(f"channel must be one-dimensional, got shape {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise ValueError("channel entries must be finite")
        object.__setattr__(self, "values", arr)

    @classmethod
    def from_polar(cls, amplitudes, phases) -> "ComplexChannel":
        amp = np.asarray(amplitudes, dtype=float)
        ph = np.asarray(phases, dtype=float)
        if amp.shape != ph.shape:
            raise LengthMismatch(
                f"amplitudes ({amp.shape}) and phases ({ph.shape}) disagree"
            )
        if np.any(amp < 0):
            raise ValueError("amplitudes must be >= 0")
        return cls(amp * np.exp(1j * ph))

    @classmethod
    def scalar(cls, amplitude: float, phase: float = 0.0) -> "ComplexChannel":
        return cls.from_polar([amplitude], [phase])

    @property
    def amplitudes(self) -> np.ndarray:
        return np.abs(self.values)

    @property
    def phases(self) -> np.ndarray:
        return np.angle(self.values)

    def __len__(self) -> int:
        return self.values.size


@dataclass(frozen=True)
class RisPanel:
    """Panel of n_elements passive reflectors.

    epsilon is the common amplitude reflection coefficient in (0, 1]; phases
    are stored normalized to [0, 2*pi).
    """

    n_elements: int
    epsilon: float = 1.0
    phases: tuple = field(default=())

    def __post_init__(self) -> None:
        if self.n_elements < 0:
            raise ValueError(f"n_elements must be >= 0, got {self.n_elements}")
        if not (0.0 < self.epsilon <= 1.0):
            raise ValueError(f"epsilon must be in (0, 1], got {self.epsilon}")
        phases = tuple(float(p) % TWO_PI for p in self.phases)
        if len(phases) != self.n_elements:
            raise LengthMismatch(
                f"panel has {self.n_elements} elements but {len(phases)} phases"
            )
        object.__setattr__(self, "phases", phases)

    @classmethod
    def aligned(
        cls,
        h_nf: ComplexChannel,
        h_ni: ComplexChannel,
        h_if: ComplexChannel,
        epsilon: float = 1.0,
    ) -> "RisPanel":
        """Panel whose phases coherently combine the reflected path with h_nf."""
        phases = optimal_phases(h_nf, h_ni, h_if)
        return cls(n_elements=len(h_ni), epsilon=epsilon, phases=tuple(phases))


def _check_scalar(h_nf: ComplexChannel) -> complex:
    if len(h_nf) != 1:
        raise LengthMismatch(f"direct channel must be scalar, got length {len(h_nf)}")
    return complex(h_nf.values[0])


def optimal_phases(
    h_nf: ComplexChannel, h_ni: ComplexChannel, h_if: ComplexChannel
) -> np.ndarray:
    """Per-element phase shifts that align every reflected term with h_nf.

    phi_n = arg(h_nf) - arg(h_ni[n] * h_if[n]), normalized to [0, 2*pi).
    With these phases each summand of eps * sum e^{j phi_n} h_ni[n] h_if[n]
    carries the phase of the direct channel.
    """
    direct = _check_scalar(h_nf)
    if len(h_ni) != len(h_if):
        raise LengthMismatch(
            f"incident ({len(h_ni)}) and outgoing ({len(h_if)}) vectors disagree"
        )
    cascade = h_ni.values * h_if.values
    return np.mod(np.angle(direct) - np.angle(cascade), TWO_PI)


def combined_gain(
    h_nf: ComplexChannel,
    h_ni: ComplexChannel,
    h_if: ComplexChannel,
    panel: RisPanel,
) -> float:
    """Amplitude of the composite channel h_nf + eps * sum e^{j phi_n} h_ni[n] h_if[n]."""
    direct = _check_scalar(h_nf)
    if len(h_ni) != len(h_if):
        raise LengthMismatch(
            f"incident ({len(h_ni)}) and outgoing ({len(h_if)}) vectors disagree"
        )
    if len(h_ni) != panel.n_elements:
        raise LengthMismatch(
            f"channel vectors have {len(h_ni)} entries but panel has "
            f"{panel.n_elements} elements"
        )
    reflected = panel.epsilon * np.sum(
        np.exp(1j * np.asarray(panel.phases)) * h_ni.values * h_if.values
    )
    return float(abs(direct + reflected))


def cascaded_gain(beta_ni: ChannelGain, beta_if: ChannelGain) -> ChannelGain:
    """Two-hop power gain of the reflected path: the product of the hop gains.

    Both factors are far below one, so the product is severely small; this is
    the double-path-loss penalty a reflecting panel has to overcome with its
    element count.
    """
    return ChannelGain(beta_ni.beta * beta_if.beta)
