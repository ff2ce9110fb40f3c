"""Optimal reflecting-element count for a target rate.

The total power for the panel-assisted scenario,

    P_tot(N) = p(N)/nu + P_N + P_F + N*p_e,
    p(N)     = (2^r - 1) * sigma2 / (sqrt(beta_nf) + eps*N*sqrt(beta_nif))^2,

is convex in N, so the integer optimum is the floor or ceiling of the
continuous stationary point (or zero when the panel never pays off). Setting
dP_tot/dN = 0 gives the closed form

    N* = cbrt(2*(2^r - 1)*sigma2 / (nu * eps^2 * beta_nif * p_e))
         - sqrt(beta_nf / beta_nif) / eps

which treats beta_nif as independent of N (true for line-of-sight hops).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import SearchBoundaryHit
from .geometry import ChannelGain, NoisePower
from .link_budget import PowerModel, ScenarioKind, required_power_ris, total_power


@dataclass(frozen=True)
class SizingProblem:
    """Inputs of the element-count optimization.

    p_e and nu mirror the power model of the deployment being sized; build via
    from_power_model to keep them consistent.
    """

    r_bar: float
    noise: NoisePower
    epsilon: float
    beta_nf: ChannelGain
    beta_nif: ChannelGain
    p_e: float
    nu: float = 0.5

    def __post_init__(self) -> None:
        if self.r_bar < 0:
            raise ValueError(f"target rate must be >= 0, got {self.r_bar}")
        if self.p_e <= 0:
            raise ValueError(f"per-element power must be > 0, got {self.p_e}")
        if not (0.0 < self.epsilon <= 1.0):
            raise ValueError(f"epsilon must be in (0, 1], got {self.epsilon}")
        if not (0.0 < self.nu <= 1.0):
            raise ValueError(f"amplifier efficiency must be in (0, 1], got {self.nu}")

    @classmethod
    def from_power_model(
        cls,
        r_bar: float,
        noise: NoisePower,
        epsilon: float,
        beta_nf: ChannelGain,
        beta_nif: ChannelGain,
        model: PowerModel,
    ) -> "SizingProblem":
        return cls(
            r_bar=r_bar,
            noise=noise,
            epsilon=epsilon,
            beta_nf=beta_nf,
            beta_nif=beta_nif,
            p_e=model.p_e,
            nu=model.nu,
        )


def optimal_elements_real(prob: SizingProblem) -> float:
    """Continuous stationary point of P_tot(N), clamped below at zero.

    A non-positive root means the direct healing link is already the cheaper
    option, i.e. use no panel.
    """
    gain = (2.0**prob.r_bar - 1.0) * prob.noise.sigma2
    cube = 2.0 * gain / (prob.nu * prob.epsilon**2 * prob.beta_nif.beta * prob.p_e)
    correction = math.sqrt(prob.beta_nf.beta / prob.beta_nif.beta) / prob.epsilon
    return max(0.0, cube ** (1.0 / 3.0) - correction)


def _total_power_at(prob: SizingProblem, model: PowerModel, n: float) -> float:
    p = required_power_ris(
        prob.r_bar, prob.beta_nf, prob.beta_nif, prob.epsilon, n, prob.noise
    )
    return total_power(ScenarioKind.NBS_RIS_FBS, p, model, n)


def optimal_elements_int(prob: SizingProblem, model: PowerModel) -> int:
    """Integer element count minimizing total power.

    Evaluates P_tot at 0, floor(N*), and ceil(N*); convexity guarantees the
    global integer optimum is among them. Ties break toward fewer elements.
    """
    n_real = optimal_elements_real(prob)
    candidates = sorted({0, math.floor(n_real), math.ceil(n_real)})
    best_n, best_p = 0, math.inf
    for n in candidates:
        p_tot = _total_power_at(prob, model, n)
        if p_tot < best_p:
            best_n, best_p = n, p_tot
    return best_n


def brute_force_optimal(
    prob: SizingProblem, model: PowerModel, n_max: int = 100_000
) -> int:
    """Exhaustive argmin of P_tot over N in {0, ..., n_max}; validation oracle.

    Raises SearchBoundaryHit when the minimum sits on the n_max boundary,
    which means the search window was too small to bracket the optimum.
    """
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    n = np.arange(0, n_max + 1, dtype=float)
    gain = (2.0**prob.r_bar - 1.0) * prob.noise.sigma2
    composite = (
        prob.beta_nf.amplitude + prob.epsilon * n * prob.beta_nif.amplitude
    ) ** 2
    p_tot = gain / composite / model.nu + model.p_n + model.p_f + n * model.p_e
    best = int(np.argmin(p_tot))
    if best == n_max:
        raise SearchBoundaryHit(f"optimum not bracketed by n_max={n_max}")
    return best
