"""Link-budget simulator for healing failed wireless X-haul links with a
reconfigurable intelligent surface: achievable rates, required and total
powers, energy efficiency, and the optimal reflecting-element count."""

__version__ = "0.1.0"

from .errors import (
    ConfigInvalid,
    DistanceBelowModelFloor,
    LengthMismatch,
    ModelDomainError,
    NonPositiveLinearValue,
    NonPositiveTotalPower,
    SearchBoundaryHit,
)
from .geometry import (
    AntennaGains,
    ChannelGain,
    NodePosition,
    NoisePower,
    PathLossParams,
    UMI_LOS,
    UMI_NLOS,
    channel_gain,
    distance,
    noise_power,
    path_loss_db,
    to_db,
    to_linear,
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
from .ris import ComplexChannel, RisPanel, cascaded_gain, combined_gain, optimal_phases
from .scenarios import (
    LinkGains,
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

__all__ = [
    "AntennaGains",
    "ChannelGain",
    "ComplexChannel",
    "ConfigInvalid",
    "DistanceBelowModelFloor",
    "LengthMismatch",
    "LinkGains",
    "ModelDomainError",
    "NodePosition",
    "NoisePower",
    "NonPositiveLinearValue",
    "NonPositiveTotalPower",
    "PathLossParams",
    "PowerModel",
    "RisPanel",
    "ScenarioConfig",
    "ScenarioKind",
    "SearchBoundaryHit",
    "SizingProblem",
    "SweepResult",
    "UMI_LOS",
    "UMI_NLOS",
    "brute_force_optimal",
    "build_links",
    "cascaded_gain",
    "channel_gain",
    "combined_gain",
    "distance",
    "energy_efficiency",
    "noise_power",
    "optimal_elements_int",
    "optimal_elements_real",
    "optimal_phases",
    "path_loss_db",
    "required_power_direct",
    "required_power_ris",
    "ris_rate",
    "shannon_rate",
    "sweep_ee",
    "sweep_position",
    "sweep_power",
    "to_db",
    "to_linear",
    "total_power",
]
