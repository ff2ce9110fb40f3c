"""Exception types shared across the package.

Everything raised by the channel/power model derives from ModelDomainError so
the CLI can map model-domain failures to a single exit code; configuration
problems are reported separately via ConfigInvalid.
"""


class ModelDomainError(ValueError):
    """An input left the domain where the channel/power model is defined."""


class DistanceBelowModelFloor(ModelDomainError):
    """Link distance below the 10 m floor of the urban-micro path-loss fit."""


class NonPositiveLinearValue(ModelDomainError):
    """A linear power/gain quantity that must be > 0 was zero or negative."""


class LengthMismatch(ModelDomainError):
    """Per-element channel vectors (or panel size) disagree in length."""


class NonPositiveTotalPower(ModelDomainError):
    """Energy efficiency requested with a non-positive total power."""


class SearchBoundaryHit(ModelDomainError):
    """Brute-force element search ended on its upper bound; raise n_max."""


class ConfigInvalid(ValueError):
    """A configuration file or CLI override failed validation.

    The message always names the offending field.
    """
