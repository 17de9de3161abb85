"""Exception and warning types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ScopeError(DomainError):
    """The requested closed form does not cover this configuration."""


class DegenerateInputError(DomainError):
    """Inputs are degenerate (e.g. parallel channels) for this operation."""


class NumericalError(RuntimeError):
    """An iterative routine failed to converge to the requested accuracy."""


class ConfigError(ValueError):
    """A sweep configuration file is malformed; message is line-anchored."""


class NumericalQualityWarning(UserWarning):
    """A result needed more correction (e.g. clamping) than roundoff explains."""
