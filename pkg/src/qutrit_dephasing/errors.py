"""Exception types shared across the package."""


class InvariantViolation(RuntimeError):
    """A physical invariant (Hermiticity, trace, positivity, or cross-check
    agreement) failed beyond its tolerance. This always signals a bug or an
    inconsistent input, never expected numerical noise."""


class ConfigError(ValueError):
    """A scenario configuration is missing, malformed, or inconsistent."""
