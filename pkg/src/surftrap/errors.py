"""Exception types shared across the package."""


class SurftrapError(Exception):
    """Base class for all library errors."""


class DomainError(SurftrapError, ValueError):
    """State outside the physical domain (e.g. at or below the electrode plane)."""


class ValidationError(SurftrapError, ValueError):
    """Invalid parameters, configuration or preconditions."""


class UnstableModeError(SurftrapError, ValueError):
    """A linearized mode falls outside the stability region."""
