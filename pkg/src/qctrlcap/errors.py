"""Exception types shared across the package."""


class QctrlcapError(Exception):
    """Base class for all package-specific errors."""


class NotAState(QctrlcapError):
    """The given (y, z) parameters do not describe a physical density matrix."""


class ChannelNotTracePreserving(QctrlcapError):
    """Kraus operators violate the completeness relation a1'a1 + a2'a2 = 1."""


class DomainError(QctrlcapError, ValueError):
    """Argument outside the mathematical domain of the operation."""


class DegenerateChannel(QctrlcapError):
    """Channel parameters make the analytic controller inversion singular."""


class OptimizerStalled(QctrlcapError):
    """Deterministic optimizer restarts disagree beyond tolerance."""


class NonPhysicalInput(QctrlcapError):
    """Covariance matrix fails the uncertainty-relation physicality check."""


class NonPositiveInput(QctrlcapError):
    """Matrix argument is not positive definite."""


class InsufficientData(QctrlcapError):
    """Too few usable records for the requested fit."""


class SingularDesign(QctrlcapError):
    """Fit design matrix is rank deficient (e.g. all capacities equal)."""


class EmptyWindow(QctrlcapError):
    """No record falls inside the requested fitting-error window."""
