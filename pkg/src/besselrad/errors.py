"""Exception types shared across the package."""


class BesselradError(Exception):
    """Base class for all package errors."""


class AdmissibilityError(BesselradError, ValueError):
    """Parameter tuple violates the admissibility conditions."""


class DomainError(BesselradError, ValueError):
    """Evaluation requested at a point where the quantity is singular."""


class NonConvergent(BesselradError):
    """Power series did not meet the tolerance within the term budget.

    Signals |z| too large for series-mode evaluation at this precision.
    """


class SingularPoint(BesselradError):
    """A denominator underflowed the configured singularity threshold."""


class BracketFailure(BesselradError):
    """Root bracket endpoints did not have the expected signs."""


class ScanExhausted(BesselradError):
    """Requested zeros were not found before the scan limit."""


class BranchCut(BesselradError):
    """An intermediate principal-branch argument hit a branch cut."""
