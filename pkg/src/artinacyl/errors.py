"""Exception hierarchy shared by the whole package.

Every error carries enough context to produce the single-line
``ERR:<code>:`` diagnostics of the CLI, so the mapping from exception
class to exit code lives in one place (`exit_code`).
"""


class ArtinAcylError(Exception):
    """Base class for all package errors."""

    exit_code = 1


class GraphFormatError(ArtinAcylError):
    """Input document is malformed or violates graph invariants."""

    exit_code = 2

    def __init__(self, message, location=None):
        self.location = location
        if location is not None:
            message = f"{message} (at {location})"
        super().__init__(message)


class HypothesisError(ArtinAcylError):
    """A theorem hypothesis required by the requested operation fails."""

    exit_code = 3


class ResourceLimitError(ArtinAcylError):
    """A configured cap was hit before the computation finished.

    Never a wrong answer: callers either propagate this or report
    "inconclusive"; they must not fall back to a truncated result.
    """

    exit_code = 4


class InfiniteParabolicError(ResourceLimitError):
    """An oracle that needs a finite parabolic subgroup got an infinite one."""


class CertificateError(ArtinAcylError):
    """A certificate check failed."""

    exit_code = 5
