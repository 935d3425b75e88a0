"""Domain errors shared across the package.

Every error carries a machine-readable ``reason`` tag; the HTTP layer maps
reasons to status codes and puts the tag in error bodies.
"""


class PortalError(Exception):
    """Base class for all domain errors."""

    reason = "error"

    def __init__(self, message: str = ""):
        super().__init__(message or self.reason)
        self.message = message or self.reason


class InvalidParameterError(PortalError):
    reason = "invalid-parameter"


class DisconnectedGraphError(PortalError):
    reason = "disconnected-graph"


class SizeLimitExceededError(PortalError):
    reason = "size-limit-exceeded"


class ParseError(PortalError):
    reason = "parse-error"

    def __init__(self, message: str, line: int, tag: str = ""):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.tag = tag


class UnknownTermError(PortalError):
    reason = "unknown-term"


class UnknownPageError(PortalError):
    reason = "unknown-page"


class UnknownStudentError(PortalError):
    reason = "unknown-student"


class UnknownSubmissionError(PortalError):
    reason = "unknown-submission"


class InvalidGradeError(PortalError):
    reason = "invalid-grade"


class NoRelevantGradesError(PortalError):
    reason = "no-relevant-grades"


class InvalidPercentagesError(PortalError):
    reason = "invalid-percentages"


class IllegalTransitionError(PortalError):
    reason = "illegal-transition"


class ForbiddenRoleError(PortalError):
    reason = "forbidden-role"


class ValidationFailedError(PortalError):
    reason = "validation-failed"

    def __init__(self, message: str, findings=None):
        super().__init__(message)
        self.findings = list(findings or [])
