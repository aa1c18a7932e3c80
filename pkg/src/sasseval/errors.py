"""Exception taxonomy shared across the toolkit.

Every error raised on purpose derives from :class:`SassevalError` so callers
can catch the whole family at the CLI boundary.
"""

from __future__ import annotations


class SassevalError(Exception):
    """Base class for all toolkit errors."""


class DegenerateDocument(SassevalError):
    """Text has no word tokens; surface metrics are undefined."""


class MissingResource(SassevalError):
    """A lexicon or table file does not exist or cannot be read."""


class MalformedResource(SassevalError):
    """A resource file exists but its content violates the format."""


class MalformedRecord(SassevalError):
    """A corpus or annotation record violates its schema."""

    def __init__(self, line_no: int, field: str, message: str = ""):
        self.line_no = line_no
        self.field = field
        detail = f"line {line_no}, field '{field}'"
        if message:
            detail += f": {message}"
        super().__init__(detail)


class DuplicateId(SassevalError):
    """Two corpus records share the same id."""


class InsufficientData(SassevalError):
    """Fewer observations than the operation requires."""


class InvalidGrade(SassevalError):
    """Annotation grade outside the Good/Acceptable/Poor rubric."""


class LengthMismatch(SassevalError):
    """Paired samples have different lengths."""


class DegenerateVariance(SassevalError):
    """Paired differences have zero variance but a nonzero mean."""


class EmptyFamily(SassevalError):
    """Multiple-comparison correction called with no p-values."""


class ProviderUnavailable(SassevalError):
    """The embedding provider could not serve the request."""


class ProviderMismatch(SassevalError):
    """Candidate and reference embeddings come from different providers or layers."""


class TextTooLong(SassevalError):
    """Text exceeds the embedding provider's context window."""


class NotJson(SassevalError):
    """Simplifier payload is not a JSON object."""


class MissingKey(SassevalError):
    """Simplifier payload lacks the required key."""


class NestedStructure(SassevalError):
    """Simplifier payload contains nested values; the contract is a flat object."""


class NonStringValue(SassevalError):
    """Simplifier payload key maps to a non-string value."""


class MissingOutput(SassevalError):
    """Some test records have no system output."""

    def __init__(self, missing_ids):
        self.missing_ids = tuple(missing_ids)
        super().__init__(f"missing outputs for {len(self.missing_ids)} record(s): "
                         + ", ".join(self.missing_ids[:10])
                         + ("..." if len(self.missing_ids) > 10 else ""))


class EndpointError(SassevalError):
    """Simplifier endpoint failed after all retry attempts."""

    def __init__(self, message: str, last_payload=None):
        self.last_payload = last_payload
        super().__init__(message)


class BatchEvaluationError(SassevalError):
    """One or more records failed during batch evaluation."""

    def __init__(self, failures: dict):
        self.failures = dict(failures)
        lines = "; ".join(f"{rid}: {msg}" for rid, msg in list(self.failures.items())[:5])
        super().__init__(f"{len(self.failures)} record(s) failed: {lines}")
