"""Shared exception types."""


class BiasLensError(Exception):
    """Base class for all package errors."""


class ValidationError(BiasLensError):
    """Input data violates a documented contract."""


class MissingUpstreamError(BiasLensError):
    """A pipeline stage was requested before its inputs exist."""


class StaleUpstreamError(BiasLensError):
    """A stored artifact was built from inputs that have since changed."""

    def __init__(self, stage: str, rebuild_command: str):
        super().__init__(
            f"stage '{stage}' is stale; rebuild with: {rebuild_command}"
        )
        self.stage = stage
        self.rebuild_command = rebuild_command


class ExternalServiceError(BiasLensError):
    """An external dependency (LLM endpoint) failed."""
