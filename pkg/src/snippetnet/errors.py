"""Exception types shared across the package."""


class SnippetNetError(Exception):
    """Base class for every error raised by this package."""


class EmptyPhrase(SnippetNetError):
    """A query phrase was missing or blank after trimming."""


class BudgetExhausted(SnippetNetError):
    """The per-day query budget is spent; only cached queries can be served."""


class BackendError(SnippetNetError):
    """A search backend failed to produce a result."""

    def __init__(self, message: str, retryable: bool = False):
        super().__init__(message)
        self.retryable = retryable


class MalformedUrl(SnippetNetError):
    """A URL could not be split into scheme, host labels, and path segments."""


class SelfPair(SnippetNetError):
    """Relation detection was asked to pair an actor with itself."""


class NotDetected(SnippetNetError):
    """Strength was requested for a pair that failed relation detection."""


class EmptyKeyword(SnippetNetError):
    """A keyword-augmented score was requested with a blank keyword."""


class MissingScore(SnippetNetError):
    """A detected pair reached network assembly without a strength score."""


class CorpusError(SnippetNetError):
    """A fixture corpus file is malformed or violates ordering rules."""


class ConfigError(SnippetNetError):
    """Run configuration is invalid or references unusable inputs."""
