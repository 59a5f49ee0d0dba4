"""Shared exception types."""


class VerificationError(RuntimeError):
    """A computed structure contradicts a property it is required to satisfy.

    Raised when a verification that is supposed to re-establish a known fact
    (orbit sizes, design parameters, distinctness of ovoid points, ...)
    fails.  This always indicates either an arithmetic bug or corrupted
    input, never a recoverable condition.
    """
