"""Exception hierarchy shared by every module.

Exit-code mapping for the CLI lives in cli.py: verification failures are 1,
usage errors 2, resource/precision limits 3.
"""

from __future__ import annotations


class PrigidError(Exception):
    """Base class for all errors raised by this package."""


class UsageError(PrigidError):
    """Malformed input, unsupported request, or violated precondition."""


class OutOfScopeError(UsageError):
    """Input is well-formed but outside the supported fragment."""


class ResourceBoundError(PrigidError):
    """A configured bound (order, depth, degree) would be exceeded.

    The message always names the bound so callers can decide whether to
    re-run with a larger one.
    """


class PrecisionError(ResourceBoundError):
    """An exact decision would need more series coefficients than stored."""


class VerificationError(PrigidError):
    """An internal consistency check or a replayed check failed."""
