"""Exceptions shared across the package.

Everything derives from ValueError so generic precondition failures and the
named domain errors can be caught together when callers do not care which.
"""


class SingularMatrixError(ValueError):
    """An exact linear solve or inversion hit a singular matrix."""


class DegenerateSimplexError(ValueError):
    """A vertex family is not affinely independent where independence is required."""


class NotVanishingError(ValueError):
    """A polynomial expected to vanish on a face hyperplane does not."""


class UnknownCheckError(ValueError):
    """A check id passed to the verification suite is not in the catalog."""
