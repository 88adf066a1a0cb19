"""Exception hierarchy for derivlab.

Each error class corresponds to one refusal mode of the public API; the
operations raise rather than silently truncating or extrapolating.
"""


class DerivlabError(Exception):
    """Base class for all derivlab errors."""


class GridMismatchError(DerivlabError):
    """Two elements were combined but live on different grids."""


class TailError(DerivlabError):
    """An evaluation beyond the grid was requested that the tail
    descriptor cannot supply (or an atom/support escapes the grid)."""


class DomainError(DerivlabError):
    """An argument is outside the domain an operation supports."""


class ExtrapolationError(DerivlabError):
    """A tabulated weight was queried beyond its table."""


class SupportOverflowError(DerivlabError):
    """Supports of convolution factors add up beyond the grid end."""


class WindowOverflowError(DerivlabError):
    """A unit window [t, t+1] does not fit inside the grid."""


class HypothesisViolatedError(DerivlabError):
    """The hypothesis of the result a check mechanizes does not hold
    for the given inputs, so the check refuses to run."""


class UnknownEntryError(DerivlabError):
    """Catalog lookup with an id that does not exist."""


class InvalidParamsError(DerivlabError):
    """Catalog or constructor parameters violate their constraints."""


class ConfigError(DerivlabError):
    """A run configuration file or override could not be parsed."""
