"""Exception hierarchy shared by the engine and its algebra instances.

Everything derives from FusionError so callers can catch one type; the
concrete subclasses distinguish bad labels, bad numeric parameters, malformed
partitions, subrings that are not closed, and blown resource caps.
"""


class FusionError(Exception):
    """Base class for all errors raised by this package."""


class LabelDomainError(FusionError, ValueError):
    """A label is unknown to the datum, malformed, or from the wrong algebra."""


class DomainError(FusionError, ValueError):
    """A numeric parameter (level, rank, residue, ...) is outside its domain."""


class ArityError(FusionError, ValueError):
    """An operation received fewer (or more) modules than it supports."""


class PartitionError(FusionError, ValueError):
    """An F-curve specification does not partition the marked-point set into four blocks."""


class ClosureError(FusionError, ValueError):
    """A purported subring is not closed under duals and fusion."""


class PreconditionError(FusionError, ValueError):
    """A closed-form operation was called outside its standing hypotheses."""


class ConfigurationError(FusionError, ValueError):
    """A pairing map or similar configuration object is incomplete or inconsistent."""


class ResourceLimitError(FusionError, RuntimeError):
    """An enumeration would exceed the configured size cap."""
