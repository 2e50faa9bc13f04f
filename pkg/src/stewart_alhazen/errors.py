"""Exception hierarchy shared by all modules."""


class StewartAlhazenError(Exception):
    """Base class for every error raised by this package."""


class DomainError(StewartAlhazenError, ValueError):
    """An argument lies outside the domain of the operation."""


class DegenerateConfiguration(StewartAlhazenError, ValueError):
    """The geometric configuration has no well-defined answer."""


class EmbeddingDegenerate(DegenerateConfiguration):
    """No mirror scenario realizes the requested Stewart parameter."""


class InvalidScenario(StewartAlhazenError, ValueError):
    """A mirror scenario violates its invariants (e.g. nonpositive radius)."""
