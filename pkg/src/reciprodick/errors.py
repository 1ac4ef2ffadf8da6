"""Exception types shared across the library."""


class DomainError(ValueError):
    """An argument lies outside an operation's stated domain."""


class HypothesisError(DomainError):
    """A rule's hypothesis is violated; the message names the failed condition."""


class CapacityError(RuntimeError):
    """The input exceeds the supported desk-scale bounds."""
