"""Exception hierarchy shared by every module."""


class CompositionError(ValueError):
    """Base class for all domain errors raised by this package."""


class MalformedInputError(CompositionError):
    """Input text or a descent set that does not describe a valid object."""


class ParameterError(CompositionError):
    """A restriction or formula parameter violates its hypothesis."""


class PreconditionError(CompositionError):
    """An argument lies outside the domain of a bijection or formula."""


class EmptyCompositionError(PreconditionError):
    """The empty composition was given where a nonempty one is required."""
