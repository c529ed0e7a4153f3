"""Exception hierarchy shared by the solvers and the CLI."""


class LocDomError(Exception):
    """Base class for every error raised by this package."""


class InputError(LocDomError, ValueError):
    """Malformed arguments or a violated precondition on the input digraph."""


class InfeasibleSizeError(LocDomError):
    """Instance too large for an exhaustive search."""


class DomainError(LocDomError):
    """The instance lies outside the class an algorithm handles."""


class HypothesisError(DomainError):
    """A structural hypothesis (twin-freeness, ...) fails on the instance."""


class GenerationError(LocDomError):
    """A rejection-sampling generator ran out of retries."""


class InternalInconsistencyError(LocDomError, AssertionError):
    """A property guaranteed by the construction failed to hold."""


class StructuralAssertionError(InternalInconsistencyError):
    """A decomposition did not satisfy its defining properties."""


class ParseError(LocDomError, ValueError):
    """An instance file does not follow the ``n`` / ``u v`` line format."""
