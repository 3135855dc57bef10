"""Exception and warning types raised across the package."""


class SiltlabError(Exception):
    """Base class for all package errors."""


class InconsistentSystem(SiltlabError, ArithmeticError):
    pass


class MalformedRelation(SiltlabError, ValueError):
    pass


class NotFiniteDimensional(SiltlabError):
    pass


class ShapeMismatch(SiltlabError, ValueError):
    pass


class AlgebraMismatch(SiltlabError, ValueError):
    pass


class NotChainMap(SiltlabError, ValueError):
    pass


class NotProjectiveTerms(SiltlabError, ValueError):
    pass


class NotPerfect(NotProjectiveTerms):
    pass


class DerivedFlagRejected(SiltlabError, ValueError):
    pass


class DecompositionFailure(SiltlabError):
    pass


class SupportOutOfRange(SiltlabError, ValueError):
    pass


class IndexOutOfRange(SiltlabError, ValueError):
    pass


class NotNSilting(SiltlabError, ValueError):
    pass


class NotTilting(SiltlabError, ValueError):
    pass


class NotInRepP(SiltlabError, ValueError):
    pass


class BudgetExceeded(SiltlabError):
    pass


class HypothesisUnmet(UserWarning):
    """Raised as a warning: a computation ran outside the range where two
    Ext/Hom engines are guaranteed to agree."""


class ExceedsCapError(SiltlabError):
    """A resolution needed more steps than the configured cap."""


class MalformedInput(SiltlabError, ValueError):
    """An input file does not follow the expected JSON layout."""
