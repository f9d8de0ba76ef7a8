"""Exception hierarchy shared by all germglue modules."""


class GermAlgebraError(Exception):
    """Base class for every error raised by this package."""


class PolynomialParseError(GermAlgebraError):
    """Malformed polynomial or workspace text."""


class DimensionMismatchError(GermAlgebraError):
    """Operands defined over different ambient variable lists."""


class NotAGermError(GermAlgebraError):
    """A presentation that does not define a germ at the origin."""


class PreconditionError(GermAlgebraError):
    """An operation was called outside its stated hypotheses."""


class DegenerateGluingError(PreconditionError):
    """Gluing datum where one of the surjections is injective (source equals target)."""


class LiftError(PreconditionError):
    """No polynomial preimage could be produced for a required lift."""


class ResourceLimitError(GermAlgebraError):
    """Reduction step cap exceeded; raise instead of risking non-termination."""


class SeriesQuotientError(GermAlgebraError):
    """Series division whose valuations do not permit a power-series quotient."""


class InternalCheckError(GermAlgebraError):
    """Two independent internal computations of the same fact disagreed."""
