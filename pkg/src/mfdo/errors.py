"""Exception types shared across the package."""


class MfdoError(Exception):
    """Base class for all domain errors raised by this package."""


class NotEigenvector(MfdoError):
    """An operator did not act by a scalar on a sampled isotypic vector.

    This signals a wrong oracle instance, a wrong operator, or a wrong
    highest weight vector choice.
    """


class InsufficientSamples(MfdoError):
    """The sample set is too small or not a full grid, so the
    interpolating polynomial is not determined."""


class NotDegreeZero(MfdoError):
    """The operation is only defined on elements of degree zero."""


class FormulaUnavailable(MfdoError):
    """No closed Bernstein-Sato formula is known for this catalog entry."""


class UnknownEntry(MfdoError):
    """Catalog lookup failed: unknown name or out of range parameters."""


class ParameterMismatch(MfdoError):
    """The element's coefficient ring, u polynomial or weight does not
    match the target space."""
