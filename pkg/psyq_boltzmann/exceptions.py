"""Exceptions raised by psyq_boltzmann."""


class PsyqError(Exception):
    """Base class for every error raised by this package."""


class ParseError(PsyqError):
    """Malformed psyquandle, weight or diagram text."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class TableShapeError(PsyqError):
    """An operation table is not n×n or holds an entry outside 0..n-1."""


class NotABiquandleError(PsyqError):
    """A pair of ▷-tables promoted to a psyquandle fails the axioms."""


class ParameterError(PsyqError):
    """Alexander psyquandle parameters are not units or violate t + s - a - b = 0."""


class OrderMismatchError(PsyqError):
    """A weight pair and a psyquandle have different orders."""


class IncidenceError(PsyqError):
    """A diagram code does not use each semiarc once as an incoming and once as an outgoing end."""


class UnknownDiagramError(PsyqError):
    """No built-in diagram of that name."""


class InvalidColoringError(PsyqError):
    """An assignment violates a crossing relation."""


class CompositeModulusError(PsyqError):
    """Reduced row echelon form requested over a non-field."""


class EnumerationCapExceeded(PsyqError):
    """Explicit enumeration of a solution set larger than the configured cap."""

    def __init__(self, count, cap):
        self.count = count
        self.cap = cap
        super().__init__(f"{count} solutions exceed the enumeration cap of {cap}")


class CompatibilityError(PsyqError):
    """Two-variable invariant requested for a weight pair that is not strongly compatible."""


class AdequacyError(PsyqError):
    """Pseudoknot invariant requested without pI-adequacy of the psyquandle or the weights."""


class AxiomError(PsyqError):
    """A psyquandle used for an invariant fails the axioms."""


class WeightError(PsyqError):
    """A weight pair used for an invariant fails the Boltzmann conditions."""
