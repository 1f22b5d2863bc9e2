"""Exception hierarchy for sasroots."""


class SasrootsError(Exception):
    """Base class for all sasroots errors."""


# --- interval layer ---

class DivisionByZeroInterval(SasrootsError):
    """Division by an interval containing zero."""


class NonFiniteInterval(SasrootsError):
    """Operation requires finite interval bounds."""


class SingularMatrix(SasrootsError):
    """Point matrix inversion found no usable pivot."""


class DimensionMismatch(SasrootsError):
    """Operand dimensions do not agree."""


# --- polynomial / system layer ---

class ZeroPolynomial(SasrootsError):
    """A polynomial required to be nonzero is identically zero."""


class NonSquareSystem(SasrootsError):
    """Equation count does not match variable count."""


# --- certification layer ---

class SingularJacobian(SasrootsError):
    """Jacobian numerically singular at the evaluation point."""


class NegativeDenominator(SasrootsError):
    """Rejection-radius denominator is nonpositive; radius unusable."""


class KantorovichFailed(SasrootsError):
    """Convergence-ball construction failed (h > 1/2 after all shrinks)."""


class SingularMidpointJacobian(SasrootsError):
    """Midpoint of the interval Jacobian is numerically singular."""


class MaxBisectionsExceeded(SasrootsError):
    """Per-root bisection budget exhausted without a certificate."""


# --- semi-algebraic layer ---

class DimensionTooSmall(SasrootsError):
    """Projection requires dimension >= 2."""


class SignUndecidable(SasrootsError):
    """Sign determination could not certify either outcome."""


# --- transcendental layer ---

class AllBoxesExcluded(SasrootsError):
    """Interval narrowing proved the starting bounds contain no root."""


class OrderCapExceeded(SasrootsError):
    """No Taylor order within the cap meets the error budget."""


class NoConvergedRoots(SasrootsError):
    """Transcendental solve produced no verified points."""


# --- input layer ---

class SystemSyntaxError(SasrootsError):
    """Malformed system file; carries line/column information."""

    def __init__(self, message, line=None, column=None):
        if line is not None:
            loc = f"line {line}" + (f", col {column}" if column is not None else "")
            message = f"{loc}: {message}"
        super().__init__(message)
        self.line = line
        self.column = column


class UnknownVariable(SystemSyntaxError):
    """Expression uses a variable not declared in vars:."""


class ReservedVariableName(SystemSyntaxError):
    """User input uses the internally reserved augmentation variable."""
