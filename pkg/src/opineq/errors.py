"""Exception taxonomy shared by all opineq modules."""


class OpineqError(Exception):
    """Base class for every error raised by this package."""


class SizeLimit(OpineqError):
    """Matrix or flattened-operator dimension exceeds the supported cap."""


class NonHermitianInput(OpineqError):
    """Input matrix fails the Hermitian-symmetry tolerance."""


class ConvergenceFailure(OpineqError):
    """An iterative decomposition did not converge."""


class NotPositiveDefinite(OpineqError):
    """Log or fractional power requested for a non positive definite matrix."""


class DomainError(OpineqError):
    """A scalar map is undefined or non-finite at a required point."""


class PoleError(DomainError):
    """Gamma function evaluated at (or too close to) a pole."""


class SingularMatrix(OpineqError):
    """Matrix is numerically singular where an inverse is required."""


class ShapeMismatch(OpineqError):
    """Operand shapes are incompatible."""


class InvalidParameter(OpineqError):
    """Scalar parameter outside its admissible range."""


class UnknownFunction(OpineqError):
    """Function identifier not present in the catalog."""


class UnknownCase(OpineqError):
    """Inequality case identifier not present in the registry."""


class SignatureMismatch(OpineqError):
    """Supplied inputs do not match the case input signature."""


class NoWitness(OpineqError):
    """Equality audit requested for a case without an equality witness."""
