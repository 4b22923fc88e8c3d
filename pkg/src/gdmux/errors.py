"""Exception types shared across the package.

Every domain error derives from GdmError so callers (and the CLI) can
distinguish scheme/validation problems from programming errors.  Where a
builtin fits, it is mixed in, so ``except ValueError`` keeps working.
"""


class GdmError(Exception):
    """Base class for all multiplex-scheme errors."""


class NotPrimeError(GdmError, ValueError):
    """The requested field characteristic is not a prime."""


class EvenCharacteristicError(GdmError, ValueError):
    """p = 2 is rejected: the trig kernel divides by 2 and by 2j."""


class SpecMismatchError(GdmError, ValueError):
    """Operands belong to different fields."""


class NoSuchOrderError(GdmError, ValueError):
    """No element of the requested multiplicative order exists."""


class NotInvertibleError(GdmError, ZeroDivisionError):
    """Gaussian element with zero norm (zero, or a zero divisor)."""


class JNotEmbeddableError(GdmError, ValueError):
    """-1 has no square root mod p, so j cannot collapse to a residue."""


class KindMismatchError(GdmError, ValueError):
    """Fourier/Hartley kind of the argument does not fit the operation."""


class NotCoprimeError(GdmError, ValueError):
    """Coset multiplier shares a factor with the modulus."""


class FormulaInapplicableError(GdmError, ArithmeticError):
    """Closed-form coset count is not an integer here; enumerate instead."""


class NotBaseFieldError(GdmError, ValueError):
    """Values are not (derived from) prime-subfield symbols."""


class LeaderCountMismatchError(GdmError, ValueError):
    """Compressed frame length does not match the coset partition."""


class InternalInconsistencyError(GdmError):
    """A spectrum index would receive two conflicting values while
    expanding; indicates a partition or conjugacy-sign bug."""
