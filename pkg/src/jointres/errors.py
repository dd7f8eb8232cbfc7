"""Exception types shared across the library."""


class JointresError(Exception):
    """Base class for library errors."""


class AllZero(JointresError):
    """Every polynomial in a content/primitive extraction was zero."""


class NotInvertible(JointresError):
    """Residue shares a nonconstant factor with the modulus."""


class UnsupportedDegree(JointresError):
    """Numeric evaluation requires every modulus to be linear in t."""


class PoleAtSample(JointresError):
    """The sample point hits a pole or a zero of a root function."""


class TooLarge(JointresError):
    """Symbolic elimination size exceeds the practical guard."""


class DimensionMismatch(JointresError):
    """Number of specializations does not match the template size."""


class ParseError(JointresError):
    """Malformed input file."""


class ValidationError(JointresError):
    """Structurally valid input violating a semantic invariant."""
