class CQFTError(Exception):
    pass


class InvalidAxis(CQFTError, ValueError):
    """The requested transform axis is not a complexified quaternion root of -1."""


class DegenerateBasis(CQFTError, ArithmeticError):
    """No non-null projection was found while completing an orthonormal basis."""


class DegenerateAxisMisuse(CQFTError, ValueError):
    """The degenerate axis I was used on a signal that has a vector part."""
