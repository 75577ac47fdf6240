"""Exception and warning classes."""


class FFSError(ValueError):
    """Base class for all errors raised by this package."""


class InvalidPeriod(FFSError):
    pass


class LengthMismatch(FFSError):
    pass


class NonFinite(FFSError):
    pass


class InvalidOrder(FFSError):
    """Negative fractional order (fractional integration is not supported)."""


class DegenerateGrid(FFSError):
    """Fewer than two samples per period."""


class NonOrthogonal(FFSError):
    pass


class NonPositiveHarmonic(FFSError):
    pass


class BasisTagMismatch(FFSError):
    """A coefficient set is tagged with a basis the operation cannot accept."""


class SingularDC(FFSError):
    """The constant coefficient cannot be recovered because cos(pi*alpha/2) == 0."""


class NyquistViolation(FFSError):
    pass


class UnsupportedKind(FFSError):
    pass


class MalformedInput(FFSError):
    """A file on disk does not follow its declared format."""


class DCUndeterminedWarning(UserWarning):
    """a0 was set to 0 because it is not identifiable at odd integer alpha."""
