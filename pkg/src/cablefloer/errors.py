"""Exception types shared across the package."""


class CableFloerError(Exception):
    pass


class InvalidPolynomial(CableFloerError, ValueError):
    pass


class InvalidKnot(CableFloerError, ValueError):
    """Raised when an Alexander polynomial cannot belong to an L-space knot.

    ``constraint`` names the violated condition (``"coefficient"``,
    ``"alternating"``, ``"symmetric"``, ``"normalization"``, ...).
    """

    def __init__(self, constraint, message):
        super().__init__(f"{constraint}: {message}")
        self.constraint = constraint


class InvalidParameters(CableFloerError, ValueError):
    pass


class GradingError(CableFloerError, ValueError):
    pass


class UnsupportedRegime(CableFloerError):
    """The requested quantity has no closed form in this regime."""


class ChainComplexError(CableFloerError, ValueError):
    pass
