"""Exception hierarchy shared by every coalgraph module."""


class CoalgraphError(Exception):
    """Base class for all errors raised by coalgraph."""


class InvalidFunction(CoalgraphError):
    pass


class DomainMismatch(CoalgraphError):
    pass


class CodomainMismatch(CoalgraphError):
    pass


class SizeGuardExceeded(CoalgraphError):
    """An enumeration would produce more candidates than the configured bound."""

    def __init__(self, what, size, limit):
        super().__init__(f"{what}: {size} candidates exceed guard {limit}")
        self.what = what
        self.size = size
        self.limit = limit


class IllTypedElement(CoalgraphError):
    pass


class SpecOutOfRange(CoalgraphError):
    pass


class FunctorMismatch(CoalgraphError):
    pass


class NotParallel(CoalgraphError):
    pass


class ColorSetMismatch(CoalgraphError):
    pass


class ParseError(CoalgraphError):
    """Malformed document; ``where`` names the offending field or line."""

    def __init__(self, message, where=None):
        super().__init__(f"{where}: {message}" if where else message)
        self.where = where


class ValidationError(CoalgraphError):
    def __init__(self, violations):
        super().__init__("; ".join(violations))
        self.violations = list(violations)


class UnsupportedFunctorForDot(CoalgraphError):
    pass
