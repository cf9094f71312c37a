"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class SpectrumError(Exception):
    """Base class for every error raised by :mod:`sncspectrum`."""


class FracPolyParseError(SpectrumError, ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at offset {position})")
        self.position = position


class NonIntegerExponentAtGeneralPoint(SpectrumError, ValueError):
    pass


class InvalidHodgeData(SpectrumError, ValueError):
    pass


class NegativeHodgeNumber(InvalidHodgeData):
    pass


class DimensionMismatch(SpectrumError, ValueError):
    pass


class SpecParseError(SpectrumError, ValueError):
    """Malformed input document; ``location`` is a JSON path or line:column."""

    def __init__(self, message: str, location: str = ""):
        super().__init__(f"{location}: {message}" if location else message)
        self.location = location


class InvalidSpec(SpectrumError, ValueError):
    def __init__(self, violations):
        self.violations = list(violations)
        lines = "; ".join(str(v) for v in self.violations)
        super().__init__(f"invalid SNC pair spec: {lines}")


class NonReducedDivisor(SpectrumError, ValueError):
    pass


class NegativeIrregularNumber(SpectrumError, ValueError):
    pass


class ShapeMismatch(SpectrumError, ValueError):
    pass


class IdentityFailure(SpectrumError):
    """Two independent derivations of the same polynomial disagree."""

    def __init__(self, message: str, left, right):
        super().__init__(f"{message}: {left} != {right}")
        self.left = left
        self.right = right


class FormMismatch(IdentityFailure):
    pass


class InternalIdentityFailure(IdentityFailure):
    pass
