"""Exception types shared across the package."""


class Z4uError(Exception):
    """Base class for all library errors."""


class ZeroPolynomial(Z4uError):
    """Operation is undefined for the zero polynomial."""


class NonUnitLeadingCoefficient(Z4uError):
    """Division requires a divisor whose leading coefficient is a unit."""


class UnsupportedLength(Z4uError):
    """Code length is even, non-positive, or above the implementation cap."""


class NotAFactor(Z4uError):
    """Polynomial does not divide x^n - 1 over F2."""


class CapExceeded(Z4uError):
    """Enumeration grew past the configured codeword cap."""


class InvalidGenerators(Z4uError):
    """Generator tuple violates a structural requirement."""


class WrongForm(Z4uError):
    """Checker applied to the wrong generator form (single vs. double)."""


class TrivialCode(Z4uError):
    """Minimum distance is undefined for codes with fewer than two words."""


class LengthMismatch(Z4uError):
    """Words in a set must share one length."""


class BadAlphabet(Z4uError):
    """DNA string contains letters outside ACGT."""


class OddLength(Z4uError):
    """DNA string length must be even to decode into ring symbols."""
