"""Exception types shared across the package."""


class ZidentError(Exception):
    """Base class for all package errors."""


class ParseError(ZidentError):
    """Malformed numeric or argument input."""


class DomainError(ZidentError):
    """Argument outside the mathematical domain of an operation."""


class ValidityError(DomainError):
    """Operation invoked outside its region of validity (e.g. modulus too big)."""


class PoleError(DomainError):
    """Evaluation exactly at a pole.  Carries the pole location and residue."""

    def __init__(self, msg, location=None, residue=None):
        super().__init__(msg)
        self.location = location
        self.residue = residue


class PrecisionError(ZidentError):
    """Requested accuracy could not be certified."""
