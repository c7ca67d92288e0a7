"""Error taxonomy shared across the package.

Exit-code mapping used by the CLI: input/validation problems are exit 2,
capacity refusals are exit 3, suite failures are exit 1.
"""


class RadlieError(Exception):
    """Base class for all package errors."""


class InputError(RadlieError):
    """Malformed input: bad documents, dimension mismatches, unknown ids."""


class ValidationError(InputError):
    """A structure-constant table fails a structural law (e.g. Jacobi)."""

    def __init__(self, message, triple=None):
        super().__init__(message)
        self.triple = triple


class CapacityError(RadlieError):
    """A computation was refused because it exceeds a configured cap."""

    def __init__(self, cap_name, needed, cap):
        super().__init__(
            f"capacity exceeded: {cap_name} requires {needed} > cap {cap}"
        )
        self.cap_name = cap_name
        self.needed = needed
        self.cap = cap


class RegimeError(RadlieError):
    """The requested computation has no supported regime for this input."""


class HintError(RadlieError):
    """A supplied hint failed its verification checks."""
