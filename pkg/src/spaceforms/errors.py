"""Exception types shared across the package."""


class SpaceformsError(Exception):
    """Base class for all package errors."""


class ConductorMismatch(SpaceformsError):
    """Operands live in cyclotomic fields with different conductors."""


class NotADivisor(SpaceformsError):
    """Requested root order / conductor does not divide the target conductor."""


class DivisionByZero(SpaceformsError, ZeroDivisionError):
    """Division by the zero field element."""


class CapExceeded(SpaceformsError):
    """Closure grew past the configured element cap (group infinite or too large)."""


class ConstraintViolated(SpaceformsError):
    """A family builder precondition failed; the message names the condition."""


class NotAMember(SpaceformsError):
    """Element is not contained in the group it was queried against."""


class Unrecognized(SpaceformsError):
    """Input is not a finite subgroup of the unit quaternions (upstream bug)."""


class NotFreeAction(SpaceformsError):
    """The group does not act freely on the 3-sphere.

    Carries the witness pair when one is known.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotElliptic(SpaceformsError):
    """No classification case matches (malformed or non-free input)."""


class NotARotation(SpaceformsError):
    """Matrix is not special orthogonal within tolerance."""


class DegenerateFrame(SpaceformsError):
    """Failed to build an orthonormal contact frame (should never fire on S^3)."""


class ParseError(SpaceformsError):
    """Manifest text is not valid JSON."""


class ValidationError(SpaceformsError):
    """Manifest JSON violates an invariant; the message names it."""
