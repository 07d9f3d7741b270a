"""Exception hierarchy; every error knows the CLI exit code it maps to."""


class ApolarError(Exception):
    exit_code: int = 1


class UsageError(ApolarError):
    exit_code = 1


class CeilingExceededError(ApolarError):
    """A configured resource ceiling would be exceeded; nothing is truncated."""
    exit_code = 2

    def __init__(self, what: str, needed: int, ceiling: int):
        super().__init__(f"ceiling: {what} needs {needed}, limit is {ceiling}")
        self.what = what
        self.needed = needed
        self.ceiling = ceiling


class VerificationError(ApolarError):
    exit_code = 3


class RingMismatchError(ApolarError, ValueError):
    pass


class GridMismatchError(ApolarError, ValueError):
    pass


class DegreeMismatchError(ApolarError, ValueError):
    pass


class InhomogeneousFormError(ApolarError, ValueError):
    pass


class ZeroDivisorError(ApolarError, ValueError):
    pass


class CandidateError(VerificationError):
    """A proposed generator does not annihilate the form."""

    def __init__(self, index: int, residue: str):
        super().__init__(f"candidate #{index} does not annihilate the form (residue {residue})")
        self.index = index
        self.residue = residue


class UncertifiedDegreeError(ApolarError, ValueError):
    pass


class MissingSingularLocusError(ApolarError, ValueError):
    pass


class RouteUnavailableError(VerificationError):
    """The Groebner route cannot certify because the basis check failed."""
