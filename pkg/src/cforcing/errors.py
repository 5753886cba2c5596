"""Exception types shared across modules."""


class CapExceeded(RuntimeError):
    """An enumeration outgrew its configured cap; use bounds instead of exact methods."""

    def __init__(self, what: str, cap: int):
        self.what = what
        self.cap = cap
        super().__init__(f"{what} exceeds cap {cap}")


class GuardExceeded(RuntimeError):
    """Instance is too large for an exhaustive routine."""


class NoPerfectMatching(ValueError):
    pass


class NotApplicable(ValueError):
    """A bound or routine does not apply to this input."""
