"""Shared exception types."""


class CapacityError(RuntimeError):
    """A request exceeds a configured size or budget ceiling."""


class NotDecomposable(Exception):
    """No stable/segment/right-stable split exists for the given set."""


class DecompositionNotUnique(Exception):
    """More than one split passed the scan; carries all of them."""

    def __init__(self, splits):
        self.splits = tuple(splits)
        super().__init__(f"{len(self.splits)} valid splits: {self.splits}")


class FactorizationFailed(Exception):
    """The greedy inversion got stuck above the 3k-4 threshold."""
