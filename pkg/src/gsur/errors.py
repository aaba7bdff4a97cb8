"""Exception types shared across the library."""
from __future__ import annotations


class GsurError(Exception):
    """Base class for all library-specific errors."""


class DimensionError(GsurError):
    """Range, point, or point-set dimensions are incompatible."""


class InvalidParams(GsurError):
    """Parameters violate a documented precondition."""


class MonochromaticInput(GsurError):
    """A color vector with only one color where both are required."""


class NonQualifyingBicoloring(GsurError):
    """A bicoloring fails the size-2k color threshold, so the sliding-window
    guarantee does not apply."""

    def __init__(self, index: int, red: int, blue: int, threshold: int):
        self.index = index
        self.red = red
        self.blue = blue
        self.threshold = threshold
        super().__init__(
            f"bicoloring {index} has {red} red / {blue} blue; "
            f"both must exceed {threshold}"
        )


class NotMRestricted(GsurError):
    """A bicoloring has fewer than m points of some color."""

    def __init__(self, index: int, red: int, blue: int, m: int):
        self.index = index
        self.red = red
        self.blue = blue
        self.m = m
        super().__init__(
            f"bicoloring {index} has {red} red / {blue} blue; "
            f"both counts must be >= {m}"
        )


class NoSeparatingAxis(GsurError):
    """No coordinate axis has pairwise-distinct values."""


class Disconnected(GsurError):
    """Graph is not connected where connectivity is required."""


class CertificateError(GsurError):
    """Some bicolorings have no balanced range among the given ranges."""

    def __init__(self, uncovered: list[int]):
        self.uncovered = list(uncovered)
        super().__init__(f"no balanced range for bicoloring(s) {self.uncovered}")


class InfeasibleRow(GsurError):
    """Coverage rows that no candidate balances.  Lists all of them."""

    def __init__(self, rows: list[int]):
        self.rows = list(rows)
        super().__init__(f"no candidate balances bicoloring(s) {self.rows}")


class BudgetExceeded(GsurError):
    """No cover exists within the given size budget."""

    def __init__(self, budget: int):
        self.budget = budget
        super().__init__(f"no cover of size <= {budget} exists")
