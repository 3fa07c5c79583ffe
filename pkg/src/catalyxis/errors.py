"""Exception types raised by catalyxis."""

from fractions import Fraction


class CatalysisError(ValueError):
    """Base class for all catalyxis errors."""


class NegativeEntry(CatalysisError):
    def __init__(self, index: int, value):
        self.index = index
        self.value = value
        super().__init__(f"entry {index} is negative: {value}")


class SumNotOne(CatalysisError):
    """Entries do not sum to exactly one; ``deviation`` is ``sum - 1``."""

    def __init__(self, deviation: Fraction):
        self.deviation = deviation
        super().__init__(f"entries sum to 1 + ({deviation}), expected exactly 1")


class NotIncomparable(CatalysisError):
    """The violation set is empty, so catalyst bounds do not apply."""


class IndexOutOfRange(CatalysisError):
    pass


class ZeroDenominator(CatalysisError):
    pass


class ResourceLimit(CatalysisError):
    def __init__(self, count: int, ceiling: int):
        self.count = count
        self.ceiling = ceiling
        super().__init__(
            f"{count} candidates exceed the enumeration ceiling of {ceiling}"
        )
