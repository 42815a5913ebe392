"""Exception types raised across the package."""


class ComparablesError(ValueError):
    """Base class for invalid inputs to comppairs operations."""


class UniverseOutOfRange(ComparablesError):
    pass


class MaskOutOfRange(ComparablesError):
    pass


class InvalidPermutation(ComparablesError):
    pass


class UniverseTooLarge(ComparablesError):
    pass


class UniverseTooSmall(ComparablesError):
    pass


class UniverseMismatch(ComparablesError):
    pass


class ChainTooLong(ComparablesError):
    pass


class NotNested(ComparablesError):
    pass


class NotDivisible(ComparablesError):
    pass


class OddUniverse(ComparablesError):
    pass


class RadiusTooLarge(ComparablesError):
    pass


class CutoffTooLarge(ComparablesError):
    pass


class RangeViolation(ComparablesError):
    pass


class DomainError(ComparablesError):
    pass


class EmptyFamily(ComparablesError):
    pass


class IndexOutOfRange(ComparablesError):
    pass


class CacheCorrupt(ComparablesError):
    pass


class BudgetExceeded(RuntimeError):
    """Search stopped on its node or time limit.

    ``result`` holds the best family found so far (``complete`` is False).
    """

    def __init__(self, result):
        super().__init__(
            f"budget exhausted after {result.nodes} nodes; "
            f"incumbent value {result.optimum}"
        )
        self.result = result
