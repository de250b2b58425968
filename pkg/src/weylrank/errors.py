"""Exception hierarchy.

Every error raised by the library derives from :class:`WeylRankError`, which is
itself a :class:`ValueError`. The CLI maps each subclass to an exit code.
"""


class WeylRankError(ValueError):
    exit_code = 1


class ParseError(WeylRankError):
    exit_code = 2


class InvalidRankError(WeylRankError):
    exit_code = 2


class InvalidDigitError(WeylRankError):
    """A digit exceeds its cap; ``index`` is the digit's subscript."""

    exit_code = 2

    def __init__(self, message: str, index: int):
        super().__init__(message)
        self.index = index


class OutOfRangeError(WeylRankError):
    exit_code = 3


class MembershipError(WeylRankError):
    """An element does not belong to the requested group."""

    exit_code = 4


class BudgetExceededError(WeylRankError):
    exit_code = 5
