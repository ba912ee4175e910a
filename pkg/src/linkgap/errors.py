"""Exception types shared across the package."""


class LinkGapError(Exception):
    """Base class for every error raised by linkgap."""


class EmptyInput(LinkGapError):
    """An input string contained no tokens."""


class MalformedToken(LinkGapError):
    """A token of an input string is not a signed decimal integer."""

    def __init__(self, token: str, position: int):
        self.token = token
        self.position = position
        super().__init__(f"token {position} ({token!r}) is not a signed integer")


class UnsupportedNotation(LinkGapError):
    """Input uses Conway tangle syntax beyond plain integer words."""


class WrongArity(LinkGapError):
    """A pretzel word did not have exactly three columns."""


class TrivialLink(LinkGapError):
    """Operation undefined on the unknot / unlink (|p| <= 1)."""


class Misaligned(LinkGapError):
    """A change vector does not have one count per twist region."""


class CountExceedsRegion(LinkGapError):
    """A change count is larger than the crossings in its region."""


class WeightCeilingExceeded(LinkGapError):
    """Unlinking search hit the configured weight ceiling."""


class InternalExhaustion(LinkGapError):
    """A search that must succeed exhausted its space (indicates a bug)."""


class DescentViolation(LinkGapError):
    """A recursion child failed the strict crossing-number descent check."""


class NotOddPositive(LinkGapError):
    """Pretzel recursion requires all columns odd and positive."""


class IrreducibleHere(LinkGapError):
    """No pretzel-to-rational rewrite applies (all |columns| >= 2)."""


class Indeterminate(LinkGapError):
    """Pretzel triviality cannot be decided by the available tests."""


class OutOfDomain(LinkGapError):
    """Family parameters violate the entry's declared domain."""


class BudgetExceeded(LinkGapError):
    """Enumeration or verification exceeded its configured budget."""
