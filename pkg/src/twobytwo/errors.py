"""Exception types shared across the library."""


class TwoByTwoError(Exception):
    """Base class for all library errors."""


class InvalidRanking(TwoByTwoError):
    """A rank vector is not a dense ranking (values 1..k, each present)."""


class NotStrict(TwoByTwoError):
    """An operation that requires a strict (tie-free) game received ties."""


class RankAbsent(TwoByTwoError):
    """make_tie was asked to merge a rank value the player does not hold."""


class RankNotTied(TwoByTwoError):
    """break_tie was asked to split a value held by fewer than two cells."""


class Unreachable(TwoByTwoError):
    """No path exists under the allowed swap kinds."""


class ConstructionInvariantViolation(TwoByTwoError):
    """Atlas construction produced a structure violating its own invariants.

    Signals an implementation bug, never bad user input.
    """


class ParseError(TwoByTwoError):
    """A game identifier string is malformed.

    Carries the character position where scanning failed.
    """

    def __init__(self, message: str, position: int = 0):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class IoFailure(TwoByTwoError):
    """Writing an export document failed."""
