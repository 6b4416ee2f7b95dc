"""Domain exceptions with stable machine-readable codes.

The class name doubles as the error code emitted by the CLI, so renaming
a class here is a breaking change to the command-line contract.
"""


class ShiparkError(Exception):
    """Base class for all domain errors raised by this package."""

    @property
    def code(self) -> str:
        return type(self).__name__


# -- word validation ---------------------------------------------------------

class DuplicateLetter(ShiparkError):
    """A letter occurs more than once in a word."""


class UnknownLetter(ShiparkError):
    """A word contains a letter that is not in its ground set."""


class MissingLetter(ShiparkError):
    """A word omits a letter of its ground set."""


# -- interval/pair validation ------------------------------------------------

class OpenerOrder(ShiparkError):
    """Interval openers are not strictly increasing."""


class CloserOrder(ShiparkError):
    """Interval closers are not strictly increasing."""


class DescentViolated(ShiparkError):
    """An interval's opening letter does not exceed its closing letter."""


class OutOfRange(ShiparkError):
    """An interval endpoint lies outside the word, or opener >= closer."""


# -- parking functions -------------------------------------------------------

class ValueOutOfRange(ShiparkError):
    """A function value lies outside 1..m for a domain of size m."""


class NotParking(ShiparkError):
    """The parking condition |f^{-1}({1..j})| >= j fails for some j."""


class NotCentral(ShiparkError):
    """s-parking was applied to a parking function that is not central."""


class AlreadyCentral(ShiparkError):
    """A peel step was requested for a function that is already central."""


# -- inversion ----------------------------------------------------------------

class InternalMismatch(ShiparkError):
    """The label of an inverted pair disagrees with the input function.

    This is a self-check failure and indicates a bug, never bad input.
    """


# -- geometry ------------------------------------------------------------------

class OnHyperplane(ShiparkError):
    """A point lies on some hyperplane x_i = x_j or x_i - x_j = 1."""


class Infeasible(ShiparkError):
    """A difference-constraint system admits no solution (negative cycle)."""
