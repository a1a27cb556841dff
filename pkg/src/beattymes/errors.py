"""Exception hierarchy.

Input problems derive from :class:`BeattyInputError` (CLI exit code 2);
broken internal invariants raise :class:`InvariantViolation` (exit code 3).
"""


class BeattyError(Exception):
    """Base class for every error raised by this package."""


class BeattyInputError(BeattyError, ValueError):
    pass


class ZeroDenominator(BeattyInputError, ZeroDivisionError):
    pass


class NegativeRadicand(BeattyInputError):
    pass


class RadicandMismatch(BeattyInputError):
    pass


class DivisionByZero(BeattyInputError, ZeroDivisionError):
    pass


class NonPositiveN(BeattyInputError):
    pass


class NonPositiveSlope(BeattyInputError):
    pass


class NotIrrational(BeattyInputError):
    pass


class SlopeOutOfRange(BeattyInputError):
    pass


class NotComplementary(BeattyInputError):
    pass


class GapTooSmall(BeattyInputError):
    pass


class Collision(BeattyInputError):
    pass


class NegativeSkip(BeattyInputError):
    pass


class UnknownTable(BeattyInputError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class ConfigParse(BeattyInputError):
    pass


class SlopeParse(BeattyInputError):
    pass


class InvariantViolation(BeattyError, AssertionError):
    """An identity that must hold by construction did not."""
