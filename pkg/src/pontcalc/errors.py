"""Exception types shared across pontcalc."""


class PontcalcError(Exception):
    """Base class for all errors raised by this package."""


class VarSetError(PontcalcError, ValueError):
    pass


class DimensionError(PontcalcError, ValueError):
    pass


class NotAUnitError(PontcalcError, ValueError):
    pass


class HomogeneityError(PontcalcError, ValueError):
    pass


class OddRankError(PontcalcError, ValueError):
    pass


class ShapeError(PontcalcError, ValueError):
    pass


class ParityError(PontcalcError, ValueError):
    pass


class RangeError(PontcalcError, ValueError):
    pass


class ParseError(PontcalcError, ValueError):
    """Syntax error in a bundle, ideal or polynomial expression.

    ``offset`` is a byte offset into the UTF-8 encoded input and
    ``expected`` the set of tokens that would have been accepted there.
    """

    def __init__(self, offset, expected, message=None):
        self.offset = offset
        self.expected = frozenset(expected)
        if message is None:
            message = "expected %s" % " or ".join(sorted(self.expected))
        self.message = message
        super().__init__("at offset %d: %s" % (offset, message))


class RepeatCountError(ParseError):
    """A repeat count of zero (or one too large for a machine word)."""
