"""Exception hierarchy shared by all modules."""


class SeshadriError(Exception):
    """Base class for all errors raised by this package."""


class EqualPointsError(SeshadriError):
    """Two coinciding points where distinct points were required."""


class EqualLinesError(SeshadriError):
    """Two coinciding lines where distinct lines were required."""


class DuplicateLineError(SeshadriError):
    """A line list contains the same projective line twice."""


class BadParameterError(SeshadriError):
    """A parameter is outside the documented range."""


class InvalidStructureError(SeshadriError):
    """An incidence structure violates a structural requirement."""


class PencilError(SeshadriError):
    """Operation undefined for a pencil (all lines through one point)."""


class ZeroMultiplicityError(SeshadriError):
    """A curve class with total multiplicity zero has no Seshadri ratio."""


class NotCoveringError(SeshadriError):
    """A line divisor misses at least one configuration point."""


class CoverSearchTimeout(SeshadriError):
    """The branch-and-bound cover search exhausted its node budget."""

    def __init__(self, nodes: int):
        super().__init__(f"cover search stopped after {nodes} nodes")
        self.nodes = nodes


class MissingMilnorError(SeshadriError):
    """Milnor numbers are required but were not supplied."""


class BadIndexError(SeshadriError):
    """An index into the singular-point list is out of range."""


class ArrangementParseError(SeshadriError):
    """An arrangement file could not be parsed."""
