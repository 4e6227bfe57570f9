"""Exception hierarchy shared by all knotfoam modules."""


class KnotfoamError(Exception):
    """Base class for all errors raised by this package."""


class NonExactDivision(KnotfoamError):
    """Division by a power of (X1 - X2) left a nonzero remainder."""


class MalformedFoam(KnotfoamError):
    """A foam violates a structural invariant."""


class NonBipartiteBinding(KnotfoamError):
    """The binding adjacency graph of a foam admits no proper 2-coloring."""


class OddEuler(KnotfoamError):
    """A colored subsurface has odd Euler characteristic."""


class InvalidFace(KnotfoamError):
    """A face descriptor does not match the graph it is applied to."""


class ReductionStuck(KnotfoamError):
    """No bigon or square face was found although red edges remain."""


class ParseError(KnotfoamError):
    """Input text does not match the expected grammar."""

    def __init__(self, message, position=None):
        super().__init__(message)
        self.position = position


class InvalidDiagram(KnotfoamError):
    """A crossing list fails the arc-multiplicity or orientation checks."""


class InvalidBraid(KnotfoamError):
    """A braid word is not realizable on the given number of strands."""


class InvalidSite(KnotfoamError):
    """A Reidemeister move site does not exist in the diagram."""


class TooLarge(KnotfoamError):
    """The diagram exceeds the configured crossing limit."""


class NotAComplex(KnotfoamError):
    """Consecutive differentials do not compose to zero."""


class NotAKnot(KnotfoamError):
    """An operation defined only for knots received a multi-component link."""


class NotACycle(KnotfoamError):
    """A chain expected to be a cycle is not killed by the differential."""


class RankMismatch(KnotfoamError):
    """A homology rank violates the degeneration theorem."""


class PropositionViolated(KnotfoamError):
    """An internal structural fact failed; indicates a bug, not bad input."""
