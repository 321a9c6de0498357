"""Exception types shared across the package."""


class AG43Error(Exception):
    """Base class for all domain errors."""


class InvalidPair(AG43Error):
    pass


class NotACap(AG43Error):
    pass


class NoAnchor(AG43Error):
    pass


class AmbiguousAnchor(AG43Error):
    """More than one anchor candidate; indicates an internal inconsistency."""


class WrongSize(AG43Error):
    pass


class NoCommonAnchor(AG43Error):
    pass


class CoHyperplanar(AG43Error):
    pass


class CoHyperplanarInput(AG43Error):
    pass


class NotDisjoint(AG43Error):
    pass


class NotSubset(AG43Error):
    pass


class AnchorMismatch(AG43Error):
    pass


class UnionNotMaximalCap(AG43Error):
    pass


class NotADecomposition(AG43Error):
    pass


class NotADemicapResult(AG43Error):
    pass


class InconsistentPartition(AG43Error):
    pass


class UnsupportedDimension(AG43Error):
    pass


class SingularMatrix(AG43Error):
    pass


class ActionInconsistent(AG43Error):
    pass
