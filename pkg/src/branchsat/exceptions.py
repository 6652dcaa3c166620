"""Exception hierarchy."""


class BranchSatError(Exception):
    """Base class for all errors raised by this package."""


class InvalidType(BranchSatError, ValueError):
    """Unknown Cartan series or rank."""


class DimensionError(BranchSatError, ValueError):
    """Vectors or matrices of incompatible size."""


class NotDominant(BranchSatError, ValueError):
    """A dominant weight or coweight was required."""


class UnknownPair(BranchSatError, KeyError):
    """Name not found in the embedding catalog."""


class HypothesisViolated(BranchSatError, ValueError):
    """A simple factor of the big group lies inside the subgroup."""


class NotPointed(BranchSatError, ValueError):
    """The cone contains a line."""


class CatalogFormatError(BranchSatError, ValueError):
    """Malformed catalog or matrix file."""
