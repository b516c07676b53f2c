class PositroidError(Exception):
    """Base class for every error raised by the library."""


class InvalidInput(PositroidError, ValueError):
    """Input violates the preconditions of an operation."""


class ComputationError(PositroidError, ArithmeticError):
    """A well-formed computation could not be completed."""


# Affine permutations, necklaces, rank matrices

class NotBijective(InvalidInput):
    pass


class NotBounded(InvalidInput):
    pass


class WrongK(InvalidInput):
    pass


class InvalidNecklace(InvalidInput):
    pass


class InvalidRankMatrix(InvalidInput):
    pass


# Points of the Grassmannian

class InvalidPoint(InvalidInput):
    pass


class RankDeficient(InvalidInput):
    pass


class NotTNN(InvalidInput):
    pass


class WrongCell(InvalidInput):
    pass


class IndexSize(InvalidInput):
    pass


class DimensionMismatch(InvalidInput):
    pass


class UnknownVariable(InvalidInput):
    pass


# Networks

class InvalidNetwork(InvalidInput):
    pass


class PatternMismatch(InvalidInput):
    pass


class NotPerfectlyOriented(InvalidInput):
    pass


class NonUnitBoundaryWeights(InvalidInput):
    pass


# Pairings and tableaux

class InvalidPairing(InvalidInput):
    pass


class InvalidTableau(InvalidInput):
    pass


class MismatchedShape(InvalidInput):
    pass


# Computation failures

class DegenerateSymbolicPivot(ComputationError):
    pass


class DegenerateMove(ComputationError):
    pass


class NoMatchings(ComputationError):
    pass


class ChartDegenerate(ComputationError):
    pass


class SingularSimplex(ComputationError):
    pass


class NotRepresentable(ComputationError):
    pass


class NotSymmetric(ComputationError):
    pass


class UndefinedRelationSpace(ComputationError):
    pass
