"""Exception hierarchy.

Everything raised on invalid mathematical input derives from HdaError, so
callers (and the command line driver) can distinguish "the data is wrong"
from genuine bugs.
"""


class HdaError(Exception):
    """Base class for all validation and decision errors."""


# ---------------------------------------------------------------- complexes

class DuplicateId(HdaError):
    pass


class MissingFace(HdaError):
    """A declared boundary points at an identifier that does not exist."""


class DegreeMismatch(HdaError):
    """A face list has the wrong arity or a face has the wrong degree."""


class IdentityViolation(HdaError):
    """d_i^k d_j^l x != d_{j-1}^l d_i^k x for some i < j."""

    def __init__(self, cube, i, j, k, l, left, right):
        self.cube, self.i, self.j, self.k, self.l = cube, i, j, k, l
        super().__init__(
            f"cube {cube!r}: d_{i}^{k} d_{j}^{l} = {left!r} but "
            f"d_{j-1}^{l} d_{i}^{k} = {right!r}")


class UnknownCube(HdaError):
    pass


class NotFaceClosed(HdaError):
    """A candidate subset is not stable under the boundary operators."""


class TooLarge(HdaError):
    """A size guard tripped (cube limit, enumeration limit)."""


class EndpointMismatch(HdaError):
    """Path edges do not chain, or concatenation endpoints disagree."""


# ---------------------------------------------------------------- automata

class StateNotVertex(HdaError):
    pass


class MissingLabel(HdaError):
    pass


class LabelSquareMismatch(HdaError):
    """Opposite edges of a 2-cube carry different labels."""

    def __init__(self, cube, axis, low, high):
        self.cube, self.axis = cube, axis
        super().__init__(
            f"2-cube {cube!r}, axis {axis}: label {low!r} vs {high!r}")


# ---------------------------------------------------------------- algebra

class DimensionMismatch(HdaError):
    pass


# ---------------------------------------------------------------- homology

class NotACycle(HdaError):
    pass


class SubsetMismatch(HdaError):
    """A subset argument belongs to a different parent complex."""


class InvalidMorphism(HdaError):
    """Structurally malformed subdivision data."""


# ---------------------------------------------------------------- reach

class ConceptLimitExceeded(TooLarge):
    pass


# ---------------------------------------------------------------- subdivision

class FaceShapeMismatch(HdaError):
    """The shape of a face cube disagrees with the parent shape."""


class NotGridMorphism(HdaError):
    """A cell map does not commute with the grid boundary operators."""


class InteriorCollision(HdaError):
    """Two source cells claim the same target cell."""


class Uncovered(HdaError):
    """A target cell is claimed by no source cell."""


class EdgeEndpointMismatch(HdaError):
    """An edge's grid endpoints disagree with the vertex map."""


class InconsistentCounts(HdaError):
    """Parallel edges of a cube were assigned different subdivision counts."""


class InitialMismatch(HdaError):
    pass


class FinalMismatch(HdaError):
    pass


class LabelMismatch(HdaError):
    """An edge label is not preserved (or cannot be split as requested)."""


# ---------------------------------------------------------------- reduction

class NotTopCube(HdaError):
    pass


class PreconditionViolated(HdaError):
    """Reduction requires every carrier cube to be past-complete."""

    def __init__(self, cubes):
        self.cubes = tuple(cubes)
        super().__init__("not past-complete: " + ", ".join(self.cubes))


# ---------------------------------------------------------------- documents

class DocumentError(Exception):
    """Malformed input document (bad JSON shape, missing fields)."""
