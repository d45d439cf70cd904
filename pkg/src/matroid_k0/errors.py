"""Exception hierarchy shared by every module of the package."""


class MatroidError(Exception):
    pass


class InvalidElementId(MatroidError):
    pass


class AxiomViolation(MatroidError):
    """A family of subsets fails one of the independence axioms.

    ``axiom`` is one of ``"I1"``, ``"I2"``, ``"I3"`` and ``witness`` holds the
    offending sets (as frozensets of element ids).
    """

    def __init__(self, axiom, witness, message=None):
        self.axiom = axiom
        self.witness = witness
        super().__init__(message or f"axiom {axiom} violated: {witness}")


class EmptyBasisFamily(MatroidError):
    pass


class ElementNotInGroundSet(MatroidError):
    pass


class IsthmusDeletion(MatroidError):
    pass


class LoopContraction(MatroidError):
    pass


class DuplicateEdgeLabel(MatroidError):
    pass


class InvalidMorphism(MatroidError):
    pass


class TreeError(MatroidError):
    """Base class for deletion-contraction tree failures.

    ``path`` addresses the offending node (a tuple of child selectors) and
    ``clause`` names the violated tree condition, when one applies.
    """

    clause = None

    def __init__(self, message, path=()):
        self.path = tuple(path)
        super().__init__(f"{message} (at path {''.join(self.path) or '<root>'})")


class RootIsBasePoint(TreeError):
    clause = "i"


class IsoLinkNotIsomorphism(TreeError):
    clause = "ii"


class SplitElementDegenerate(TreeError):
    clause = "iii"


class SplitChildMismatch(TreeError):
    clause = "iii"


class LeafMatroidMismatch(TreeError):
    pass


class PathNotALeaf(TreeError):
    pass


class LeafNotIndecomposable(TreeError):
    pass


class WitnessRootMismatch(MatroidError):
    pass


class ArityMismatch(MatroidError):
    pass


class TargetMismatch(MatroidError):
    pass


class DocumentError(MatroidError):
    pass


class SizeLimitExceeded(MatroidError):
    pass
