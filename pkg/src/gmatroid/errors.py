"""Exception hierarchy shared by every module in the package."""


class MatroidError(Exception):
    """Base class for all errors raised by gmatroid."""


class EmptyBases(MatroidError):
    pass


class ExchangeAxiomViolation(MatroidError):
    def __init__(self, b1, b2, i):
        self.b1, self.b2, self.i = b1, b2, i
        super().__init__(
            f"exchange axiom fails for B1={sorted(b1)}, B2={sorted(b2)}, i={i}"
        )


class InvalidInput(MatroidError):
    pass


class ZeroMatrix(MatroidError):
    pass


class ColoopDeletion(MatroidError):
    pass


class LoopContraction(MatroidError):
    pass


class DegenerateTerminal(MatroidError):
    pass


class LoopParallel(MatroidError):
    pass


class ColoopSeries(MatroidError):
    pass


class HasLoops(MatroidError):
    pass


class HasColoops(MatroidError):
    pass


class NotConnected(MatroidError):
    pass


class GroundSetTooLarge(MatroidError):
    pass


class GroundSetTooSmall(MatroidError):
    pass


class PreconditionViolated(MatroidError):
    pass


class FlatCountMismatch(MatroidError):
    pass


class CoordinateSubgrassmannian(MatroidError):
    """The matroid has a loop or a coloop, so g is undefined."""


class NotComputable(MatroidError):
    """No available reduction or closed form determines g for this matroid."""


class TooManyUnknowns(MatroidError):
    pass


class InconsistentSum(MatroidError):
    pass


class NotMatroidal(MatroidError):
    pass


class DimComponentMismatch(MatroidError):
    pass


class VolumeCertificateFailure(MatroidError):
    pass


class NotABasis(MatroidError):
    pass


class NotPointed(MatroidError):
    pass


class NotLaurent(MatroidError):
    pass
