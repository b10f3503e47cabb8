"""Exception hierarchy shared by all modules."""


class EqscError(Exception):
    """Base class for every error raised by this package."""


class NonFiniteType(EqscError, ValueError):
    pass


class RankGuardError(EqscError, ValueError):
    pass


class NotARoot(EqscError, ValueError):
    pass


class RootInLevi(EqscError, ValueError):
    pass


class NonIntegralInput(EqscError, ValueError):
    pass


class BadIndex(EqscError, ValueError):
    pass


class NotMinimalRepresentative(EqscError, ValueError):
    pass


class IndexOutOfRange(EqscError, IndexError):
    pass


class PolynomialDivisionError(EqscError, ArithmeticError):
    """Raised when an exact polynomial division leaves a remainder."""


class InternalInconsistency(EqscError, RuntimeError):
    """A proven identity failed; this always indicates a bug."""


class PreconditionViolated(EqscError, ValueError):
    pass


class StratumNotReady(InternalInconsistency):
    pass


class ZeroR(InternalInconsistency):
    pass


class SingularSystem(InternalInconsistency):
    pass
