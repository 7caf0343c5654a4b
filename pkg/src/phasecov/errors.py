"""Exception types raised by phasecov."""


class PhaseCovError(ValueError):
    """Base class for all phasecov errors."""


class NonHermitian(PhaseCovError):
    pass


class BlochNormExceeded(PhaseCovError):
    pass


class NegativeDeterminant(PhaseCovError):
    pass


class InvalidChannel(PhaseCovError):
    """Channel parameters violate complete positivity."""


class DegenerateFixedPoint(PhaseCovError):
    """lambda3 == 1: every state on the z axis is invariant."""


class EndpointNotCP(PhaseCovError):
    """The maximally non-unital member of a mixture is not a channel."""


class InvalidExponent(PhaseCovError):
    pass


class NotPure(PhaseCovError):
    pass


class NotXState(PhaseCovError):
    pass


class OutOfRange(PhaseCovError):
    pass


class NoConvergence(PhaseCovError):
    pass
