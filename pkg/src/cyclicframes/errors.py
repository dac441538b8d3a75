"""Exception types shared across the package."""


class FrameError(Exception):
    """Base class for every error raised by this package."""


class NonHermitianError(FrameError):
    """Matrix handed to a Hermitian routine is not square-Hermitian within tolerance."""


class NoConvergenceError(FrameError):
    """Iterative eigensolver exhausted its sweep budget."""


class NotPositiveDefiniteError(FrameError):
    """Spectral matrix function requested on a matrix with a non-positive eigenvalue."""


class DependentVectorsError(FrameError):
    """Vectors expected to be linearly independent are rank deficient."""


class NotAFrameError(FrameError):
    """Vector system has (numerically) zero lower frame bound."""


class NotCyclicError(FrameError):
    """Operator power through the system length does not return to the identity."""


class RepeatedRootError(FrameError):
    """Two requested roots of unity coincide, so the orbit cannot span."""


class ZeroCoordinateError(FrameError):
    """Seed vector has a (numerically) zero coordinate, so the orbit cannot span."""


class SingularConjugatorError(FrameError):
    """Supplied change-of-basis matrix is singular."""


class SupportSizeError(FrameError):
    """Symbol vector does not have the required number of nonzero entries."""


class SurvivorNotAFrameError(FrameError):
    """Vectors remaining after an erasure no longer form a frame."""
