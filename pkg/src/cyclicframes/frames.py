"""Frames as synthesis matrices: operator, bounds, duals, classification."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import NotAFrameError
from .linalg import (
    ABS_FALLBACK,
    DEFAULT_TOL,
    as_complex_matrix,
    hermitian_eig,
    spectral_function,
)


@dataclass(eq=False)
class Frame:
    """A system of n vectors in dimension d, stored as the d x n synthesis matrix.

    A ``Frame`` is just a vector system; whether it actually is a frame
    (positive lower bound) is a computed verdict, never a construction-time
    requirement.
    """

    synthesis: np.ndarray

    def __post_init__(self):
        self.synthesis = as_complex_matrix(self.synthesis)

    @classmethod
    def from_vectors(cls, vectors) -> "Frame":
        """Build a frame from an iterable of length-d vectors (the columns)."""
        cols = [np.asarray(v, dtype=np.complex128).reshape(-1) for v in vectors]
        return cls(np.stack(cols, axis=1))

    @property
    def d(self) -> int:
        return self.synthesis.shape[0]

    @property
    def n(self) -> int:
        return self.synthesis.shape[1]

    def column(self, k: int) -> np.ndarray:
        return self.synthesis[:, k].copy()

    def __repr__(self):
        return f"Frame(d={self.d}, n={self.n})"


@dataclass
class FrameBounds:
    """Optimal frame bounds: the extreme eigenvalues of the frame operator."""

    lower: float
    upper: float


@dataclass
class GramStats:
    """Summary of the off-diagonal Gram moduli |<f_j, f_k>|, j != k."""

    count: int
    smallest: float
    largest: float
    mean: float
    std: float


@dataclass
class AnalysisReport:
    """Classification verdicts for a vector system."""

    bounds: FrameBounds
    is_frame: bool
    is_tight: bool
    is_parseval: bool
    is_uniform: bool
    uniform_norm: float
    is_equiangular: bool
    equiangular_modulus: float
    gram_offdiag: GramStats = field(repr=False)


def frame_operator(frame: Frame) -> np.ndarray:
    """S = Theta Theta*, Hermitian positive semidefinite."""
    t = frame.synthesis
    s = t @ t.conj().T
    return (s + s.conj().T) / 2.0


def gram_matrix(frame: Frame) -> np.ndarray:
    """Theta* Theta; entry (j, k) is <f_k, f_j>."""
    t = frame.synthesis
    return t.conj().T @ t


def frame_bounds(frame: Frame, tol: float = DEFAULT_TOL) -> FrameBounds:
    """Smallest/largest eigenvalue of the frame operator, clamped at zero."""
    lam = hermitian_eig(frame_operator(frame), tol).eigenvalues
    return FrameBounds(lower=max(float(lam[0]), 0.0), upper=max(float(lam[-1]), 0.0))


def frame_certificate_threshold(bounds: FrameBounds, tol: float = DEFAULT_TOL) -> float:
    """Lower-bound threshold certifying the frame property, relative to B."""
    return max(tol * bounds.upper, ABS_FALLBACK)


def require_frame(frame: Frame, tol: float = DEFAULT_TOL) -> FrameBounds:
    """Return the bounds, raising ``NotAFrameError`` when the lower bound is negligible."""
    bounds = frame_bounds(frame, tol)
    if bounds.lower <= frame_certificate_threshold(bounds, tol):
        raise NotAFrameError(
            f"lower frame bound {bounds.lower:.3e} is negligible against upper {bounds.upper:.3e}"
        )
    return bounds


def canonical_dual(frame: Frame, tol: float = DEFAULT_TOL) -> Frame:
    """Canonical dual frame: columns S^{-1} f_k."""
    require_frame(frame, tol)
    s_inv = spectral_function(frame_operator(frame), "inverse", tol)
    return Frame(s_inv @ frame.synthesis)


def canonical_tight(frame: Frame, tol: float = DEFAULT_TOL) -> Frame:
    """Canonical tight (Parseval) frame: columns S^{-1/2} f_k."""
    require_frame(frame, tol)
    s_mhalf = spectral_function(frame_operator(frame), "inv_sqrt", tol)
    return Frame(s_mhalf @ frame.synthesis)


def classify(frame: Frame, tol: float = DEFAULT_TOL) -> AnalysisReport:
    """Full classification: bounds, tightness, uniformity, equiangularity.

    Tightness is the scale-free test ``B - A <= tol * B``; Parseval
    additionally pins both bounds to 1.  Uniformity compares column norms
    against their mean, equiangularity does the same for the off-diagonal
    Gram moduli (an orthonormal basis is equiangular with common modulus 0).
    """
    bounds = frame_bounds(frame, tol)
    is_frame = bounds.lower > frame_certificate_threshold(bounds, tol)
    is_tight = is_frame and (bounds.upper - bounds.lower) <= tol * bounds.upper
    is_parseval = is_tight and abs(bounds.lower - 1.0) <= tol and abs(bounds.upper - 1.0) <= tol

    gram = gram_matrix(frame)
    norms = np.sqrt(np.clip(np.diag(gram).real, 0.0, None))
    mean_norm = float(norms.mean())
    if mean_norm == 0.0:
        is_uniform = True
    else:
        is_uniform = float(np.max(np.abs(norms - mean_norm))) <= tol * mean_norm

    n = frame.n
    iu = np.triu_indices(n, k=1)
    moduli = np.abs(gram[iu])
    if moduli.size == 0:
        stats = GramStats(count=0, smallest=0.0, largest=0.0, mean=0.0, std=0.0)
        is_equiangular = is_uniform
    else:
        mean_mod = float(moduli.mean())
        stats = GramStats(
            count=int(moduli.size),
            smallest=float(moduli.min()),
            largest=float(moduli.max()),
            mean=mean_mod,
            std=float(moduli.std()),
        )
        if mean_mod == 0.0:
            is_equiangular = is_uniform
        else:
            is_equiangular = is_uniform and float(np.max(np.abs(moduli - mean_mod))) <= tol * mean_mod

    return AnalysisReport(
        bounds=bounds,
        is_frame=is_frame,
        is_tight=is_tight,
        is_parseval=is_parseval,
        is_uniform=is_uniform,
        uniform_norm=mean_norm,
        is_equiangular=is_equiangular,
        equiangular_modulus=stats.mean,
        gram_offdiag=stats,
    )
