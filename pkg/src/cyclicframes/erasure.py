"""Tight cyclic frames and erasure-error analysis.

Tightening a cyclic system conjugates its operator into a unitary and maps
the seed by the inverse square root of the frame operator; the result is a
Parseval equal-norm frame.  Erasure robustness is measured through the
operator that reconstruction applies to the lost coefficients: for a
Parseval frame and erased index set E this is Theta D_E Theta*, whose norm
for a single erasure is exactly the squared norm of the erased vector.
"""

from __future__ import annotations

import csv
import io as _io
import itertools
import math
from dataclasses import dataclass

import numpy as np

from .cyclic import is_cyclic, simplex_frame
from .dynamical import DynamicalSystem
from .errors import FrameError, NotCyclicError, SurvivorNotAFrameError
from .frames import (
    Frame,
    FrameBounds,
    canonical_dual,
    canonical_tight,
    classify,
    frame_bounds,
    frame_certificate_threshold,
    frame_operator,
    require_frame,
)
from .linalg import DEFAULT_TOL, as_complex_vector, operator_norm, spectral_function

_VERIFY_TOL = math.sqrt(np.finfo(float).eps)


@dataclass
class ErasureRecord:
    """Outcome for one erased index set (indices are 0-based)."""

    erased: tuple[int, ...]
    survivor_is_frame: bool
    survivor_bounds: FrameBounds
    error_norm: float


@dataclass
class ErasureReport:
    """Exhaustive erasure sweep: per-set records plus worst case by size."""

    max_erasures: int
    tightened: bool
    records: list[ErasureRecord]
    worst_case: dict[int, ErasureRecord]


def canonical_tight_cyclic(system: DynamicalSystem, tol: float = DEFAULT_TOL) -> DynamicalSystem:
    """Tighten a cyclic system: T -> S^{-1/2} T S^{1/2}, seed -> S^{-1/2} seed.

    The returned operator is unitary with the same period, and its orbit is
    the Parseval frame associated with the input orbit.
    """
    if not is_cyclic(system.operator, system.length, tol):
        raise NotCyclicError("operator power through the orbit length is not the identity")
    frame = system.frame()
    require_frame(frame, tol)
    s = frame_operator(frame)
    s_half = spectral_function(s, "sqrt", tol)
    s_mhalf = spectral_function(s, "inv_sqrt", tol)
    t_tight = s_mhalf @ system.operator @ s_half
    tight = DynamicalSystem(
        operator=t_tight, seed=s_mhalf @ system.seed, length=system.length
    )
    _check_tight(tight)
    return tight


def _check_tight(system: DynamicalSystem):
    d = system.d
    unitary_defect = float(
        np.linalg.norm(system.operator.conj().T @ system.operator - np.eye(d))
    )
    if unitary_defect > _VERIFY_TOL * d:
        raise FrameError(f"tightened operator is not unitary (defect {unitary_defect:.3e})")
    if not is_cyclic(system.operator, system.length, _VERIFY_TOL):
        raise FrameError("tightened operator lost its period")
    bounds = frame_bounds(system.frame())
    if abs(bounds.lower - 1.0) > _VERIFY_TOL or abs(bounds.upper - 1.0) > _VERIFY_TOL:
        raise FrameError("tightened orbit is not Parseval")


def equiangularity_criterion(
    system: DynamicalSystem, tol: float = DEFAULT_TOL
) -> tuple[bool, np.ndarray]:
    """Moduli |<T^l f1, S^{-1} f1>| for l = 1..n-1 and whether they are constant.

    Constancy of this sequence is equivalent to equiangularity of the
    tightened orbit.
    """
    if not is_cyclic(system.operator, system.length, tol):
        raise NotCyclicError("operator power through the orbit length is not the identity")
    frame = system.frame()
    require_frame(frame, tol)
    dual_seed = spectral_function(frame_operator(frame), "inverse", tol) @ system.seed
    moduli = np.empty(system.length - 1, dtype=np.float64)
    v = system.seed
    for ell in range(1, system.length):
        v = system.operator @ v
        moduli[ell - 1] = abs(np.vdot(dual_seed, v))
    if moduli.size == 0:
        return True, moduli
    mean = float(moduli.mean())
    if mean == 0.0:
        return True, moduli
    return float(np.max(np.abs(moduli - mean))) <= tol * mean, moduli


def simplex_etf(d: int, tol: float = DEFAULT_TOL) -> DynamicalSystem:
    """Equiangular tight cyclic system of d+1 vectors in dimension d.

    Starts from the standard basis plus the negated sum, whose frame
    operator is ones-plus-identity, then tightens.
    """
    if d < 1:
        raise ValueError("dimension must be positive")
    system = simplex_frame(np.eye(d, dtype=np.complex128), tol)
    s = frame_operator(system.frame())
    expected = np.eye(d) + np.ones((d, d))
    if float(np.abs(s - expected).max()) > max(tol, 1e-12):
        raise FrameError("simplex frame operator deviates from its closed form")
    s_inv = spectral_function(s, "inverse", tol)
    expected_inv = (np.eye(d) * (d + 1) - np.ones((d, d))) / (d + 1)
    if float(np.abs(s_inv - expected_inv).max()) > max(tol, 1e-12):
        raise FrameError("simplex inverse operator deviates from its closed form")
    return canonical_tight_cyclic(system, tol)


def erasure_analysis(frame: Frame, max_m: int = 2, tol: float = DEFAULT_TOL) -> ErasureReport:
    """Exhaustive erasure sweep over all index sets of size 1..max_m.

    Non-Parseval input is tightened first (and the report says so), since
    the error operator Theta D_E Theta* measures the reconstruction defect of
    the Parseval identity.  ``max_m`` is capped at 2; the sweep is O(n^2).
    """
    if not 1 <= max_m <= 2:
        raise ValueError("max_m must be 1 or 2")
    require_frame(frame, tol)
    tightened = False
    if not classify(frame, max(tol, 1e-8)).is_parseval:
        frame = canonical_tight(frame, tol)
        tightened = True
    syn = frame.synthesis
    n = frame.n

    records: list[ErasureRecord] = []
    worst: dict[int, ErasureRecord] = {}
    for m in range(1, max_m + 1):
        for erased in itertools.combinations(range(n), m):
            sub = syn[:, list(erased)]
            error = operator_norm(sub @ sub.conj().T)
            keep = [k for k in range(n) if k not in erased]
            if keep:
                bounds = frame_bounds(Frame(syn[:, keep]), tol)
            else:
                bounds = FrameBounds(lower=0.0, upper=0.0)
            record = ErasureRecord(
                erased=erased,
                survivor_is_frame=bounds.lower > frame_certificate_threshold(bounds, tol),
                survivor_bounds=bounds,
                error_norm=error,
            )
            records.append(record)
            if m not in worst or record.error_norm > worst[m].error_norm:
                worst[m] = record
    return ErasureReport(
        max_erasures=max_m, tightened=tightened, records=records, worst_case=worst
    )


def worst_case_csv(report: ErasureReport) -> str:
    """Worst-case table as CSV with columns m, argmax set (1-based), error."""
    buf = _io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["m", "argmax_set", "error"])
    for m in sorted(report.worst_case):
        record = report.worst_case[m]
        writer.writerow(
            [m, ";".join(str(k + 1) for k in record.erased), f"{record.error_norm:.17g}"]
        )
    return buf.getvalue()


def reconstruct_after_erasure(frame: Frame, erased, coefficients, tol: float = DEFAULT_TOL):
    """Recover a vector from its analysis coefficients with some entries lost.

    ``coefficients`` holds <f, f_k> for the surviving indices (erased entries
    are ignored, conventionally zeroed).  Recovery applies the canonical dual
    of the surviving subsystem, which is exact whenever that subsystem is
    still a frame.
    """
    erased_set = {int(k) for k in erased}
    n = frame.n
    if not all(0 <= k < n for k in erased_set):
        raise ValueError("erased indices out of range")
    coeffs = as_complex_vector(coefficients)
    if coeffs.size != n:
        raise ValueError(f"expected {n} coefficients, got {coeffs.size}")
    keep = [k for k in range(n) if k not in erased_set]
    if not keep:
        raise SurvivorNotAFrameError("every coefficient was erased")
    survivor = Frame(frame.synthesis[:, keep])
    try:
        dual = canonical_dual(survivor, tol)
    except FrameError as exc:
        raise SurvivorNotAFrameError("surviving vectors do not form a frame") from exc
    return dual.synthesis @ coeffs[keep]


def rotation_alignment(source: Frame, target: Frame) -> tuple[float, float, int]:
    """Best pure-rotation alignment between two real planar orbit frames.

    Tries every cyclic correspondence between the column sequences, fits the
    least-squares rotation (determinant +1) for each, and among the
    candidates with minimal residual returns the one of smallest angle:
    ``(angle, residual, shift)`` with ``source`` rotated by ``angle`` onto
    ``target`` columns shifted by ``shift``.
    """
    a = source.synthesis
    b = target.synthesis
    if a.shape != b.shape or a.shape[0] != 2:
        raise ValueError("alignment needs two frames of equal shape in dimension 2")
    if np.abs(a.imag).max() > 1e-12 or np.abs(b.imag).max() > 1e-12:
        raise ValueError("alignment is defined for real frames")
    ar = a.real
    br = b.real
    n = ar.shape[1]
    candidates = []
    for shift in range(n):
        shifted = br[:, [(k + shift) % n for k in range(n)]]
        cov = shifted @ ar.T
        u, _, vt = np.linalg.svd(cov)
        rot = u @ np.diag([1.0, float(np.sign(np.linalg.det(u @ vt)))]) @ vt
        residual = float(np.linalg.norm(rot @ ar - shifted))
        angle = float(np.arctan2(rot[1, 0], rot[0, 0]))
        candidates.append((round(residual, 12), abs(angle), angle, residual, shift))
    candidates.sort(key=lambda item: (item[0], item[1]))
    _, _, angle, residual, shift = candidates[0]
    return angle, residual, shift
