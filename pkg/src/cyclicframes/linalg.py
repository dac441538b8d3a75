"""Dense complex linear algebra underpinning the frame computations.

Everything here is a pure function on small dense matrices.  The Hermitian
eigensolver is a two-sided cyclic Jacobi iteration: at the matrix sizes this
package targets it is fast enough, it is deterministic, and it delivers
orthonormal eigenvectors without post-hoc re-orthogonalization.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NoConvergenceError, NonHermitianError, NotPositiveDefiniteError

#: Default relative tolerance used across the package.
DEFAULT_TOL = 1e-9

#: Absolute fallback used when the natural reference magnitude is below one.
ABS_FALLBACK = 1e-12


def as_complex_matrix(m) -> np.ndarray:
    """Coerce to a 2-D complex128 array, rejecting NaN/Inf entries."""
    a = np.asarray(m, dtype=np.complex128)
    if a.ndim != 2:
        raise ValueError(f"expected a matrix, got array of dimension {a.ndim}")
    if a.shape[0] < 1 or a.shape[1] < 1:
        raise ValueError("matrix must have at least one row and one column")
    if not np.all(np.isfinite(a.real)) or not np.all(np.isfinite(a.imag)):
        raise ValueError("matrix contains non-finite entries")
    return a


def as_complex_vector(x) -> np.ndarray:
    """Coerce to a 1-D complex128 array, rejecting NaN/Inf entries."""
    a = np.asarray(x, dtype=np.complex128).reshape(-1)
    if a.size < 1:
        raise ValueError("vector must have at least one entry")
    if not np.all(np.isfinite(a.real)) or not np.all(np.isfinite(a.imag)):
        raise ValueError("vector contains non-finite entries")
    return a


@dataclass
class SpectralDecomposition:
    """Eigenvalues (ascending, real) with orthonormal eigenvectors.

    ``residual`` is the Frobenius norm of ``M @ Q - Q @ diag(eigenvalues)``
    measured against the matrix that was actually passed in, so callers can
    judge the quality of the decomposition without recomputing anything.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    residual: float


def _plane_rotation(app: float, aqq: float, apq: complex) -> np.ndarray:
    """Unitary 2x2 rotation diagonalizing [[app, apq], [conj(apq), aqq]]."""
    absb = abs(apq)
    phase = apq / absb
    tau = (aqq - app) / (2.0 * absb)
    t = math.copysign(1.0, tau) / (abs(tau) + math.hypot(1.0, tau))
    c = 1.0 / math.hypot(1.0, t)
    s = t * c
    return np.array([[phase * c, phase * s], [-s, c]], dtype=np.complex128)


def hermitian_eig(m, tol: float = DEFAULT_TOL, max_sweeps: int = 60) -> SpectralDecomposition:
    """Eigendecomposition of a Hermitian matrix by cyclic Jacobi sweeps.

    Each sweep annihilates every off-diagonal pair (p, q) in row-cyclic
    order with a unitary plane rotation; convergence is quadratic once the
    off-diagonal mass is small.  Raises ``NonHermitianError`` when the input
    is not square-Hermitian within ``tol`` (relative to its Frobenius norm)
    and ``NoConvergenceError`` if ``max_sweeps`` is exhausted.
    """
    a = as_complex_matrix(m)
    d = a.shape[0]
    if a.shape[1] != d:
        raise NonHermitianError(f"matrix is {a.shape[0]}x{a.shape[1]}, not square")
    norm = float(np.linalg.norm(a))
    defect = float(np.linalg.norm(a - a.conj().T))
    if defect > tol * max(norm, 1.0):
        raise NonHermitianError(f"Hermitian defect {defect:.3e} exceeds {tol:.1e} * {norm:.3e}")

    work = (a + a.conj().T) / 2.0
    q = np.eye(d, dtype=np.complex128)
    stop = 1e-14 * max(norm, 1.0)
    skip = stop / max(d * d, 1)

    def _off_norm(mat: np.ndarray) -> float:
        hollow = mat.copy()
        np.fill_diagonal(hollow, 0.0)
        return float(np.linalg.norm(hollow))

    converged = False
    for _ in range(max_sweeps):
        if _off_norm(work) <= stop:
            converged = True
            break
        for p in range(d - 1):
            for qq in range(p + 1, d):
                apq = work[p, qq]
                if abs(apq) <= skip:
                    continue
                rot = _plane_rotation(work[p, p].real, work[qq, qq].real, apq)
                work[:, [p, qq]] = work[:, [p, qq]] @ rot
                work[[p, qq], :] = rot.conj().T @ work[[p, qq], :]
                work[p, qq] = 0.0
                work[qq, p] = 0.0
                work[p, p] = work[p, p].real
                work[qq, qq] = work[qq, qq].real
                q[:, [p, qq]] = q[:, [p, qq]] @ rot
    if not converged:
        off = _off_norm(work)
        if off > stop:
            raise NoConvergenceError(f"off-diagonal norm {off:.3e} after {max_sweeps} sweeps")

    lam = np.diag(work).real.copy()
    order = np.argsort(lam, kind="stable")
    lam = lam[order]
    q = q[:, order]
    residual = float(np.linalg.norm(a @ q - q * lam[np.newaxis, :]))
    return SpectralDecomposition(eigenvalues=lam, eigenvectors=q, residual=residual)


_SPECTRAL_FUNCS = {
    "inverse": lambda lam: 1.0 / lam,
    "sqrt": np.sqrt,
    "inv_sqrt": lambda lam: 1.0 / np.sqrt(lam),
}


def spectral_function(s, which: str, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Apply ``inverse``, ``sqrt`` or ``inv_sqrt`` to a Hermitian positive-definite matrix.

    The function acts on the spectrum: ``Q f(Lambda) Q*``.  Square roots are
    the principal (positive semidefinite) branch.  Eigenvalues at or below
    ``max(tol * lambda_max, 1e-12)`` raise ``NotPositiveDefiniteError``.
    """
    if which not in _SPECTRAL_FUNCS:
        raise ValueError(f"unknown spectral function {which!r}")
    eig = hermitian_eig(s, tol)
    lam = eig.eigenvalues
    threshold = max(tol * float(lam[-1]), ABS_FALLBACK)
    if float(lam[0]) <= threshold:
        raise NotPositiveDefiniteError(f"smallest eigenvalue {lam[0]:.3e} <= {threshold:.3e}")
    vals = _SPECTRAL_FUNCS[which](lam)
    out = (eig.eigenvectors * vals[np.newaxis, :]) @ eig.eigenvectors.conj().T
    return (out + out.conj().T) / 2.0


def dft(x) -> np.ndarray:
    """Discrete Fourier transform: negative-exponent kernel, no scale factor."""
    return np.fft.fft(as_complex_vector(x))


def idft(x) -> np.ndarray:
    """Inverse DFT: positive-exponent kernel with the 1/n factor; dft(idft(x)) == x."""
    return np.fft.ifft(as_complex_vector(x))


def right_shift(x) -> np.ndarray:
    """Cyclic right shift: (x_1, ..., x_n) -> (x_n, x_1, ..., x_{n-1})."""
    return np.roll(as_complex_vector(x), 1)


def circulant(c) -> np.ndarray:
    """Circulant matrix with first column ``c``.

    Column k+1 is the right shift of column k, i.e. entry (i, j) equals
    ``c[(i - j) mod n]``.
    """
    v = as_complex_vector(c)
    n = v.size
    idx = (np.arange(n)[:, np.newaxis] - np.arange(n)[np.newaxis, :]) % n
    return v[idx]


def singular_values(m) -> np.ndarray:
    """Singular values in descending order."""
    return np.linalg.svd(as_complex_matrix(m), compute_uv=False)


def numerical_rank(m, tol: float = DEFAULT_TOL) -> int:
    """Count of singular values above ``tol`` times the largest one."""
    s = singular_values(m)
    if s.size == 0 or s[0] <= 0.0:
        return 0
    return int(np.count_nonzero(s > tol * s[0]))


def orthogonal_complement(m, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Orthonormal basis of the orthogonal complement of the column span.

    Rank is decided at the ``tol * sigma_max`` threshold.  A zero matrix has
    empty span, so the full ambient space comes back; a full-rank square
    matrix yields a basis with zero columns.
    """
    a = as_complex_matrix(m)
    u, s, _ = np.linalg.svd(a, full_matrices=True)
    if s.size == 0 or s[0] <= 0.0:
        rank = 0
    else:
        rank = int(np.count_nonzero(s > tol * s[0]))
    return u[:, rank:].copy()


def range_basis(m, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Orthonormal basis of the column span at the same rank threshold."""
    a = as_complex_matrix(m)
    u, s, _ = np.linalg.svd(a, full_matrices=True)
    if s.size == 0 or s[0] <= 0.0:
        rank = 0
    else:
        rank = int(np.count_nonzero(s > tol * s[0]))
    return u[:, :rank].copy()


def projector_onto(basis: np.ndarray) -> np.ndarray:
    """Orthogonal projector Q Q* onto the span of orthonormal columns."""
    if basis.shape[1] == 0:
        return np.zeros((basis.shape[0], basis.shape[0]), dtype=np.complex128)
    return basis @ basis.conj().T


def subspace_distance(a, b, tol: float = DEFAULT_TOL) -> float:
    """Frobenius distance between the orthogonal projectors onto two column spans."""
    pa = projector_onto(range_basis(a, tol))
    pb = projector_onto(range_basis(b, tol))
    return float(np.linalg.norm(pa - pb))


def operator_norm(m) -> float:
    """Largest singular value, via the top eigenvalue of the Gram matrix."""
    a = as_complex_matrix(m)
    gram = a.conj().T @ a if a.shape[0] >= a.shape[1] else a @ a.conj().T
    lam = hermitian_eig(gram).eigenvalues[-1]
    return math.sqrt(max(float(lam), 0.0))
