"""Operator-orbit structure of frames.

A dynamical system here is an operator T, a seed vector, and a length n;
the associated vector system is the orbit (seed, T seed, ..., T^{n-1} seed).
This module extends independent vectors to such operators, detects orbit
structure in arbitrary frames, reports on sliding windows of d consecutive
vectors, and builds the zero-padded dual whose operator annihilates the last
dual basis vector.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DependentVectorsError, NotAFrameError
from .frames import Frame, require_frame
from .linalg import DEFAULT_TOL, as_complex_matrix, as_complex_vector, numerical_rank


@dataclass(eq=False)
class DynamicalSystem:
    """Operator, seed and length generating the orbit {T^{k-1} seed}."""

    operator: np.ndarray
    seed: np.ndarray
    length: int

    def __post_init__(self):
        self.operator = as_complex_matrix(self.operator)
        self.seed = as_complex_vector(self.seed)
        d = self.operator.shape[0]
        if self.operator.shape[1] != d:
            raise ValueError("operator must be square")
        if self.seed.size != d:
            raise ValueError("seed length must match the operator dimension")
        if self.length < 1:
            raise ValueError("length must be positive")

    @property
    def d(self) -> int:
        return self.operator.shape[0]

    def frame(self) -> Frame:
        return orbit(self.operator, self.seed, self.length)


@dataclass
class WindowReport:
    """Basis verdict for every window of d consecutive orbit vectors."""

    windows: list[bool]
    operator_surjective: bool


def _stack_columns(vectors) -> np.ndarray:
    """Accept a d x k matrix or an iterable of length-d vectors (the columns)."""
    if isinstance(vectors, np.ndarray) and vectors.ndim == 2:
        return as_complex_matrix(vectors)
    cols = [as_complex_vector(v) for v in vectors]
    return as_complex_matrix(np.stack(cols, axis=1))


def extend_operator(vectors, phi, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Operator T with T f_k = f_{k+1} for k < d and T f_d = phi.

    ``vectors`` are d linearly independent vectors in dimension d (columns of
    the returned relation); rank deficiency raises ``DependentVectorsError``.
    """
    basis = _stack_columns(vectors)
    d = basis.shape[0]
    if basis.shape[1] != d:
        raise DependentVectorsError(f"need {d} vectors in dimension {d}, got {basis.shape[1]}")
    if numerical_rank(basis, tol) < d:
        raise DependentVectorsError("input vectors are linearly dependent")
    target = np.column_stack([basis[:, 1:], as_complex_vector(phi)])
    # T basis = target  <=>  basis^T T^T = target^T
    return np.linalg.solve(basis.T, target.T).T


def orbit(operator, seed, n: int) -> Frame:
    """Frame whose column k is T^{k-1} seed, built by repeated application."""
    t = as_complex_matrix(operator)
    v = as_complex_vector(seed)
    if n < 1:
        raise ValueError("orbit length must be positive")
    cols = np.empty((v.size, n), dtype=np.complex128)
    cols[:, 0] = v
    for k in range(1, n):
        v = t @ v
        cols[:, k] = v
    return Frame(cols)


def detect_dynamical(frame: Frame, tol: float = DEFAULT_TOL) -> DynamicalSystem | None:
    """Recover the generating system of an orbit frame, or ``None``.

    A frame can only be an orbit when its first d columns form a basis; in
    that case the operator is pinned by those columns together with column
    d+1 (for n > d) or, for a plain basis, by sending the last vector back to
    the first so the resulting system is cyclic.  Every remaining column is
    then checked against the orbit it should equal.
    """
    require_frame(frame, tol)
    d, n = frame.d, frame.n
    head = frame.synthesis[:, :d]
    if numerical_rank(head, tol) < d:
        return None
    phi = frame.synthesis[:, d] if n > d else frame.synthesis[:, 0]
    t = extend_operator(head, phi, tol)
    for k in range(n - 1):
        step = t @ frame.synthesis[:, k]
        expected = frame.synthesis[:, k + 1]
        if np.linalg.norm(step - expected) > tol * (1.0 + np.linalg.norm(expected)):
            return None
    return DynamicalSystem(operator=t, seed=frame.synthesis[:, 0].copy(), length=n)


def window_report(system: DynamicalSystem, tol: float = DEFAULT_TOL) -> WindowReport:
    """Rank verdict for each window of d consecutive orbit vectors.

    Window ell (ell = 0 .. n-d) covers orbit columns ell+1 .. ell+d.  Also
    reports whether the operator itself is surjective, which forces every
    window to be a basis.
    """
    d, n = system.d, system.length
    if n < d:
        raise ValueError(f"orbit length {n} is shorter than the dimension {d}")
    cols = system.frame().synthesis
    windows = [
        numerical_rank(cols[:, ell : ell + d], tol) == d for ell in range(n - d + 1)
    ]
    surjective = numerical_rank(system.operator, tol) == d
    return WindowReport(windows=windows, operator_surjective=surjective)


def dynamical_dual(frame: Frame, tol: float = DEFAULT_TOL) -> tuple[list[int], Frame]:
    """Zero-padded dual frame built from a greedily selected basis.

    Returns ``(perm, dual)`` where ``perm`` (0-based) reorders the input
    columns so the first d are linearly independent, and ``dual`` holds the
    dual basis of those d columns followed by n-d zero columns.  The pair
    satisfies the reconstruction identity, and the dual is itself the orbit
    of the operator sending each dual basis vector to the next and the last
    one to zero.
    """
    require_frame(frame, tol)
    d, n = frame.d, frame.n
    syn = frame.synthesis
    threshold = tol * float(np.max(np.linalg.norm(syn, axis=0)))
    selected: list[int] = []
    basis = np.zeros((d, 0), dtype=np.complex128)
    for k in range(n):
        if len(selected) == d:
            break
        col = syn[:, k]
        resid = col - basis @ (basis.conj().T @ col)
        if np.linalg.norm(resid) > threshold:
            selected.append(k)
            basis = np.column_stack([basis, resid / np.linalg.norm(resid)])
    if len(selected) < d:
        raise NotAFrameError("could not select a full basis from the columns")
    perm = selected + [k for k in range(n) if k not in selected]
    chosen = syn[:, selected]
    dual_basis = np.linalg.inv(chosen).conj().T
    dual = np.zeros((d, n), dtype=np.complex128)
    dual[:, :d] = dual_basis
    return perm, Frame(dual)
