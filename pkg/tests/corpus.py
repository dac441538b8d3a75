"""Deterministic random corpora used by the property and acceptance tests."""

import numpy as np

from cyclicframes import (
    Frame,
    circulant_frame,
    frame_bounds,
    roots_frame,
    simplex_frame,
)


def complex_gaussian(rng, shape):
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2)


def unit_annulus(rng, size, lo=0.4, hi=1.4):
    """Complex entries with modulus in [lo, hi] and uniform phase."""
    magnitude = lo + (hi - lo) * rng.random(size)
    return magnitude * np.exp(2j * np.pi * rng.random(size))


def conditioned_matrix(rng, d, cond_max=1e3):
    """Random complex matrix resampled until its condition number is moderate."""
    while True:
        m = complex_gaussian(rng, (d, d))
        s = np.linalg.svd(m, compute_uv=False)
        if s[-1] > 0 and s[0] / s[-1] <= cond_max:
            return m


def random_roots_system(rng, conjugated=True, max_d=5, max_n=10):
    d = int(rng.integers(1, max_d + 1))
    n = int(rng.integers(d + 1, max_n + 1))
    exponents = rng.choice(n, size=d, replace=False) + 1
    seed = unit_annulus(rng, d)
    conjugator = conditioned_matrix(rng, d) if conjugated else None
    return roots_frame(n, exponents, seed, conjugator)


def random_simplex_system(rng, max_d=5):
    d = int(rng.integers(1, max_d + 1))
    return simplex_frame(conditioned_matrix(rng, d))


def random_circulant_pair(rng, max_d=5, max_n=10):
    d = int(rng.integers(1, max_d + 1))
    n = int(rng.integers(d + 1, max_n + 1))
    symbol = np.zeros(n, dtype=complex)
    support = rng.choice(n, size=n - d, replace=False)
    symbol[support] = unit_annulus(rng, n - d)
    return circulant_frame(symbol, d)


def cyclic_corpus(seed, count, conjugated=True):
    """Mixed list of (frame, system) pairs, all cyclic by construction."""
    rng = np.random.default_rng(seed)
    out = []
    for k in range(count):
        which = k % 3
        if which == 0:
            system = random_roots_system(rng, conjugated=conjugated)
            out.append((system.frame(), system))
        elif which == 1:
            system = random_simplex_system(rng)
            out.append((system.frame(), system))
        else:
            out.append(random_circulant_pair(rng))
    return out


def random_frames(seed, count, max_d=5, max_n=10):
    """Generic complex Gaussian frames (n >= d, certified lower bound)."""
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < count:
        d = int(rng.integers(1, max_d + 1))
        n = int(rng.integers(d, max_n + 1))
        frame = Frame(complex_gaussian(rng, (d, n)))
        bounds = frame_bounds(frame)
        if bounds.lower > 1e-6 * bounds.upper:
            out.append(frame)
    return out
