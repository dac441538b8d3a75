import numpy as np
import pytest
from numpy.testing import assert_allclose

from cyclicframes import (
    NoConvergenceError,
    NonHermitianError,
    NotPositiveDefiniteError,
    circulant,
    dft,
    hermitian_eig,
    idft,
    numerical_rank,
    operator_norm,
    orthogonal_complement,
    right_shift,
    spectral_function,
    subspace_distance,
)
from golden import CIRCULANT_4, KERNEL_DIRECTION_4, S_3, S_3_INV, SIMPLEX_2_OPERATOR_S, SIMPLEX_2_S_SQRT

from corpus import complex_gaussian


class TestHermitianEig:
    def test_identity(self):
        dec = hermitian_eig(np.eye(3))
        assert_allclose(dec.eigenvalues, np.ones(3), atol=1e-14)
        assert_allclose(
            dec.eigenvectors.conj().T @ dec.eigenvectors, np.eye(3), atol=1e-13
        )

    def test_two_by_two_known_spectrum(self):
        # roots of lambda^2 - 4 lambda + 3 = (lambda - 1)(lambda - 3)
        dec = hermitian_eig(SIMPLEX_2_OPERATOR_S)
        assert_allclose(dec.eigenvalues, [1.0, 3.0], atol=1e-12)

    def test_random_reconstruction(self):
        rng = np.random.default_rng(42)
        a = complex_gaussian(rng, (6, 6))
        m = (a + a.conj().T) / 2
        dec = hermitian_eig(m)
        recon = (dec.eigenvectors * dec.eigenvalues[np.newaxis, :]) @ dec.eigenvectors.conj().T
        assert np.linalg.norm(recon - m) <= 1e-10 * np.linalg.norm(m)

    def test_eigenvalues_sorted_ascending(self):
        dec = hermitian_eig(np.diag([3.0, -1.0, 2.0]))
        assert_allclose(dec.eigenvalues, [-1.0, 2.0, 3.0], atol=1e-14)

    def test_non_hermitian_rejected(self):
        with pytest.raises(NonHermitianError):
            hermitian_eig(np.array([[0.0, 1.0], [0.0, 0.0]]))
        with pytest.raises(NonHermitianError):
            hermitian_eig(np.ones((2, 3)))

    def test_sweep_budget_exhaustion(self):
        with pytest.raises(NoConvergenceError):
            hermitian_eig(SIMPLEX_2_OPERATOR_S, max_sweeps=0)

    def test_reconstruction_sweep(self):
        rng = np.random.default_rng(7)
        for _ in range(100):
            d = int(rng.integers(1, 13))
            a = complex_gaussian(rng, (d, d))
            m = (a + a.conj().T) / 2
            dec = hermitian_eig(m)
            assert dec.residual <= 1e-9 * (1 + np.linalg.norm(m))
            assert np.max(np.abs(dec.eigenvalues.imag)) == 0.0
            ortho = dec.eigenvectors.conj().T @ dec.eigenvectors
            assert np.linalg.norm(ortho - np.eye(d)) <= 1e-12

    def test_matches_lapack(self):
        rng = np.random.default_rng(11)
        a = complex_gaussian(rng, (9, 9))
        m = (a + a.conj().T) / 2
        assert_allclose(hermitian_eig(m).eigenvalues, np.linalg.eigvalsh(m), atol=1e-11)


class TestSpectralFunction:
    @pytest.mark.parametrize("which", ["inverse", "sqrt", "inv_sqrt"])
    def test_identity_fixed_point(self, which):
        assert_allclose(spectral_function(np.eye(4), which), np.eye(4), atol=1e-13)

    def test_known_square_root(self):
        root = spectral_function(SIMPLEX_2_OPERATOR_S, "sqrt")
        assert_allclose(root, SIMPLEX_2_S_SQRT, atol=1e-12)
        # the row-swapped variant squares back to S as well, but is indefinite;
        # the principal root returned here is positive definite
        assert_allclose(root @ root, SIMPLEX_2_OPERATOR_S, atol=1e-12)
        assert np.all(np.linalg.eigvalsh(root) > 0)
        swapped = root[::-1]
        assert_allclose(swapped @ swapped, SIMPLEX_2_OPERATOR_S, atol=1e-12)

    def test_known_inverse(self):
        assert_allclose(spectral_function(S_3, "inverse"), S_3_INV, atol=1e-12)

    def test_consistency(self):
        rng = np.random.default_rng(3)
        for _ in range(25):
            d = int(rng.integers(1, 7))
            a = complex_gaussian(rng, (d, d))
            s = a @ a.conj().T + np.eye(d)  # safely positive definite
            root = spectral_function(s, "sqrt")
            inv_root = spectral_function(s, "inv_sqrt")
            assert np.linalg.norm(root @ root - s) <= 1e-9 * np.linalg.norm(s)
            assert np.linalg.norm(inv_root @ root - np.eye(d)) <= 1e-9

    def test_rejects_singular(self):
        with pytest.raises(NotPositiveDefiniteError):
            spectral_function(np.ones((2, 2)), "sqrt")  # rank one

    def test_rejects_unknown_function(self):
        with pytest.raises(ValueError):
            spectral_function(np.eye(2), "log")


class TestFourier:
    def test_delta_to_constant(self):
        assert_allclose(dft([1, 0, 0, 0]), np.ones(4), atol=1e-14)

    def test_inverse_of_shifted_delta(self):
        assert_allclose(
            idft([0, 1, 0, 0]), np.array([0.25, 0.25j, -0.25, -0.25j]), atol=1e-14
        )

    def test_round_trip(self):
        rng = np.random.default_rng(5)
        x = complex_gaussian(rng, 8)
        assert np.linalg.norm(dft(idft(x)) - x) <= 1e-12 * np.linalg.norm(x)
        assert np.linalg.norm(idft(dft(x)) - x) <= 1e-12 * np.linalg.norm(x)

    def test_rejects_non_finite(self):
        with pytest.raises(ValueError):
            dft([np.nan, 0.0])


class TestCirculantAndShift:
    def test_known_four_by_four(self):
        assert_allclose(circulant(idft([0, 1, 0, 0])), CIRCULANT_4, atol=1e-14)

    def test_size_one(self):
        assert_allclose(circulant([2.5]), np.array([[2.5]]), atol=0)

    def test_columns_are_successive_shifts(self):
        rng = np.random.default_rng(9)
        c = complex_gaussian(rng, 6)
        mat = circulant(c)
        assert_allclose(mat[:, 0], c, atol=0)
        for k in range(5):
            assert_allclose(right_shift(mat[:, k]), mat[:, k + 1], atol=0)
        assert_allclose(right_shift(mat[:, 5]), mat[:, 0], atol=0)

    def test_spectrum_is_transform_of_symbol(self):
        # independent oracle: LAPACK general eigensolver
        rng = np.random.default_rng(13)
        for n in range(1, 17):
            c = complex_gaussian(rng, n)
            eig = np.sort_complex(np.linalg.eigvals(circulant(c)))
            expected = np.sort_complex(dft(c))
            assert np.max(np.abs(eig - expected)) <= 1e-9

    def test_shift_basics(self):
        assert_allclose(right_shift([1, 2, 3]), [3, 1, 2], atol=0)
        rng = np.random.default_rng(1)
        x = complex_gaussian(rng, 7)
        y = x
        for _ in range(7):
            y = right_shift(y)
        assert_allclose(y, x, atol=0)


class TestOrthogonalComplement:
    def test_full_rank_square_has_empty_complement(self):
        assert orthogonal_complement(np.eye(4)).shape == (4, 0)

    def test_zero_matrix_gives_full_space(self):
        basis = orthogonal_complement(np.zeros((3, 2)))
        assert basis.shape == (3, 3)
        assert_allclose(basis.conj().T @ basis, np.eye(3), atol=1e-13)

    def test_known_rank_one_range(self):
        basis = orthogonal_complement(CIRCULANT_4)
        assert basis.shape == (4, 3)
        assert_allclose(basis.conj().T @ basis, np.eye(3), atol=1e-12)
        assert np.max(np.abs(basis.conj().T @ KERNEL_DIRECTION_4)) <= 1e-10

    def test_complement_of_complement_restores_span(self):
        rng = np.random.default_rng(21)
        m = complex_gaussian(rng, (6, 3))
        comp = orthogonal_complement(m)
        restored = orthogonal_complement(comp)
        assert subspace_distance(restored, m) <= 1e-9

    def test_circulant_range_is_shift_invariant(self):
        rng = np.random.default_rng(17)
        for n in (3, 5, 8):
            c = complex_gaussian(rng, n)
            mat = circulant(c)
            z = complex_gaussian(rng, n)
            y = right_shift(mat @ z)
            basis = orthogonal_complement(orthogonal_complement(mat))
            outside = y - basis @ (basis.conj().T @ y)
            assert np.linalg.norm(outside) <= 1e-9 * max(1.0, np.linalg.norm(y))


class TestOperatorNorm:
    def test_unitary(self):
        theta = 0.7
        rot = np.array([[np.cos(theta), -np.sin(theta)], [np.sin(theta), np.cos(theta)]])
        assert abs(operator_norm(rot) - 1.0) <= 1e-10

    def test_diagonal(self):
        assert abs(operator_norm(np.diag([2.0, 3.0])) - 3.0) <= 1e-12

    def test_frobenius_envelope(self):
        rng = np.random.default_rng(23)
        m = complex_gaussian(rng, (5, 3))
        fro2 = np.linalg.norm(m) ** 2
        top2 = operator_norm(m) ** 2
        assert fro2 / 3 - 1e-12 <= top2 <= fro2 + 1e-12


def test_numerical_rank():
    assert numerical_rank(np.eye(3)) == 3
    assert numerical_rank(np.zeros((3, 3))) == 0
    assert numerical_rank(CIRCULANT_4) == 1
