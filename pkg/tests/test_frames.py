import numpy as np
import pytest
from numpy.testing import assert_allclose

from cyclicframes import (
    Frame,
    NotAFrameError,
    canonical_dual,
    canonical_tight,
    classify,
    frame_bounds,
    frame_operator,
    gram_matrix,
)
from golden import (
    MERCEDES_BENZ,
    ORBIT_3,
    S_3,
    S_3_INV_SEED,
    SIMPLEX_2_SYNTHESIS,
    TIGHT_2_COLUMNS,
    TIGHT_2_COLUMNS_SWAPPED,
    TIGHT_3,
    match_columns_up_to_permutation,
)

from corpus import complex_gaussian, random_frames


def test_frame_operator_of_orthonormal_basis():
    assert_allclose(frame_operator(Frame(np.eye(3))), np.eye(3), atol=0)


def test_frame_operator_of_simplex_system():
    assert_allclose(
        frame_operator(Frame(SIMPLEX_2_SYNTHESIS)), [[2, 1], [1, 2]], atol=0
    )


def test_frame_operator_known_three_dim():
    assert_allclose(frame_operator(Frame(ORBIT_3)), S_3, atol=1e-14)


class TestFrameBounds:
    def test_three_equal_norm_plane_directions_are_tight(self):
        bounds = frame_bounds(Frame(MERCEDES_BENZ))
        assert abs(bounds.lower - 1.0) <= 1e-9
        assert abs(bounds.upper - 1.0) <= 1e-9

    def test_simplex_bounds(self):
        bounds = frame_bounds(Frame(SIMPLEX_2_SYNTHESIS))
        assert abs(bounds.lower - 1.0) <= 1e-12
        assert abs(bounds.upper - 3.0) <= 1e-12

    def test_underfilled_system_is_not_a_frame(self):
        bounds = frame_bounds(Frame(np.array([[1.0], [0.0], [0.0]])))
        assert bounds.lower <= 1e-15


class TestCanonicalDual:
    def test_parseval_frame_is_self_dual(self):
        dual = canonical_dual(Frame(MERCEDES_BENZ))
        assert_allclose(dual.synthesis, MERCEDES_BENZ, atol=1e-12)

    def test_known_dual_seed(self):
        dual = canonical_dual(Frame(ORBIT_3))
        assert_allclose(dual.synthesis[:, 0], S_3_INV_SEED, atol=1e-12)

    @pytest.mark.parametrize("d", range(1, 7))
    def test_simplex_dual_seed_closed_form(self, d):
        # dual_seed = f1 - (f1 + ... + fd) / (d+1) for the standard basis system
        syn = np.hstack([np.eye(d), -np.ones((d, 1))])
        dual = canonical_dual(Frame(syn))
        expected = np.eye(d)[:, 0] - np.ones(d) / (d + 1)
        assert_allclose(dual.synthesis[:, 0], expected, atol=1e-12)

    def test_not_a_frame_raises(self):
        with pytest.raises(NotAFrameError):
            canonical_dual(Frame(np.array([[1.0], [0.0]])))


class TestCanonicalTight:
    def test_parseval_fixed_point(self):
        tight = canonical_tight(Frame(MERCEDES_BENZ))
        assert_allclose(tight.synthesis, MERCEDES_BENZ, atol=1e-12)

    def test_two_dim_simplex(self):
        tight = canonical_tight(Frame(SIMPLEX_2_SYNTHESIS))
        assert_allclose(tight.synthesis.real, TIGHT_2_COLUMNS, atol=1e-12)
        assert np.abs(tight.synthesis.imag).max() <= 1e-14
        # same vector set as the swapped-root convention, different order
        match_columns_up_to_permutation(tight.synthesis.real, TIGHT_2_COLUMNS_SWAPPED, 1e-12)

    def test_three_dim_known_result(self):
        tight = canonical_tight(Frame(ORBIT_3))
        assert_allclose(tight.synthesis, TIGHT_3, atol=1e-12)


class TestClassify:
    def test_orthonormal_basis(self):
        report = classify(Frame(np.eye(3)))
        assert report.is_frame and report.is_tight and report.is_parseval
        assert report.is_uniform and report.is_equiangular
        assert report.equiangular_modulus == 0.0

    def test_tight_simplex_is_equiangular(self):
        report = classify(canonical_tight(Frame(np.hstack([np.eye(3), -np.ones((3, 1))]))))
        assert report.is_tight and report.is_parseval
        assert report.is_uniform and report.is_equiangular

    def test_uniform_but_not_equiangular(self):
        # norms (1, 1, 1) but Gram moduli {1, 0, 0}
        syn = np.array([[1.0, 1.0, 0.0], [0.0, 0.0, 1.0]])
        report = classify(Frame(syn))
        assert report.is_frame and report.is_uniform
        assert not report.is_equiangular

    def test_zero_column_breaks_uniformity(self):
        report = classify(Frame(np.array([[1.0, 0.0], [0.0, 0.0]])))
        assert not report.is_uniform

    def test_all_zero_system_is_uniform(self):
        report = classify(Frame(np.zeros((2, 3))))
        assert report.is_uniform and not report.is_frame

    def test_single_vector_is_vacuously_equiangular(self):
        report = classify(Frame(np.array([[1.0]])))
        assert report.is_equiangular
        assert report.gram_offdiag.count == 0

    def test_implications_on_random_systems(self):
        for frame in random_frames(99, 25):
            report = classify(frame)
            if report.is_parseval:
                assert report.is_tight
            if report.is_equiangular:
                assert report.is_uniform


class TestProperties:
    def test_dual_reconstruction_sweep(self):
        for frame in random_frames(2024, 100, max_d=6, max_n=12):
            dual = canonical_dual(frame)
            resid = np.linalg.norm(
                frame.synthesis @ dual.synthesis.conj().T - np.eye(frame.d)
            )
            assert resid <= 1e-8

    def test_canonical_tight_is_parseval(self):
        for frame in random_frames(31337, 60):
            bounds = frame_bounds(canonical_tight(frame))
            assert abs(bounds.lower - 1.0) <= 1e-8
            assert abs(bounds.upper - 1.0) <= 1e-8
            assert classify(canonical_tight(frame)).is_parseval

    def test_bounds_never_shrink_when_appending(self):
        rng = np.random.default_rng(55)
        for _ in range(40):
            d = int(rng.integers(1, 6))
            n = int(rng.integers(d, 9))
            syn = complex_gaussian(rng, (d, n))
            before = frame_bounds(Frame(syn))
            extended = np.hstack([syn, complex_gaussian(rng, (d, 1))])
            after = frame_bounds(Frame(extended))
            assert after.lower >= before.lower - 1e-10
            assert after.upper >= before.upper - 1e-10


def test_gram_matrix_diagonal_is_squared_norms():
    rng = np.random.default_rng(8)
    syn = complex_gaussian(rng, (3, 5))
    gram = gram_matrix(Frame(syn))
    assert_allclose(
        np.diag(gram).real, np.linalg.norm(syn, axis=0) ** 2, atol=1e-12
    )


def test_rejects_non_finite_entries():
    with pytest.raises(ValueError):
        Frame(np.array([[np.inf, 0.0]]))
