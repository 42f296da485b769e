"""
Tests for state construction, reduction and sampling
"""

import math

import numpy as np
import pytest

from qmonogamy.error_handler import InvalidInputError
from qmonogamy.qstate import (
    PureState,
    DensityMatrix,
    SchmidtParams,
    schmidt_state,
    basis_state,
    tensor,
    density_of,
    partial_trace,
    haar_random_state,
    purity,
    spectrum,
    schmidt_coefficients,
)

SQRT_HALF = math.sqrt(2) / 2


@pytest.fixture
def example_state():
    return schmidt_state(SchmidtParams.example())


@pytest.fixture
def bell_state():
    return PureState(2, np.array([SQRT_HALF, 0, 0, SQRT_HALF]))


class TestModels:
    def test_pure_state_rejects_wrong_length(self):
        """Amplitude count must be 2^n"""
        with pytest.raises(InvalidInputError):
            PureState(2, np.array([1.0, 0.0]))

    def test_pure_state_rejects_unnormalized(self):
        """Squared norm must be 1"""
        with pytest.raises(InvalidInputError):
            PureState(1, np.array([1.0, 1.0]))

    def test_pure_state_is_read_only(self, bell_state):
        """Amplitudes cannot be modified after construction"""
        with pytest.raises(ValueError):
            bell_state.amplitudes[0] = 0.0

    def test_density_matrix_rejects_non_hermitian(self):
        with pytest.raises(InvalidInputError):
            DensityMatrix(2, np.array([[0.5, 0.5], [0.0, 0.5]]))

    def test_density_matrix_rejects_negative_eigenvalue(self):
        with pytest.raises(InvalidInputError):
            DensityMatrix(2, np.diag([1.5, -0.5]))

    def test_density_matrix_rejects_bad_trace(self):
        with pytest.raises(InvalidInputError):
            DensityMatrix(2, np.diag([0.5, 0.4]))

    def test_schmidt_params_reject_unnormalized(self):
        """Sum of squared amplitudes must be 1"""
        with pytest.raises(InvalidInputError):
            SchmidtParams(0.5, 0.0, 0.0, 0.0, 0.0)

    def test_schmidt_params_reject_negative(self):
        with pytest.raises(InvalidInputError):
            SchmidtParams(-1.0, 0.0, 0.0, 0.0, 0.0)

    def test_schmidt_params_phase_wrapped(self):
        """Phase is reduced into [0, 2 pi)"""
        params = SchmidtParams(1.0, 0.0, 0.0, 0.0, 0.0, phi=-math.pi / 2)
        assert params.phi == pytest.approx(3 * math.pi / 2)

    @pytest.mark.parametrize("phi", [-1e-20, -0.0, 2 * math.pi])
    def test_schmidt_params_phase_stays_below_two_pi(self, phi):
        assert SchmidtParams(1.0, 0.0, 0.0, 0.0, 0.0, phi=phi).phi == 0.0


class TestSchmidtState:
    def test_example_amplitudes(self, example_state):
        """Worked-example parameters place 1/2, sqrt(2)/2, 1/2 at |000>, |101>, |110>"""
        expected = np.zeros(8)
        expected[0b000] = 0.5
        expected[0b101] = SQRT_HALF
        expected[0b110] = 0.5
        assert np.allclose(example_state.amplitudes, expected, atol=1e-15)

    def test_product_member(self):
        state = schmidt_state(SchmidtParams(1.0, 0.0, 0.0, 0.0, 0.0))
        assert np.array_equal(state.amplitudes, basis_state("000").amplitudes)

    def test_ghz_like_member(self):
        state = schmidt_state(SchmidtParams(SQRT_HALF, 0.0, 0.0, 0.0, SQRT_HALF))
        assert state.amplitudes[0b000] == pytest.approx(SQRT_HALF)
        assert state.amplitudes[0b111] == pytest.approx(SQRT_HALF)
        assert np.count_nonzero(state.amplitudes) == 2

    def test_phase_on_lambda1(self):
        """lambda1 carries the phase at |100>"""
        params = SchmidtParams(SQRT_HALF, SQRT_HALF, 0.0, 0.0, 0.0, phi=math.pi / 2)
        state = schmidt_state(params)
        assert state.amplitudes[0b100] == pytest.approx(1j * SQRT_HALF)


class TestDensityOf:
    def test_basis_state(self):
        rho = density_of(basis_state("0"))
        assert np.allclose(rho.entries, np.diag([1.0, 0.0]))

    def test_plus_state(self):
        plus = PureState(1, np.array([SQRT_HALF, SQRT_HALF]))
        assert np.allclose(density_of(plus).entries, np.full((2, 2), 0.5))

    def test_trace_and_rank(self):
        """Projectors have unit trace, rank 1 and purity 1"""
        for seed in range(20):
            rho = density_of(haar_random_state(3, seed))
            assert np.trace(rho.entries).real == pytest.approx(1.0, abs=1e-12)
            assert np.linalg.matrix_rank(rho.entries, tol=1e-10) == 1
            assert purity(rho) == pytest.approx(1.0, abs=1e-12)


class TestPartialTrace:
    def test_bell_marginal(self, bell_state):
        """Maximally entangled pair has a maximally mixed marginal"""
        rho = partial_trace(bell_state, 2, [0])
        assert np.allclose(rho.entries, np.diag([0.5, 0.5]), atol=1e-15)

    def test_product_marginal(self):
        """Tracing out one factor of a product reproduces the other factor"""
        first = haar_random_state(2, 1)
        second = haar_random_state(1, 2)
        product = tensor(first, second)
        assert np.allclose(partial_trace(product, 3, (0, 1)).entries,
                           density_of(first).entries, atol=1e-12)
        assert np.allclose(partial_trace(product, 3, [2]).entries,
                           density_of(second).entries, atol=1e-12)

    def test_example_ab_marginal(self, example_state):
        """Tr_C of the example state: diagonal (1/4, 0, 1/2, 1/4), <00|rho|11> = 1/4"""
        rho = partial_trace(example_state, 3, (0, 1)).entries
        assert np.allclose(np.diag(rho).real, [0.25, 0.0, 0.5, 0.25], atol=1e-15)
        assert rho[0, 3] == pytest.approx(0.25)
        assert np.linalg.matrix_rank(rho, tol=1e-10) == 2

    def test_density_branch_matches_pure_branch(self):
        state = haar_random_state(4, 11)
        from_pure = partial_trace(state, 4, (0, 2))
        from_density = partial_trace(density_of(state), 4, (0, 2))
        assert np.allclose(from_pure.entries, from_density.entries, atol=1e-13)

    def test_kept_qubits_in_ascending_order(self):
        """keep=(2, 0) and keep=(0, 2) give the same matrix"""
        state = haar_random_state(3, 5)
        assert np.array_equal(partial_trace(state, 3, (2, 0)).entries,
                              partial_trace(state, 3, (0, 2)).entries)

    def test_complementary_spectra(self):
        """Both sides of a bipartition share their nonzero eigenvalues"""
        for seed in range(10):
            state = haar_random_state(5, seed)
            left = spectrum(partial_trace(state, 5, (0, 1)), drop_zeros=True)
            right = spectrum(partial_trace(state, 5, (2, 3, 4)), drop_zeros=True)
            assert left.shape == right.shape
            assert np.allclose(left, right, atol=1e-10)

    @pytest.mark.parametrize("keep", [[], [0, 1, 2], [3], [-1]])
    def test_invalid_keep(self, example_state, keep):
        with pytest.raises(InvalidInputError):
            partial_trace(example_state, 3, keep)

    def test_dimension_mismatch(self, bell_state):
        with pytest.raises(InvalidInputError):
            partial_trace(bell_state, 3, [0])


class TestHaarRandomState:
    def test_deterministic(self):
        assert np.array_equal(haar_random_state(3, 7).amplitudes, haar_random_state(3, 7).amplitudes)

    def test_different_seeds_differ(self):
        assert not np.array_equal(haar_random_state(3, 7).amplitudes, haar_random_state(3, 8).amplitudes)

    def test_normalized(self):
        for seed in range(50):
            psi = haar_random_state(4, seed).amplitudes
            assert abs(np.vdot(psi, psi).real - 1.0) <= 1e-12

    @pytest.mark.parametrize("n", [0, 13])
    def test_size_out_of_range(self, n):
        with pytest.raises(InvalidInputError):
            haar_random_state(n, 0)

    def test_mean_marginal_purity(self):
        """Haar average of Tr(rho_A^2) for two qubits is 4/5"""
        values = [purity(partial_trace(haar_random_state(2, [2024, i]), 2, [0])) for i in range(10000)]
        assert np.mean(values) == pytest.approx(0.8, abs=0.01)


class TestPurity:
    def test_maximally_mixed_qubit(self):
        assert purity(DensityMatrix(2, np.eye(2) / 2)) == pytest.approx(0.5)

    def test_example_marginal(self, example_state):
        """rho_A of the example state has purity 1 - (3/4)/2 = 5/8"""
        assert purity(partial_trace(example_state, 3, [0])) == pytest.approx(5 / 8, abs=1e-12)

    def test_schmidt_coefficients(self, example_state):
        """Squared Schmidt coefficients across A|BC are the spectrum of rho_A"""
        squares = schmidt_coefficients(example_state, [0]) ** 2
        assert np.allclose(squares, [0.75, 0.25], atol=1e-12)
