"""
Tests for concurrence, Tsallis entropies and the assistance oracle
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
    density_of,
    partial_trace,
    haar_random_state,
    random_local_unitary,
    conjugate,
)
from qmonogamy.measures import (
    EoaConfig,
    AssistanceEstimate,
    concurrence_pure,
    concurrence_wootters,
    tsallis_entropy,
    tsallis_entanglement_pure,
    teoa_oracle,
    ensemble_value,
    explicit_ensemble,
    family_correlations_concurrence,
    family_correlations_teoa2,
    numeric_correlations_concurrence,
    numeric_correlations_teoa2,
)

SQRT_HALF = math.sqrt(2) / 2


def random_params(rng):
    lambdas = np.abs(rng.standard_normal(5))
    lambdas /= np.linalg.norm(lambdas)
    return SchmidtParams(*(float(x) for x in lambdas), phi=float(rng.uniform(0, 2 * math.pi)))


@pytest.fixture
def example_state():
    return schmidt_state(SchmidtParams.example())


@pytest.fixture
def bell_state():
    return PureState(2, np.array([SQRT_HALF, 0, 0, SQRT_HALF]))


class TestConcurrencePure:
    def test_example_joint(self, example_state):
        """C_A|BC of the example state is sqrt(3)/2"""
        assert concurrence_pure(example_state, [0]) == pytest.approx(math.sqrt(3) / 2, abs=1e-12)

    def test_bell(self, bell_state):
        assert concurrence_pure(bell_state, [0]) == pytest.approx(1.0, abs=1e-12)

    def test_product(self):
        assert concurrence_pure(basis_state("000"), [0]) == 0.0

    def test_matches_purity_form(self):
        """2 sqrt(sum s_i^2 s_j^2) equals sqrt(2 (1 - Tr rho^2))"""
        for seed in range(20):
            state = haar_random_state(4, seed)
            rho = partial_trace(state, 4, (0, 1)).entries
            expected = math.sqrt(2 * (1 - np.sum(np.abs(rho) ** 2)))
            assert concurrence_pure(state, (0, 1)) == pytest.approx(expected, abs=1e-10)

    def test_invalid_cut(self, example_state):
        with pytest.raises(InvalidInputError):
            concurrence_pure(example_state, [0, 1, 2])


class TestConcurrenceWootters:
    def test_bell(self, bell_state):
        assert concurrence_wootters(density_of(bell_state)) == pytest.approx(1.0, abs=1e-12)

    def test_maximally_mixed(self):
        assert concurrence_wootters(DensityMatrix(4, np.eye(4) / 4)) == pytest.approx(0.0, abs=1e-15)

    def test_example_marginal(self, example_state):
        """The Tr_C marginal pairs lambda0 with lambda3: 2 * 1/2 * 1/2"""
        rho = partial_trace(example_state, 3, (0, 1))
        assert concurrence_wootters(rho) == pytest.approx(0.5, abs=1e-10)

    def test_product_route_agrees(self):
        """Both eigenvalue routes give the same concurrence up to root-of-roundoff error"""
        for seed in range(20):
            rho = partial_trace(haar_random_state(3, seed), 3, (0, 2))
            assert concurrence_wootters(rho, method="product") == pytest.approx(
                concurrence_wootters(rho), abs=1e-6)

    def test_local_unitary_invariance(self):
        for seed in range(20):
            rho = partial_trace(haar_random_state(4, seed), 4, (1, 3))
            rotated = conjugate(rho, random_local_unitary(2, seed + 100))
            assert concurrence_wootters(rotated) == pytest.approx(concurrence_wootters(rho), abs=1e-10)

    def test_rejects_wrong_dimension(self):
        with pytest.raises(InvalidInputError):
            concurrence_wootters(DensityMatrix(2, np.eye(2) / 2))

    def test_rejects_unknown_method(self, bell_state):
        with pytest.raises(InvalidInputError):
            concurrence_wootters(density_of(bell_state), method="svd")


class TestTsallis:
    def test_pure_state_entropy_zero(self):
        rho = density_of(haar_random_state(2, 3))
        for q in (0.5, 1.0, 2.0, 3.0):
            assert tsallis_entropy(rho, q) == pytest.approx(0.0, abs=1e-12)

    def test_maximally_mixed_qubit(self):
        rho = DensityMatrix(2, np.eye(2) / 2)
        assert tsallis_entropy(rho, 2.0) == pytest.approx(0.5)
        assert tsallis_entropy(rho, 1.0) == pytest.approx(math.log(2))

    @pytest.mark.parametrize("q", [1 - 1e-6, 1 + 1e-6])
    def test_continuity_at_one(self, q):
        """Near q = 1 the entropy approaches ln 2 (the offset is of order |q - 1|)"""
        rho = DensityMatrix(2, np.eye(2) / 2)
        assert tsallis_entropy(rho, q) == pytest.approx(math.log(2), abs=1e-6)

    @pytest.mark.parametrize("q", [0.0, -1.0])
    def test_rejects_nonpositive_q(self, q):
        with pytest.raises(InvalidInputError):
            tsallis_entropy(DensityMatrix(2, np.eye(2) / 2), q)

    def test_small_eigenvalue_counts_at_small_q(self):
        """An eigenvalue of 1e-11 still contributes 10^-1.1 / 0.9 at q = 0.1"""
        rho = DensityMatrix(2, np.diag([1 - 1e-11, 1e-11]))
        assert tsallis_entropy(rho, 0.1) == pytest.approx(0.088259, rel=1e-5)

    def test_example_entanglement(self, example_state):
        """T_2 across A|BC of the example state is 3/8"""
        assert tsallis_entanglement_pure(example_state, [0], 2.0) == pytest.approx(0.375, abs=1e-12)

    def test_bell_entanglement(self, bell_state):
        assert tsallis_entanglement_pure(bell_state, [0], 2.0) == pytest.approx(0.5, abs=1e-12)

    def test_product_entanglement(self):
        for q in (0.5, 1.0, 2.0):
            assert tsallis_entanglement_pure(basis_state("01"), [0], q) == pytest.approx(0.0, abs=1e-15)

    def test_t2_is_half_concurrence_squared(self):
        for seed in range(50):
            state = haar_random_state(2, seed)
            c = concurrence_pure(state, [0])
            assert tsallis_entanglement_pure(state, [0], 2.0) == pytest.approx(c * c / 2, abs=1e-12)


class TestAssistanceOracle:
    @pytest.fixture
    def quick_config(self):
        return EoaConfig(ensemble_size=4, restarts=3, max_iterations=150)

    def test_pure_input(self, quick_config):
        """A rank-one input has a single-member ensemble"""
        state = haar_random_state(2, 4)
        estimate = teoa_oracle(density_of(state), 2.0, quick_config)
        assert isinstance(estimate, AssistanceEstimate)
        assert estimate.converged
        assert float(estimate) == pytest.approx(tsallis_entanglement_pure(state, [0], 2.0), abs=1e-12)

    def test_product_support(self, quick_config):
        """|0><0| (x) I/2 only decomposes into product vectors"""
        rho = DensityMatrix(4, np.diag([0.5, 0.5, 0.0, 0.0]))
        assert teoa_oracle(rho, 2.0, quick_config).value == pytest.approx(0.0, abs=1e-12)

    def test_explicit_branch_ensemble(self):
        """{1/2|00> + 1/2|11>, sqrt(2)/2|10>} evaluates to 1/2 * 1/2 + 1/2 * 0"""
        ensemble = explicit_ensemble([[0.5, 0, 0, 0.5], [0, 0, SQRT_HALF, 0]])
        assert ensemble_value(ensemble, 2.0) == pytest.approx(0.25, abs=1e-12)

    def test_example_marginal_lower_bound(self, example_state):
        """The oracle reaches the eigen-branch value on the example Tr_C marginal"""
        rho = partial_trace(example_state, 3, (0, 1))
        estimate = teoa_oracle(rho, 2.0, EoaConfig(), seed=0)
        assert estimate.value >= 0.25 - 1e-6

    def test_monotone_in_restarts(self, example_state):
        rho = partial_trace(haar_random_state(3, 9), 3, (0, 1))
        fewer = teoa_oracle(rho, 2.0, EoaConfig(ensemble_size=4, restarts=2, max_iterations=100), seed=5)
        more = teoa_oracle(rho, 2.0, EoaConfig(ensemble_size=4, restarts=5, max_iterations=100), seed=5)
        assert more.value >= fewer.value

    def test_deterministic(self, quick_config):
        rho = partial_trace(haar_random_state(3, 2), 3, (0, 2))
        assert teoa_oracle(rho, 2.0, quick_config, seed=1) == teoa_oracle(rho, 2.0, quick_config, seed=1)

    def test_returns_attaining_ensemble(self, quick_config):
        """The reported ensemble decomposes the input and evaluates to the reported value"""
        rho = partial_trace(haar_random_state(3, 2), 3, (0, 2))
        estimate = teoa_oracle(rho, 2.0, quick_config, seed=1)
        assert ensemble_value(estimate.ensemble, 2.0) == pytest.approx(estimate.value, abs=1e-12)
        np.testing.assert_allclose(estimate.ensemble.T @ estimate.ensemble.conj(), rho.entries, atol=1e-9)

    def test_pure_input_ensemble(self, quick_config):
        state = haar_random_state(2, 4)
        estimate = teoa_oracle(density_of(state), 2.0, quick_config)
        assert estimate.ensemble.shape == (1, 4)

    def test_rejects_wrong_dimension(self):
        with pytest.raises(InvalidInputError):
            teoa_oracle(DensityMatrix(2, np.eye(2) / 2), 2.0)

    def test_config_validation(self):
        with pytest.raises(InvalidInputError):
            EoaConfig(restarts=0)


class TestFamily:
    def test_example_concurrence(self):
        """(sqrt(3)/2, sqrt(2)/2, 1/2) for the worked example"""
        values = family_correlations_concurrence(SchmidtParams.example())
        assert values.q_joint == pytest.approx(math.sqrt(3) / 2, rel=1e-15)
        assert values.q_ab == pytest.approx(SQRT_HALF, rel=1e-15)
        assert values.q_ac == pytest.approx(0.5, rel=1e-15)

    def test_example_teoa2(self):
        """(3/8, 1/4, 1/8) for the worked example"""
        values = family_correlations_teoa2(SchmidtParams.example())
        assert values.q_joint == pytest.approx(0.375, rel=1e-15)
        assert values.q_ab == pytest.approx(0.25, rel=1e-15)
        assert values.q_ac == pytest.approx(0.125, rel=1e-15)

    def test_product_member(self):
        params = SchmidtParams(0.6, 0.8, 0.0, 0.0, 0.0)
        for evaluate in (family_correlations_concurrence, family_correlations_teoa2):
            values = evaluate(params)
            assert (values.q_joint, values.q_ab, values.q_ac) == (0.0, 0.0, 0.0)

    def test_closed_form_identities(self):
        rng = np.random.default_rng(31)
        for _ in range(200):
            params = random_params(rng)
            l0, l4 = params.lambda0, params.lambda4
            c = family_correlations_concurrence(params)
            assert c.q_joint ** 2 == pytest.approx(c.q_ab ** 2 + c.q_ac ** 2 + (2 * l0 * l4) ** 2, abs=1e-14)
            t = family_correlations_teoa2(params)
            assert t.q_joint == pytest.approx(t.q_ab + t.q_ac - 2 * l0 ** 2 * l4 ** 2, abs=1e-14)

    def test_first_principles_match_closed_forms(self):
        """Sorted Wootters pair matches {2 l0 l2, 2 l0 l3}; the pure cut matches 2 l0 sqrt(l2^2 + l3^2 + l4^2)"""
        rng = np.random.default_rng(8)
        for _ in range(1000):
            params = random_params(rng)
            analytic = family_correlations_concurrence(params)
            numeric = numeric_correlations_concurrence(params)
            assert numeric.q_joint == pytest.approx(analytic.q_joint, abs=1e-12)
            assert np.allclose(numeric.pairwise_sorted(), analytic.pairwise_sorted(), rtol=0, atol=1e-10)

    def test_numeric_teoa2_joint(self):
        """The joint assistance value of a pure state is T_2 of rho_A"""
        config = EoaConfig(ensemble_size=4, restarts=2, max_iterations=50)
        numeric = numeric_correlations_teoa2(SchmidtParams.example(), config)
        assert numeric.q_joint == pytest.approx(0.375, abs=1e-12)
        assert numeric.q_ab >= 0.0 and numeric.q_ac >= 0.0

    def test_pairwise_sorted(self):
        values = family_correlations_concurrence(SchmidtParams.example())
        assert values.pairwise_sorted() == (values.q_ab, values.q_ac)
