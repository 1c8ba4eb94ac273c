import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from egf.qlinalg import (
    ConvergenceError,
    DensityMatrix,
    Ensemble,
    NormalizationError,
    PureState,
    Spectrum,
    apply_local_unitary,
    binary_entropy,
    hermitian_eigensystem,
    hermitian_eigenvalues,
    partial_trace,
    permute_qubits,
    projector,
    random_pure_state,
    random_unitary,
    tensor,
    von_neumann_entropy,
)
from helpers import basis_state, ghz, random_density

# frozen from a 60-digit evaluation of -x log2 x - (1-x) log2 (1-x)
H_QUARTER = 0.8112781244591328
H_08 = 0.7219280948873623


class TestBinaryEntropy:
    def test_endpoints_are_zero(self):
        assert binary_entropy(0.0) == 0.0
        assert binary_entropy(1.0) == 0.0

    def test_symmetric_maximum(self):
        assert binary_entropy(0.5) == 1.0

    def test_quarter(self):
        assert abs(binary_entropy(0.25) - H_QUARTER) < 1e-12

    def test_clamps_tiny_excursions(self):
        assert binary_entropy(-1e-13) == 0.0
        assert binary_entropy(1.0 + 1e-13) == 0.0

    @pytest.mark.parametrize("x", [-1e-9, 1.0 + 1e-9, 2.0, -1.0])
    def test_domain_error(self, x):
        with pytest.raises(ValueError):
            binary_entropy(x)

    @given(st.floats(min_value=0.0, max_value=1.0))
    def test_symmetry(self, x):
        assert abs(binary_entropy(x) - binary_entropy(1.0 - x)) < 1e-12

    @given(st.floats(min_value=0.0, max_value=1.0))
    def test_range(self, x):
        assert 0.0 <= binary_entropy(x) <= 1.0


class TestPureState:
    def test_renormalizes_small_drift(self):
        amps = np.array([1.0 + 3e-7, 0.0], dtype=complex)
        psi = PureState(1, amps)
        assert abs(np.sum(np.abs(psi.amps) ** 2) - 1.0) < 1e-9

    def test_rejects_large_drift(self):
        with pytest.raises(NormalizationError):
            PureState(1, np.array([1.1, 0.0]))

    def test_rejects_wrong_length(self):
        with pytest.raises(ValueError):
            PureState(2, np.array([1.0, 0.0]))

    def test_amplitudes_read_only(self):
        psi = basis_state(1, 0)
        with pytest.raises(ValueError):
            psi.amps[0] = 0.0

    def test_from_amplitudes_infers_qubit_count(self):
        psi = PureState.from_amplitudes([0.5, 0.5, 0.5, 0.5])
        assert psi.n == 2

    def test_from_amplitudes_rejects_non_power_of_two(self):
        with pytest.raises(ValueError):
            PureState.from_amplitudes([1.0, 0.0, 0.0])


class TestDensityMatrix:
    def test_rejects_non_hermitian(self):
        mat = np.array([[0.5, 0.1], [0.3, 0.5]], dtype=complex)
        with pytest.raises(ValueError, match="Hermitian"):
            DensityMatrix(("q0",), mat)

    def test_rejects_bad_trace(self):
        with pytest.raises(ValueError, match="trace"):
            DensityMatrix(("q0",), np.eye(2, dtype=complex))

    def test_rejects_duplicate_labels(self):
        with pytest.raises(ValueError):
            DensityMatrix(("a", "a"), np.eye(4, dtype=complex) / 4)

    def test_random_spectrum_is_distribution(self):
        for seed in range(5):
            rho = DensityMatrix(("x", "y"), random_density(4, seed))
            spec = hermitian_eigenvalues(rho)
            assert abs(sum(spec.eigenvalues) - 1.0) < 1e-9
            assert all(0.0 <= v <= 1.0 for v in spec.eigenvalues)


class TestSpectrum:
    def test_clamps_noise(self):
        spec = Spectrum.from_values([1.0 + 5e-11, -5e-11])
        assert spec.eigenvalues == (1.0, 0.0)

    def test_rejects_real_violations(self):
        with pytest.raises(ValueError):
            Spectrum.from_values([1.0, -1e-6])

    def test_renormalizes_drift(self):
        spec = Spectrum.from_values([0.5 + 2e-10, 0.5])
        assert sum(spec.eigenvalues) == 1.0

    def test_rejects_bad_sum(self):
        with pytest.raises(ValueError):
            Spectrum.from_values([0.5, 0.4])

    def test_descending(self):
        spec = Spectrum.from_values([0.2, 0.5, 0.3])
        assert spec.eigenvalues == (0.5, 0.3, 0.2)


class TestPartialTrace:
    def test_product_state(self):
        psi = tensor(basis_state(1, 0), basis_state(1, 1))
        rho = projector(psi, ("A", "B"))
        reduced = partial_trace(rho, {"B"})
        assert reduced.qubits == ("A",)
        assert np.allclose(reduced.mat, [[1, 0], [0, 0]])

    def test_ghz_pair(self):
        rho = projector(ghz(), ("A", "B", "C"))
        reduced = partial_trace(rho, {"C"})
        assert np.allclose(reduced.mat, np.diag([0.5, 0, 0, 0.5]), atol=1e-12)

    def test_composition(self):
        for seed in range(10):
            rho = projector(random_pure_state(3, seed), ("A", "B", "C"))
            two_step = partial_trace(partial_trace(rho, {"B"}), {"C"})
            one_step = partial_trace(rho, {"B", "C"})
            assert np.max(np.abs(two_step.mat - one_step.mat)) < 1e-12

    def test_trace_preserved(self):
        rho = projector(random_pure_state(3, 3), ("A", "B", "C"))
        reduced = partial_trace(rho, {"A"})
        assert abs(np.trace(reduced.mat) - 1.0) < 1e-12

    def test_unknown_label(self):
        rho = projector(ghz(), ("A", "B", "C"))
        with pytest.raises(ValueError):
            partial_trace(rho, {"Z"})

    def test_cannot_trace_everything(self):
        rho = projector(ghz(), ("A", "B", "C"))
        with pytest.raises(ValueError):
            partial_trace(rho, {"A", "B", "C"})

    def test_needs_nonempty_drop(self):
        rho = projector(ghz(), ("A", "B", "C"))
        with pytest.raises(ValueError):
            partial_trace(rho, set())


class TestEigensolver:
    def test_balanced_diagonal(self):
        rho = DensityMatrix(("q0",), np.diag([0.5, 0.5]).astype(complex))
        assert hermitian_eigenvalues(rho).eigenvalues == (0.5, 0.5)

    def test_ghz_pair_spectrum(self):
        rho = partial_trace(projector(ghz(), ("A", "B", "C")), {"C"})
        spec = hermitian_eigenvalues(rho).eigenvalues
        assert np.allclose(spec, (0.5, 0.5, 0.0, 0.0), atol=1e-12)

    def test_rank_one_projector(self):
        rho = projector(random_pure_state(2, 5), ("A", "B"))
        spec = hermitian_eigenvalues(rho).eigenvalues
        assert abs(spec[0] - 1.0) < 1e-12
        assert all(v < 1e-12 for v in spec[1:])

    @pytest.mark.parametrize("dim", [2, 4, 8, 16])
    def test_matches_numpy_within_1e11(self, dim):
        worst = 0.0
        for seed in range(10):
            mat = random_density(dim, seed)
            mine = np.array(hermitian_eigenvalues(mat).eigenvalues)
            ref = np.sort(np.linalg.eigvalsh(mat))[::-1]
            worst = max(worst, float(np.max(np.abs(mine - ref))))
        assert worst < 1e-11

    def test_rejects_non_hermitian_array(self):
        with pytest.raises(ValueError):
            hermitian_eigenvalues(np.array([[0.5, 1.0], [0.0, 0.5]], dtype=complex))

    def test_eigensystem_residual(self):
        mat = random_density(8, 11)
        values, vectors = hermitian_eigensystem(mat)
        assert np.max(np.abs(mat @ vectors - vectors * values[None, :])) < 1e-10
        assert np.max(np.abs(vectors.conj().T @ vectors - np.eye(8))) < 1e-12


class TestEntropy:
    def test_pure_state_entropy_zero(self):
        assert von_neumann_entropy(projector(random_pure_state(2, 9), ("A", "B"))) == 0.0

    def test_maximally_mixed_qubit(self):
        rho = DensityMatrix(("q0",), np.eye(2, dtype=complex) / 2)
        assert abs(von_neumann_entropy(rho) - 1.0) < 1e-12

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_maximally_mixed_n_qubits(self, n):
        labels = tuple(f"q{i}" for i in range(n))
        rho = DensityMatrix(labels, np.eye(2**n, dtype=complex) / 2**n)
        assert abs(von_neumann_entropy(rho) - n) < 1e-9

    def test_ghz_like_single_qubit(self):
        amps = np.zeros(8, dtype=complex)
        amps[0] = math.sqrt(0.8)
        amps[7] = math.sqrt(0.2)
        rho = partial_trace(projector(PureState(3, amps), ("A", "B", "C")), {"B", "C"})
        assert abs(von_neumann_entropy(rho) - H_08) < 1e-12

    def test_complementary_subsystems_match(self):
        for seed in range(20):
            rho = projector(random_pure_state(3, seed), ("A", "B", "C"))
            s_pair = von_neumann_entropy(partial_trace(rho, {"C"}))
            s_single = von_neumann_entropy(partial_trace(rho, {"A", "B"}))
            assert abs(s_pair - s_single) < 1e-9


class TestLocalUnitary:
    def test_identity_is_noop(self):
        psi = random_pure_state(3, 2)
        out = apply_local_unitary(psi, 1, np.eye(2))
        assert np.allclose(out.amps, psi.amps)

    def test_bit_flip_on_last_qubit(self):
        out = apply_local_unitary(basis_state(3, 0b000), 2, np.array([[0, 1], [1, 0]]))
        assert np.allclose(out.amps, basis_state(3, 0b001).amps)

    def test_norm_preserved(self):
        psi = random_pure_state(3, 4)
        out = apply_local_unitary(psi, 0, random_unitary(2, 17))
        assert abs(np.sum(np.abs(out.amps) ** 2) - 1.0) < 1e-10

    def test_rejects_non_unitary(self):
        with pytest.raises(ValueError, match="unitary"):
            apply_local_unitary(basis_state(2, 0), 0, np.array([[1.0, 0.1], [0.0, 1.0]]))

    def test_rejects_bad_position(self):
        with pytest.raises(ValueError):
            apply_local_unitary(basis_state(2, 0), 2, np.eye(2))


class TestPermutation:
    def test_moves_bits(self):
        out = permute_qubits(basis_state(3, 0b001), (2, 0, 1))
        assert np.allclose(out.amps, basis_state(3, 0b100).amps)

    def test_inverse_roundtrip(self):
        psi = random_pure_state(3, 6)
        out = permute_qubits(permute_qubits(psi, (1, 2, 0)), (2, 0, 1))
        assert np.allclose(out.amps, psi.amps)

    def test_rejects_non_permutation(self):
        with pytest.raises(ValueError):
            permute_qubits(basis_state(2, 0), (0, 0))


class TestRandomStates:
    def test_deterministic_per_seed(self):
        a = random_pure_state(3, 123)
        b = random_pure_state(3, 123)
        assert np.array_equal(a.amps, b.amps)

    def test_distinct_seeds_differ(self):
        assert not np.allclose(random_pure_state(3, 1).amps, random_pure_state(3, 2).amps)

    def test_normalized(self):
        for seed in range(5):
            psi = random_pure_state(4, seed)
            assert abs(np.sum(np.abs(psi.amps) ** 2) - 1.0) < 1e-12

    def test_single_qubit_is_pure(self):
        psi = random_pure_state(1, 8)
        assert von_neumann_entropy(projector(psi)) == 0.0

    def test_qubit_count_bounds(self):
        with pytest.raises(ValueError):
            random_pure_state(0, 1)
        with pytest.raises(ValueError):
            random_pure_state(11, 1)

    def test_random_unitary_is_unitary(self):
        u = random_unitary(4, 3)
        assert np.max(np.abs(u.conj().T @ u - np.eye(4))) < 1e-12
        assert np.array_equal(u, random_unitary(4, 3))


class TestEnsembleType:
    def test_weights_must_sum_to_one(self):
        with pytest.raises(NormalizationError):
            Ensemble(((0.5, basis_state(1, 0)), (0.4, basis_state(1, 1))))

    def test_weights_must_be_positive(self):
        with pytest.raises(ValueError):
            Ensemble(((1.0, basis_state(1, 0)), (0.0, basis_state(1, 1))))

    def test_components_share_qubit_count(self):
        with pytest.raises(ValueError):
            Ensemble(((0.5, basis_state(1, 0)), (0.5, basis_state(2, 0))))

    def test_nonempty(self):
        with pytest.raises(ValueError):
            Ensemble(())
