import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from qft_infocalc.channels import DecoherenceParams, decohere, pauli_decompose, pauli_error
from qft_infocalc.clifford import PAULI
from qft_infocalc.states import QubitState, bell_state, density_of

S = 1 / math.sqrt(2)
times = st.floats(0, 20, allow_nan=False)


@st.composite
def qubits(draw):
    v = np.array([draw(st.floats(-1, 1)) + 1j * draw(st.floats(-1, 1)) for _ in range(2)])
    n = np.linalg.norm(v)
    if n < 1e-3:
        v, n = np.array([1.0, 0.0]), 1.0
    return QubitState.from_vector(v / n)


def test_zero_time_is_identity():
    rho = density_of(QubitState(0.6, 0.8j))
    assert np.array_equal(decohere(rho, DecoherenceParams(0.0, 1.0)).matrix, rho.matrix)


def test_off_diagonal_at_one_lifetime():
    rho = decohere(density_of(QubitState(S, S)), DecoherenceParams(2.0, 2.0))
    assert abs(rho.matrix[0, 1] - 0.5 * math.exp(-1)) <= 1e-12
    assert rho.matrix[0, 1] == pytest.approx(0.18394, abs=1e-5)


def test_long_time_limit():
    q = QubitState(0.6, 0.8)
    rho = decohere(density_of(q), DecoherenceParams(1000.0, 1.0))
    assert np.max(np.abs(rho.matrix - np.diag([0.36, 0.64]))) <= 1e-12


@pytest.mark.parametrize("tau", [0.0, -1.0, float("nan")])
def test_bad_tau_rejected(tau):
    with pytest.raises(ValueError, match="tau"):
        DecoherenceParams(1.0, tau)


def test_negative_time_rejected():
    with pytest.raises(ValueError):
        DecoherenceParams(-1.0, 1.0)


def test_two_qubit_state_rejected():
    with pytest.raises(ValueError):
        decohere(bell_state(), DecoherenceParams(1.0, 1.0))


@given(qubits(), times)
def test_trace_hermiticity_and_spectrum(q, t):
    rho = decohere(density_of(q), DecoherenceParams(t, 1.3)).matrix
    assert np.trace(rho).real == pytest.approx(1.0, abs=1e-15)
    assert np.array_equal(rho, rho.conj().T)
    w = np.linalg.eigvalsh(rho)
    assert w.min() >= -1e-12 and w.max() <= 1 + 1e-12


@given(qubits(), times, times)
def test_semigroup(q, t1, t2):
    tau = 0.7
    rho = density_of(q)
    twice = decohere(decohere(rho, DecoherenceParams(t1, tau)), DecoherenceParams(t2, tau))
    once = decohere(rho, DecoherenceParams(t1 + t2, tau))
    assert np.max(np.abs(twice.matrix - once.matrix)) <= 1e-12


# --- Pauli errors -----------------------------------------------------------------


def test_bit_flip():
    out = pauli_error(1, QubitState(0.6, 0.8j))
    assert np.allclose(out.state.vector, [0.8j, 0.6]) and out.phase == 1


def test_sigma2_phase_factored():
    out = pauli_error(2, QubitState(0.6, 0.8j))
    assert out.phase == 1j
    assert np.allclose(out.state.vector, [-0.8j, 0.6])
    assert np.allclose(out.vector, PAULI[1] @ np.array([0.6, 0.8j]))


def test_phase_flip():
    out = pauli_error(3, QubitState(0.6, 0.8j))
    assert np.allclose(out.state.vector, [0.6, -0.8j])


def test_invalid_index():
    with pytest.raises(ValueError):
        pauli_error(4, QubitState(1, 0))


@pytest.mark.parametrize("k", [1, 2, 3])
@given(q=qubits())
def test_involution_up_to_phase(k, q):
    once = pauli_error(k, q)
    twice = pauli_error(k, QubitState.from_vector(once.vector))
    assert abs(abs(np.vdot(q.vector, twice.vector)) - 1) <= 1e-12


@given(st.lists(st.floats(-5, 5), min_size=3, max_size=3))
def test_pauli_decomposition(c):
    op = sum(ci * s for ci, s in zip(c, PAULI))
    coeffs, residual = pauli_decompose(op)
    assert residual <= 1e-12
    assert np.allclose(coeffs, c, atol=1e-12)
