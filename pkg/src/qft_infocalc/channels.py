"""Single-qubit error processes: exponential decoherence and Pauli errors."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .clifford import PAULI
from .states import DensityMatrix, QubitState


@dataclass(frozen=True)
class DecoherenceParams:
    t: float
    tau: float

    def __post_init__(self):
        if not self.tau > 0:
            raise ValueError(f"decoherence time tau must be positive, got {self.tau}")
        if not math.isfinite(self.t) or self.t < 0:
            raise ValueError(f"elapsed time t must be a non-negative finite number, got {self.t}")

    @property
    def envelope(self) -> float:
        return math.exp(-self.t / self.tau)


def decohere(rho: DensityMatrix, p: DecoherenceParams) -> DensityMatrix:
    """Damp the off-diagonal entries of a 2x2 density matrix by ``exp(-t/tau)``.

    The diagonal is untouched.  Works the same on antiqubit density
    matrices, whose off-diagonals only differ in sign.
    """
    if rho.matrix.shape != (2, 2):
        raise ValueError(f"decohere acts on 2x2 density matrices, got {rho.matrix.shape}")
    m = np.array(rho.matrix)
    g = p.envelope
    m[0, 1] *= g
    m[1, 0] *= g
    return DensityMatrix(m, rho.dims)


@dataclass(frozen=True)
class PauliErrorResult:
    state: QubitState
    phase: complex

    @property
    def vector(self) -> np.ndarray:
        """Full amplitude vector including the factored-out phase."""
        return self.phase * self.state.vector


def pauli_error(k: int, q: QubitState) -> PauliErrorResult:
    """Apply ``sigma_k`` to a qubit.

    ``k = 1`` flips the bit, ``k = 3`` flips the phase.  For ``k = 2`` the
    result ``sigma_2 (psi0, psi1) = i (-psi1, psi0)`` is returned as the
    state ``(-psi1, psi0)`` with ``phase = 1j``.
    """
    if k not in (1, 2, 3):
        raise ValueError(f"Pauli index must be 1, 2 or 3, got {k}")
    out = PAULI[k - 1] @ q.vector
    phase = 1j if k == 2 else 1.0 + 0j
    return PauliErrorResult(QubitState.from_vector(out / phase), phase)


def pauli_decompose(op: np.ndarray) -> tuple[np.ndarray, float]:
    """Real coefficients ``c`` with ``op = sum_k c_k sigma_k`` for traceless Hermitian `op`.

    Returns the coefficients and the max-abs reconstruction residual.
    """
    op = np.asarray(op, dtype=complex)
    if op.shape != (2, 2):
        raise ValueError("expected a 2x2 operator")
    coeffs = np.array([np.trace(s @ op).real / 2 for s in PAULI])
    recon = sum(c * s for c, s in zip(coeffs, PAULI))
    return coeffs, float(np.max(np.abs(recon - op)))
