"""Two-dimensional Clifford algebra, antiqubits and the qubit-field algebra.

The representation is ``gamma^0 = i sigma_2``, ``gamma^1 = sigma_3`` with
metric ``eta = diag(-1, 1)``.  The antiqubit of a qubit ``psi`` is its Dirac
adjoint ``psi^dagger gamma^0``, a covector.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .linalg import dagger
from .states import DensityMatrix, QubitState

I2 = np.eye(2, dtype=complex)
SIGMA1 = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA2 = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA3 = np.array([[1, 0], [0, -1]], dtype=complex)
PAULI = (SIGMA1, SIGMA2, SIGMA3)


def levi_civita(j: int, k: int, l: int) -> int:
    """Totally antisymmetric symbol on indices 0, 1, 2."""
    return (j - k) * (k - l) * (l - j) // 2


@dataclass(frozen=True)
class GammaRep:
    gamma0: np.ndarray = field(default_factory=lambda: 1j * SIGMA2)
    gamma1: np.ndarray = field(default_factory=lambda: SIGMA3.copy())
    eta: np.ndarray = field(default_factory=lambda: np.diag([-1.0, 1.0]))

    @property
    def gamma5(self) -> np.ndarray:
        return self.gamma0 @ self.gamma1

    @property
    def gammas(self) -> tuple[np.ndarray, np.ndarray]:
        return (self.gamma0, self.gamma1)


@dataclass(frozen=True)
class CheckReport:
    name: str
    max_deviation: float
    tolerance: float = 0.0
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.max_deviation <= self.tolerance


def anticommutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a @ b + b @ a


def check_clifford(rep: GammaRep | None = None) -> CheckReport:
    """Deviation of ``{gamma^mu, gamma^nu} - 2 eta^{mu nu} I`` over all pairs."""
    rep = rep or GammaRep()
    g = rep.gammas
    dev = {}
    for mu in range(2):
        for nu in range(2):
            d = anticommutator(g[mu], g[nu]) - 2 * rep.eta[mu, nu] * I2
            dev[f"{mu}{nu}"] = float(np.max(np.abs(d)))
    return CheckReport("clifford", max(dev.values()), 0.0, dev)


@dataclass(frozen=True)
class Antiqubit:
    """Covector ``row[0] <0| + row[1] <1|``."""

    row: np.ndarray

    def as_ket(self) -> QubitState:
        """Natural embedding back into the ket space (conjugate transpose)."""
        return QubitState.from_vector(np.conj(self.row))


def dirac_adjoint(q: QubitState, rep: GammaRep | None = None) -> Antiqubit:
    """Antiqubit ``psi^dagger gamma^0 = (-psi1*, psi0*)``."""
    rep = rep or GammaRep()
    return Antiqubit(np.conj(q.vector) @ rep.gamma0)


def antiqubit_density(q: QubitState) -> DensityMatrix:
    """Qubit density matrix with both off-diagonal entries negated."""
    p0, p1 = q.psi0, q.psi1
    m = np.array(
        [[abs(p0) ** 2, -p0 * p1.conjugate()], [-p0.conjugate() * p1, abs(p1) ** 2]],
        dtype=complex,
    )
    return DensityMatrix(m, (2,))


def check_qubit_field_algebra(phis: Sequence[np.ndarray], tol: float = 0.0) -> CheckReport:
    """Check ``Phi_j Phi_k = delta_jk I + i eps_jkl Phi_l`` for three 2x2 observables."""
    if len(phis) != 3:
        raise ValueError("qubit-field algebra needs exactly three observables")
    phis = [np.asarray(p, dtype=complex) for p in phis]
    dev = {}
    for j in range(3):
        for k in range(3):
            rhs = (1.0 if j == k else 0.0) * I2
            for l in range(3):
                eps = levi_civita(j, k, l)
                if eps:
                    rhs = rhs + 1j * eps * phis[l]
            dev[f"{j + 1}{k + 1}"] = float(np.max(np.abs(phis[j] @ phis[k] - rhs)))
    return CheckReport("qubit_field_algebra", max(dev.values()), tol, dev)


def rotated_pauli(r: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    return tuple(r @ s @ dagger(r) for s in PAULI)
