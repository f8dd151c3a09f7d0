"""Qubit states, density matrices and projective measurement.

Multi-qubit kets use the convention that the leftmost label is the first
tensor factor: ``|10> = |1> (x) |0>``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .linalg import DimensionError, PSD_TOL, herm_eig, is_hermitian, tensor

NORM_TOL = 1e-8
TRACE_TOL = 1e-10

KET0 = np.array([1.0, 0.0], dtype=complex)
KET1 = np.array([0.0, 1.0], dtype=complex)

# Projectors onto the Boolean basis states, (1 +/- gamma^1)/2 with gamma^1 = sigma_3.
P0 = np.array([[1.0, 0.0], [0.0, 0.0]], dtype=complex)
P1 = np.array([[0.0, 0.0], [0.0, 1.0]], dtype=complex)


class NormalizationError(ValueError):
    pass


class InvalidDensityMatrix(ValueError):
    pass


@dataclass(frozen=True)
class QubitState:
    """Normalized qubit ``psi0 |0> + psi1 |1>``.

    Unnormalized amplitudes are rejected rather than rescaled.
    """

    psi0: complex
    psi1: complex

    def __post_init__(self):
        object.__setattr__(self, "psi0", complex(self.psi0))
        object.__setattr__(self, "psi1", complex(self.psi1))
        norm = math.sqrt(abs(self.psi0) ** 2 + abs(self.psi1) ** 2)
        if abs(norm - 1.0) > NORM_TOL:
            raise NormalizationError(f"qubit norm is {norm!r}, expected 1")

    @classmethod
    def from_vector(cls, vec: Sequence[complex]) -> "QubitState":
        vec = np.asarray(vec, dtype=complex).ravel()
        if vec.shape != (2,):
            raise DimensionError(f"qubit needs 2 amplitudes, got {vec.shape[0]}")
        return cls(vec[0], vec[1])

    @property
    def vector(self) -> np.ndarray:
        return np.array([self.psi0, self.psi1], dtype=complex)


@dataclass(frozen=True)
class DensityMatrix:
    """Trace-one PSD Hermitian matrix on a product of subsystems."""

    matrix: np.ndarray
    dims: tuple[int, ...] = field(default=())

    def __post_init__(self):
        m = np.array(self.matrix, dtype=complex)
        m.setflags(write=False)
        dims = tuple(int(d) for d in self.dims) or (m.shape[0],)
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "dims", dims)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise InvalidDensityMatrix(f"density matrix must be square, got shape {m.shape}")
        if int(np.prod(dims)) != m.shape[0]:
            raise DimensionError(f"dims {dims} do not multiply to {m.shape[0]}")
        if not is_hermitian(m):
            raise InvalidDensityMatrix("density matrix is not Hermitian within 1e-12")
        tr = np.trace(m).real
        if abs(tr - 1.0) > TRACE_TOL:
            raise InvalidDensityMatrix(f"trace is {tr!r}, expected 1")
        lo = herm_eig(m).eigenvalues[0]
        if lo < -PSD_TOL:
            raise InvalidDensityMatrix(f"smallest eigenvalue {lo:.3e} is negative")

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def eigenvalues(self) -> np.ndarray:
        return herm_eig(self.matrix).eigenvalues


def pure_density(vec: Sequence[complex], dims: Sequence[int] | None = None) -> DensityMatrix:
    """Density matrix of a normalized ket given as a flat amplitude vector."""
    vec = np.asarray(vec, dtype=complex).ravel()
    norm = np.linalg.norm(vec)
    if abs(norm - 1.0) > NORM_TOL:
        raise NormalizationError(f"state norm is {norm!r}, expected 1")
    if dims is None:
        nq = int(round(math.log2(vec.size)))
        dims = (2,) * nq if 2**nq == vec.size else (vec.size,)
    return DensityMatrix(np.outer(vec, vec.conj()), tuple(dims))


def density_of(q: QubitState) -> DensityMatrix:
    """Density matrix ``|psi><psi|`` written out entrywise.

    >>> density_of(QubitState(1, 0)).matrix.real
    array([[1., 0.],
           [0., 0.]])
    """
    p0, p1 = q.psi0, q.psi1
    m = np.array(
        [[abs(p0) ** 2, p0 * p1.conjugate()], [p0.conjugate() * p1, abs(p1) ** 2]],
        dtype=complex,
    )
    return DensityMatrix(m, (2,))


def ket(bits: str) -> np.ndarray:
    """Computational basis ket from a bit string, e.g. ``ket('10')``."""
    return tensor(*[KET1 if b == "1" else KET0 for b in bits])


BELL_KETS = {
    "phi+": (ket("00") + ket("11")) / math.sqrt(2),
    "phi-": (ket("00") - ket("11")) / math.sqrt(2),
    "psi+": (ket("01") + ket("10")) / math.sqrt(2),
    "psi-": (ket("01") - ket("10")) / math.sqrt(2),
}


def bell_state() -> DensityMatrix:
    """|Phi+><Phi+| with dims (2, 2)."""
    return pure_density(BELL_KETS["phi+"], (2, 2))


def ghz_state() -> DensityMatrix:
    """(|000> + |111>)/sqrt(2) as a density matrix with dims (2, 2, 2)."""
    return pure_density((ket("000") + ket("111")) / math.sqrt(2), (2, 2, 2))


def werner_state(p: float) -> DensityMatrix:
    """Mixture ``p |Phi+><Phi+| + (1 - p) I/4``; full rank for ``p < 1``."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"Werner weight must lie in [0, 1], got {p}")
    phi = BELL_KETS["phi+"]
    return DensityMatrix(p * np.outer(phi, phi.conj()) + (1 - p) * np.eye(4) / 4, (2, 2))


def product_state(*rhos: DensityMatrix) -> DensityMatrix:
    dims: tuple[int, ...] = ()
    for r in rhos:
        dims += r.dims
    return DensityMatrix(tensor(*[r.matrix for r in rhos]), dims)


def maximally_mixed(dims: Sequence[int]) -> DensityMatrix:
    n = int(np.prod(dims))
    return DensityMatrix(np.eye(n) / n, tuple(dims))


@dataclass(frozen=True)
class Measurement:
    prob0: float
    prob1: float
    # None when the corresponding outcome has zero probability
    state0: QubitState | None
    state1: QubitState | None


def measure(q: QubitState) -> Measurement:
    """Projective measurement in the Boolean basis via ``P0`` and ``P1``."""
    v = q.vector
    out = []
    for proj in (P0, P1):
        w = proj @ v
        p = float(np.vdot(w, w).real)
        out.append((p, QubitState.from_vector(w / math.sqrt(p)) if p > 0 else None))
    (p0, s0), (p1, s1) = out
    return Measurement(p0, p1, s0, s1)


def random_pure_state(dims: Sequence[int], rng: np.random.Generator) -> DensityMatrix:
    """Pure state from normalized i.i.d. complex Gaussian amplitudes."""
    n = int(np.prod(dims))
    z = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    return pure_density(z / np.linalg.norm(z), tuple(dims))


def random_qubit(rng: np.random.Generator) -> QubitState:
    z = rng.standard_normal(2) + 1j * rng.standard_normal(2)
    return QubitState.from_vector(z / np.linalg.norm(z))


def random_full_rank_state(dims: Sequence[int], rng: np.random.Generator) -> DensityMatrix:
    """Ginibre mixed state ``G G^dagger / Tr``; full rank with probability one."""
    n = int(np.prod(dims))
    g = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    m = g @ g.conj().T
    m = 0.5 * (m + m.conj().T)
    return DensityMatrix(m / np.trace(m).real, tuple(dims))


def state_from_json(doc: dict) -> DensityMatrix:
    """Build a density matrix from ``{"amplitudes": [[re, im], ...], "dims": [...]}``.

    A ``"density"`` key holding a square matrix of ``[re, im]`` pairs is
    accepted instead of ``"amplitudes"`` for mixed states.
    """
    if not isinstance(doc, dict):
        raise ValueError("state document must be a JSON object")
    dims = doc.get("dims")
    if dims is not None and (not isinstance(dims, list) or not all(isinstance(d, int) and d > 0 for d in dims)):
        raise ValueError("field 'dims' must be a list of positive integers")
    if "amplitudes" in doc:
        amps = _complex_array(doc["amplitudes"], "amplitudes")
        if amps.ndim != 1:
            raise ValueError("field 'amplitudes' must be a list of [re, im] pairs")
        return pure_density(amps, dims)
    if "density" in doc:
        m = _complex_array(doc["density"], "density")
        return DensityMatrix(m, tuple(dims or ()))
    raise ValueError("state document needs an 'amplitudes' or 'density' field")


def _complex_array(data, name: str) -> np.ndarray:
    try:
        arr = np.asarray(data, dtype=float)
    except (TypeError, ValueError) as exc:
        raise ValueError(f"field '{name}' must contain numeric [re, im] pairs") from exc
    if arr.ndim == 0 or arr.shape[-1] != 2:
        raise ValueError(f"field '{name}' entries must be [re, im] pairs")
    return arr[..., 0] + 1j * arr[..., 1]


def complex_to_json(a) -> list:
    """Nested lists of ``[re, im]`` pairs."""
    a = np.asarray(a, dtype=complex)
    if a.ndim == 0:
        return [float(a.real), float(a.imag)]
    return [complex_to_json(x) for x in a]


def qubit_from_json(doc: dict) -> QubitState:
    amps = _complex_array(doc.get("amplitudes"), "amplitudes") if isinstance(doc, dict) else None
    if amps is None or amps.shape != (2,):
        raise ValueError("field 'amplitudes' must hold exactly two [re, im] pairs for a qubit")
    return QubitState.from_vector(amps)
