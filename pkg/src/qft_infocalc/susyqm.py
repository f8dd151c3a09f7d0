"""Supersymmetric quantum mechanics on a finite-difference grid.

Wavefunctions of the "0" sector live on the ``n`` interior sites of a
Dirichlet box; the "1" sector lives on the ``n + 1`` links between sites
(walls included).  The ladder operators are

    A- = -d/dx + v : sites -> links
    A+ = +d/dx + v : links -> sites,    A+ = (A-)^T exactly

with a two-point difference for ``d/dx`` and ``v`` sampled at link midpoints
and averaged onto the neighbouring sites.  Because ``A+`` is the exact
transpose of ``A-``, ``H0 = A+ A-`` and ``H1 = A- A+`` share every nonzero
eigenvalue to rounding error, and the superalgebra holds at the matrix
level rather than to discretization accuracy.  ``H1`` has one more row
than ``H0``, so it always carries exactly one zero mode.

Units: ``hbar = 2m = 1`` and no overall prefactor, so
``H0 = -d^2/dx^2 + v^2 + v'`` and ``H1 = -d^2/dx^2 + v^2 - v'``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .clifford import SIGMA1
from .linalg import herm_eig

MIN_POINTS = 16
PAIRING_TOL = 1e-2


class ZeroModeError(ValueError):
    pass


@dataclass(frozen=True)
class Superpotential:
    """A named superpotential with its analytic derivative."""

    name: str
    value: Callable[[np.ndarray], np.ndarray]
    derivative: Callable[[np.ndarray], np.ndarray] | None = None

    def __call__(self, x):
        return self.value(np.asarray(x, dtype=float))

    def deriv(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        if self.derivative is not None:
            return self.derivative(x)
        h = 1e-5 * np.maximum(1.0, np.abs(x))
        return (self.value(x + h) - self.value(x - h)) / (2 * h)


def linear(omega: float = 1.0) -> Superpotential:
    return Superpotential("linear", lambda x: omega * x, lambda x: omega * np.ones_like(x))


def tanh_potential(scale: float = 1.0) -> Superpotential:
    return Superpotential(
        "tanh", lambda x: np.tanh(scale * x), lambda x: scale / np.cosh(scale * x) ** 2
    )


def cubic(c: float = 1.0) -> Superpotential:
    """``v(x) = x^3 - c x``, a double-well partner pair for ``c > 0``."""
    return Superpotential("cubic", lambda x: x**3 - c * x, lambda x: 3 * x**2 - c)


def zero_potential() -> Superpotential:
    return Superpotential("zero", lambda x: np.zeros_like(x), lambda x: np.zeros_like(x))


POTENTIALS = {"linear": linear, "tanh": tanh_potential, "cubic": cubic, "zero": zero_potential}


def get_potential(name: str, **params) -> Superpotential:
    try:
        factory = POTENTIALS[name]
    except KeyError:
        raise ValueError(f"unknown potential {name!r}; choose from {sorted(POTENTIALS)}") from None
    return factory(**params)


@dataclass(frozen=True)
class Grid:
    x_min: float
    x_max: float
    n: int

    def __post_init__(self):
        if self.n < MIN_POINTS:
            raise ValueError(f"grid needs at least {MIN_POINTS} interior points, got {self.n}")
        if not self.x_min < self.x_max:
            raise ValueError(f"need x_min < x_max, got {self.x_min} >= {self.x_max}")

    @property
    def dx(self) -> float:
        return (self.x_max - self.x_min) / (self.n + 1)

    @property
    def sites(self) -> np.ndarray:
        """Interior sites; the walls sit at ``x_min`` and ``x_max``."""
        return self.x_min + self.dx * np.arange(1, self.n + 1)

    @property
    def links(self) -> np.ndarray:
        """Midpoints between consecutive grid points, walls included (``n + 1`` of them)."""
        return self.x_min + self.dx * (np.arange(self.n + 1) + 0.5)


@dataclass(frozen=True)
class SusyModel:
    grid: Grid
    v: np.ndarray  # superpotential at link midpoints
    D: np.ndarray  # (n+1) x n forward difference, sites -> links
    Aplus: np.ndarray
    Aminus: np.ndarray
    H0: np.ndarray
    H1: np.ndarray
    Qplus: np.ndarray
    Qminus: np.ndarray
    Q: np.ndarray
    H: np.ndarray
    S: np.ndarray
    potential: Superpotential | None = None

    @property
    def n0(self) -> int:
        return self.H0.shape[0]

    @property
    def n1(self) -> int:
        return self.H1.shape[0]

    def sector_hamiltonian(self, sector: int) -> np.ndarray:
        return (self.H0, self.H1)[_check_sector(sector)]


def _check_sector(sector: int) -> int:
    if sector not in (0, 1):
        raise ValueError(f"sector must be 0 or 1, got {sector}")
    return sector


def build_model(
    v: Superpotential | Callable[[np.ndarray], np.ndarray],
    x_min: float = -8.0,
    x_max: float = 8.0,
    n: int = 400,
) -> SusyModel:
    """Assemble ladder operators, partner Hamiltonians and supercharges."""
    grid = Grid(float(x_min), float(x_max), int(n))
    pot = v if isinstance(v, Superpotential) else None
    vals = np.asarray(v(grid.links), dtype=float)
    if vals.shape != (n + 1,) or not np.all(np.isfinite(vals)):
        raise ValueError("superpotential must return finite samples on the grid")

    dx = grid.dx
    # link l joins site l-1 and site l (sites -1 and n are the walls)
    diff = np.zeros((n + 1, n))
    avg = np.zeros((n + 1, n))
    idx = np.arange(n)
    diff[idx, idx] = 1.0 / dx
    diff[idx + 1, idx] = -1.0 / dx
    avg[idx, idx] = 0.5
    avg[idx + 1, idx] = 0.5

    aminus = -diff + vals[:, None] * avg
    aplus = aminus.T.copy()
    h0 = aplus @ aminus
    h1 = aminus @ aplus

    z01 = np.zeros((n, n + 1))
    z10 = np.zeros((n + 1, n))
    qplus = np.block([[np.zeros((n, n)), aplus], [z10, np.zeros((n + 1, n + 1))]])
    qminus = np.block([[np.zeros((n, n)), z01], [aminus, np.zeros((n + 1, n + 1))]])
    q = qplus + qminus
    h = np.block([[h0, z01], [z10, h1]])
    s = np.diag(np.concatenate([np.ones(n), -np.ones(n + 1)]))
    return SusyModel(grid, vals, diff, aplus, aminus, h0, h1, qplus, qminus, q, h, s, pot)


def direct_hamiltonians(pot: Superpotential, grid: Grid) -> tuple[np.ndarray, np.ndarray]:
    """Partner Hamiltonians ``-d^2 + v^2 +/- v'`` discretized term by term.

    Both act on the interior sites with the three-point Laplacian and the
    analytic ``v'``.  Unlike the factorized model their spectra pair only to
    ``O(dx^2)``, which makes them the reference for grid-convergence checks.
    """
    x, dx = grid.sites, grid.dx
    lap = (2 * np.eye(grid.n) - np.eye(grid.n, k=1) - np.eye(grid.n, k=-1)) / dx**2
    v, vp = pot(x), pot.deriv(x)
    return lap + np.diag(v**2 + vp), lap + np.diag(v**2 - vp)


def commutator(a, b):
    return a @ b - b @ a


def superalgebra_residuals(m: SusyModel) -> dict[str, float]:
    """Max-abs residual of each superalgebra identity, relative to ``max|H|``."""
    scale = max(np.max(np.abs(m.H)), 1.0)
    checks = {
        "Qplus^2": m.Qplus @ m.Qplus,
        "Qminus^2": m.Qminus @ m.Qminus,
        "{Qplus,Qminus}-H": m.Qplus @ m.Qminus + m.Qminus @ m.Qplus - m.H,
        "Q^2-H": m.Q @ m.Q - m.H,
        "[H,Qplus]": commutator(m.H, m.Qplus),
        "[H,Qminus]": commutator(m.H, m.Qminus),
        "[S,H]": commutator(m.S, m.H),
        "{S,Q}": m.S @ m.Q + m.Q @ m.S,
        "H0 A+ - A+ H1": m.H0 @ m.Aplus - m.Aplus @ m.H1,
        "A- H0 - H1 A-": m.Aminus @ m.H0 - m.H1 @ m.Aminus,
        "A- - (A+)^T": m.Aminus - m.Aplus.T,
    }
    return {k: float(np.max(np.abs(r))) / scale for k, r in checks.items()}


def default_zero_tol(m: SusyModel) -> float:
    """Zero modes of the factorized model are exact kernel vectors, so the cut sits at rounding level."""
    return 1e-10 * max(float(np.max(np.abs(m.H))), 1.0)


@dataclass(frozen=True)
class SpectrumPairing:
    levels0: np.ndarray
    levels1: np.ndarray
    pairs: list  # (E0, E1)
    unpaired: dict  # sector -> zero-mode energies
    zero_tol: float

    @property
    def gaps(self) -> np.ndarray:
        return np.array([abs(a - b) for a, b in self.pairs])

    @property
    def max_gap(self) -> float:
        return float(self.gaps.max()) if self.pairs else 0.0


def _greedy_pair(levels0: np.ndarray, levels1: np.ndarray) -> list:
    free = list(levels1)
    pairs = []
    for e0 in levels0:
        if not free:
            break
        j = int(np.argmin([abs(e0 - e1) for e1 in free]))
        pairs.append((float(e0), float(free.pop(j))))
    return pairs


def pair_levels(e0: np.ndarray, e1: np.ndarray, k: int, zero_tol: float) -> SpectrumPairing:
    """Split off zero modes, then greedily match the lowest `k` positive levels."""
    e0, e1 = np.sort(e0), np.sort(e1)
    z0, z1 = e0[np.abs(e0) <= zero_tol], e1[np.abs(e1) <= zero_tol]
    p0, p1 = e0[e0 > zero_tol], e1[e1 > zero_tol]
    if k > min(len(p0), len(p1)):
        raise ValueError(f"requested {k} levels but only {min(len(p0), len(p1))} positive levels exist")
    p0, p1 = p0[:k], p1[:k]
    return SpectrumPairing(p0, p1, _greedy_pair(p0, p1), {0: z0, 1: z1}, zero_tol)


def pair_spectra(m: SusyModel, k: int, zero_tol: float | None = None) -> SpectrumPairing:
    """Match positive levels of ``H0`` and ``H1``; zero modes are reported unpaired."""
    if k < 1 or k > m.grid.n:
        raise ValueError(f"k must lie in [1, {m.grid.n}], got {k}")
    zero_tol = default_zero_tol(m) if zero_tol is None else zero_tol
    e0 = herm_eig(m.H0).eigenvalues
    e1 = herm_eig(m.H1).eigenvalues
    return pair_levels(e0, e1, k, zero_tol)


def pair_direct_spectra(pot: Superpotential, grid: Grid, k: int, zero_tol: float | None = None) -> SpectrumPairing:
    """Same matching for the term-by-term Hamiltonians of :func:`direct_hamiltonians`."""
    h0, h1 = direct_hamiltonians(pot, grid)
    zero_tol = 10.0 * grid.dx**2 if zero_tol is None else zero_tol
    return pair_levels(herm_eig(h0).eigenvalues, herm_eig(h1).eigenvalues, k, zero_tol)


@dataclass(frozen=True)
class SuperchargeImage:
    energy: float
    source: np.ndarray
    image: np.ndarray  # normalized
    residual: float  # ||H_other image - E image||
    image_norm: float  # ||A source|| before normalization


def supercharge_map(m: SusyModel, sector: int, eigenindex: int, zero_tol: float | None = None) -> SuperchargeImage:
    """Carry an eigenvector of one sector into the partner sector.

    Sector 1 maps to sector 0 with ``A+``, sector 0 to sector 1 with ``A-``.
    Zero modes have no partner and raise :class:`ZeroModeError`.
    """
    sector = _check_sector(sector)
    zero_tol = default_zero_tol(m) if zero_tol is None else zero_tol
    w, vecs = herm_eig(m.sector_hamiltonian(sector))
    energy = float(w[eigenindex])
    psi = np.real_if_close(vecs[:, eigenindex])
    op = m.Aplus if sector == 1 else m.Aminus
    phi = op @ psi
    norm = float(np.linalg.norm(phi))
    if energy <= zero_tol or norm <= 1e-6 * np.linalg.norm(psi):
        raise ZeroModeError(f"level {eigenindex} of sector {sector} (E={energy:.3e}) is a zero mode")
    phi = phi / norm
    other = m.sector_hamiltonian(1 - sector)
    residual = float(np.linalg.norm(other @ phi - energy * phi))
    return SuperchargeImage(energy, psi, phi, residual, norm)


@dataclass(frozen=True)
class SqrtNot:
    U: np.ndarray
    unitarity_residual: float
    square_minus_not: float

    @property
    def passed(self) -> bool:
        return self.unitarity_residual <= 1e-12 and self.square_minus_not == 0.0


def sqrt_not() -> SqrtNot:
    """The square root of NOT, ``U = [[1-i, 1+i], [1+i, 1-i]] / 2``, with ``U^2 = sigma_1``."""
    u = 0.5 * np.array([[1 - 1j, 1 + 1j], [1 + 1j, 1 - 1j]])
    unit = float(np.max(np.abs(u.conj().T @ u - np.eye(2))))
    sq = float(np.max(np.abs(u @ u - SIGMA1)))
    return SqrtNot(u, unit, sq)


def analytic_linear_levels(count: int, omega: float = 1.0) -> tuple[np.ndarray, np.ndarray]:
    """Exact partner spectra for ``v = omega x``: ``H1 = 2 omega k``, ``H0 = 2 omega (k + 1)``."""
    k = np.arange(count, dtype=float)
    return 2 * omega * (k + 1), 2 * omega * k


def lowest_levels(h: np.ndarray, count: int) -> np.ndarray:
    return herm_eig(h).eigenvalues[:count]


__all__ = [
    "Grid",
    "SqrtNot",
    "SpectrumPairing",
    "SuperchargeImage",
    "Superpotential",
    "SusyModel",
    "ZeroModeError",
    "analytic_linear_levels",
    "build_model",
    "cubic",
    "direct_hamiltonians",
    "get_potential",
    "linear",
    "pair_direct_spectra",
    "pair_spectra",
    "sqrt_not",
    "superalgebra_residuals",
    "supercharge_map",
    "tanh_potential",
]
