"""Bosonic O(3) sigma model on a periodic one-dimensional lattice.

The field is a unit 3-vector per site.  The discrete Hamiltonian

    E = sum_i [ |phidot_i|^2 / 2 + |phi_{i+1} - phi_i|^2 / (2 dx^2) ] dx

with the sphere constraint yields the lattice form of
``box phi + (d phi . d phi) phi = 0``.  Time stepping is RATTLE: a velocity
Verlet step whose position update is corrected along ``phi`` so every
site stays on the sphere exactly, followed by projection of the new
velocities onto the tangent plane.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

CONSTRAINT_TOL = 1e-10


@dataclass(frozen=True)
class LatticeField:
    phi: np.ndarray  # (L, 3)
    phidot: np.ndarray  # (L, 3)
    dx: float = 1.0
    dt: float = 0.1

    def __post_init__(self):
        phi = np.array(self.phi, dtype=float)
        phidot = np.array(self.phidot, dtype=float)
        if phi.ndim != 2 or phi.shape[1] != 3 or phidot.shape != phi.shape:
            raise ValueError("phi and phidot must both have shape (L, 3)")
        if phi.shape[0] < 3:
            raise ValueError("lattice needs at least 3 sites")
        if not (self.dx > 0 and self.dt > 0):
            raise ValueError("dx and dt must be positive")
        if self.dt >= self.dx:
            raise ValueError(f"time step dt={self.dt} violates the CFL bound dt < dx={self.dx}")
        phi.setflags(write=False)
        phidot.setflags(write=False)
        object.__setattr__(self, "phi", phi)
        object.__setattr__(self, "phidot", phidot)

    @property
    def L(self) -> int:
        return self.phi.shape[0]

    def constraint_residuals(self) -> tuple[float, float]:
        """Max ``| |phi| - 1 |`` and max ``|phi . phidot|`` over the lattice."""
        norm = np.max(np.abs(np.linalg.norm(self.phi, axis=1) - 1.0))
        tang = np.max(np.abs(np.einsum("ij,ij->i", self.phi, self.phidot)))
        return float(norm), float(tang)

    def reversed(self) -> "LatticeField":
        """Same configuration with velocities negated."""
        return replace(self, phidot=-self.phidot)


def laplacian(phi: np.ndarray, dx: float) -> np.ndarray:
    return (np.roll(phi, -1, axis=0) - 2 * phi + np.roll(phi, 1, axis=0)) / dx**2


def _tangent(phi: np.ndarray, vel: np.ndarray) -> np.ndarray:
    return vel - np.einsum("ij,ij->i", phi, vel)[:, None] / np.einsum("ij,ij->i", phi, phi)[:, None] * phi


def step(f: LatticeField) -> LatticeField:
    """Advance the field by one RATTLE step of size ``f.dt``."""
    q, v, dt, dx = f.phi, f.phidot, f.dt, f.dx
    force = laplacian(q, dx)

    # unconstrained position, then move along q so that |q_new| = 1:
    # |a + mu q|^2 = 1  ->  mu^2 |q|^2 + 2 mu (a.q) + |a|^2 - 1 = 0
    a = q + dt * v + 0.5 * dt**2 * force
    qq = np.einsum("ij,ij->i", q, q)
    aq = np.einsum("ij,ij->i", a, q)
    aa = np.einsum("ij,ij->i", a, a)
    disc = aq**2 - qq * (aa - 1.0)
    if np.any(disc < 0):
        raise FloatingPointError("constraint projection failed; reduce dt")
    # root of smallest magnitude, written to avoid cancellation
    mu = (1.0 - aa) / (aq + np.sqrt(disc))
    q_new = a + mu[:, None] * q

    v_half = (q_new - q) / dt
    v_new = _tangent(q_new, v_half + 0.5 * dt * laplacian(q_new, dx))
    return replace(f, phi=q_new, phidot=v_new)


def evolve(f: LatticeField, steps: int, every: int = 1):
    """Yield ``(step_index, field)`` for the initial state and every `every` steps."""
    yield 0, f
    for k in range(1, steps + 1):
        f = step(f)
        if k % every == 0 or k == steps:
            yield k, f


def energy(f: LatticeField) -> float:
    """Discrete energy density integrated over the lattice."""
    kin = 0.5 * np.sum(f.phidot**2)
    grad = np.roll(f.phi, -1, axis=0) - f.phi
    pot = 0.5 * np.sum(grad**2) / f.dx**2
    return float((kin + pot) * f.dx)


def momentum(f: LatticeField) -> float:
    """Field momentum ``sum_i phidot_i . (phi_{i+1} - phi_{i-1}) / 2``."""
    grad = (np.roll(f.phi, -1, axis=0) - np.roll(f.phi, 1, axis=0)) / (2 * f.dx)
    return float(np.sum(f.phidot * grad) * f.dx)


# --- initial conditions -------------------------------------------------------


def uniform(L: int, dx: float = 1.0, dt: float = 0.1, direction=(0.0, 0.0, 1.0)) -> LatticeField:
    n = np.asarray(direction, dtype=float)
    n = n / np.linalg.norm(n)
    return LatticeField(np.tile(n, (L, 1)), np.zeros((L, 3)), dx, dt)


def wavenumber(L: int, dx: float, mode: int) -> float:
    """Wavenumber of the `mode`-th Fourier mode that fits the periodic lattice."""
    return 2 * np.pi * mode / (L * dx)


def spin_wave(
    L: int, dx: float = 1.0, dt: float = 0.1, mode: int = 1, amplitude: float = 0.05, travelling: bool = False
) -> LatticeField:
    """Small transverse wave about the north pole.

    The standing wave starts at rest with ``phi_x = a cos(k x)``; the
    travelling version circulates ``(phi_x, phi_y) = a (cos, sin)(k x - w t)``
    and starts with the matching linearized velocity.
    """
    k = wavenumber(L, dx, mode)
    x = dx * np.arange(L)
    phi = np.zeros((L, 3))
    vel = np.zeros((L, 3))
    phi[:, 0] = amplitude * np.cos(k * x)
    if travelling:
        w = dispersion(k, dx)
        phi[:, 1] = amplitude * np.sin(k * x)
        vel[:, 0] = amplitude * w * np.sin(k * x)
        vel[:, 1] = -amplitude * w * np.cos(k * x)
    phi[:, 2] = np.sqrt(1 - phi[:, 0] ** 2 - phi[:, 1] ** 2)
    return LatticeField(phi, _tangent(phi, vel), dx, dt)


def random_tangent(
    L: int, dx: float = 1.0, dt: float = 0.1, seed: int = 0, tilt: float = 0.3, speed: float = 0.1
) -> LatticeField:
    """Seeded random field near the north pole with random tangent velocities."""
    rng = np.random.default_rng(seed)
    phi = np.array([0.0, 0.0, 1.0]) + tilt * rng.standard_normal((L, 3))
    phi /= np.linalg.norm(phi, axis=1)[:, None]
    vel = _tangent(phi, speed * rng.standard_normal((L, 3)))
    return LatticeField(phi, vel, dx, dt)


def dispersion(k: float, dx: float) -> float:
    """Linearized frequency ``(2/dx) sin(k dx / 2)`` of a small transverse wave."""
    return 2.0 / dx * np.sin(k * dx / 2)


PRESETS = ("uniform", "wave", "random")
