"""Shannon and von Neumann entropies, in bits.

Conditional entropy is computed two ways.  The spectral-difference form
``S(AB) - S(B)`` always applies.  The conditional-operator form builds
``rho_{A|B} = exp(-sigma)`` with ``sigma = I_A (x) ln rho_B - ln rho_AB`` and
evaluates ``-Tr[rho_AB log2 rho_{A|B}]``.  It needs a full-rank joint
state and serves as a cross-check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .linalg import (
    PSD_TOL,
    SUPPORT_CUTOFF,
    DimensionError,
    NotPSDError,
    expm_herm,
    herm_eig,
    logm_psd,
    partial_trace,
    tensor,
)
from .states import DensityMatrix

LN2 = math.log(2.0)
OPERATOR_AGREEMENT_TOL = 1e-8

# CODATA 2018; c and hbar are exact in the revised SI.
SPEED_OF_LIGHT = 299_792_458.0
HBAR = 1.054_571_817e-34
GRAVITATIONAL_CONSTANT = 6.674_30e-11
PLANCK_LENGTH_SQ = HBAR * GRAVITATIONAL_CONSTANT / SPEED_OF_LIGHT**3


class RankDeficientError(ValueError):
    pass


@dataclass(frozen=True)
class EntropyReport:
    value: float
    method: str
    support_rank: int
    operator_value: float | None = None
    difference_value: float | None = None

    @property
    def methods_agree(self) -> bool | None:
        """Whether both forms agree within 1e-8; None if only one applied."""
        if self.operator_value is None or self.difference_value is None:
            return None
        return abs(self.operator_value - self.difference_value) <= OPERATOR_AGREEMENT_TOL


def shannon(p: Sequence[float]) -> float:
    """Shannon entropy ``-sum p log2 p`` with ``0 log 0 = 0``."""
    p = np.asarray(p, dtype=float).ravel()
    if np.any(p < 0):
        raise ValueError("probabilities must be non-negative")
    if abs(p.sum() - 1.0) > 1e-10:
        raise ValueError(f"probabilities sum to {p.sum()!r}, expected 1")
    nz = p[p > 0]
    return float(-np.sum(nz * np.log2(nz)) + 0.0)


def _spectral_entropy(w: np.ndarray) -> float:
    if w.size and w[0] < -PSD_TOL:
        raise NotPSDError(f"eigenvalue {w[0]:.3e} is negative")
    cutoff = SUPPORT_CUTOFF * max(w[-1], 0.0)
    nz = w[w > cutoff]
    return float(-np.sum(nz * np.log2(nz)) + 0.0)


def entropy_of_matrix(m: np.ndarray) -> float:
    return _spectral_entropy(herm_eig(m).eigenvalues)


def von_neumann(rho: DensityMatrix) -> float:
    """Von Neumann entropy ``-Tr[rho log2 rho]`` over the support of `rho`.

    >>> from qft_infocalc.states import maximally_mixed
    >>> von_neumann(maximally_mixed([2]))
    1.0
    """
    return entropy_of_matrix(rho.matrix)


def marginal_entropy(rho: DensityMatrix, keep: Sequence[int]) -> float:
    """Entropy of the reduced state on the subsystems in `keep`."""
    keep = sorted(set(keep))
    if len(keep) == len(rho.dims):
        return von_neumann(rho)
    return entropy_of_matrix(partial_trace(rho.matrix, rho.dims, keep))


def _require_parties(rho: DensityMatrix, n: int) -> None:
    if len(rho.dims) != n:
        kind = {2: "bipartite", 3: "tripartite"}[n]
        raise DimensionError(f"expected a {kind} state, got dims {rho.dims}")


def conditional_amplitude_operator(rho_ab: DensityMatrix, condition_on: int = 1) -> np.ndarray:
    """Conditional amplitude operator ``exp(-sigma)`` of a full-rank bipartite state.

    ``sigma = I_A (x) ln rho_B - ln rho_AB`` in natural logs, where ``B`` is
    subsystem `condition_on` and the identity sits on the other factor.

    Raises
    ------
    RankDeficientError
        If the joint state has an eigenvalue at or below the support cutoff;
        use :func:`conditional_entropy`, which falls back to the spectral
        difference.
    """
    _require_parties(rho_ab, 2)
    if condition_on not in (0, 1):
        raise DimensionError(f"condition_on must be 0 or 1, got {condition_on}")
    w = herm_eig(rho_ab.matrix).eigenvalues
    rank = int(np.sum(w > SUPPORT_CUTOFF * w[-1]))
    if rank < rho_ab.dim:
        raise RankDeficientError(
            f"joint state has rank {rank} < {rho_ab.dim}; ln rho_AB is undefined off its support, "
            "use conditional_entropy for the spectral-difference value"
        )
    other = 1 - condition_on
    rho_b = partial_trace(rho_ab.matrix, rho_ab.dims, [condition_on])
    ln_b = logm_psd(rho_b, base=math.e)
    eye = np.eye(rho_ab.dims[other])
    lifted = tensor(eye, ln_b) if condition_on == 1 else tensor(ln_b, eye)
    sigma = lifted - logm_psd(rho_ab.matrix, base=math.e)
    sigma = 0.5 * (sigma + sigma.conj().T)
    return expm_herm(-sigma)


def conditional_entropy(rho_ab: DensityMatrix, condition_on: int = 1) -> EntropyReport:
    """Conditional entropy ``S(A|B)`` in bits, ``B`` being `condition_on`.

    The reported value is the spectral difference ``S(AB) - S(B)``.  When the
    joint state is full rank the operator form is evaluated as well and both
    numbers are returned; see :attr:`EntropyReport.methods_agree`.
    """
    _require_parties(rho_ab, 2)
    if condition_on not in (0, 1):
        raise DimensionError(f"condition_on must be 0 or 1, got {condition_on}")
    w = herm_eig(rho_ab.matrix).eigenvalues
    rank = int(np.sum(w > SUPPORT_CUTOFF * w[-1]))
    diff = _spectral_entropy(w) - marginal_entropy(rho_ab, [condition_on])
    if rank < rho_ab.dim:
        return EntropyReport(diff, "spectral-difference", rank, None, diff)
    amp = conditional_amplitude_operator(rho_ab, condition_on)
    op_value = float(-np.trace(rho_ab.matrix @ logm_psd(amp, base=2.0)).real)
    return EntropyReport(diff, "spectral-difference", rank, op_value, diff)


def conditional_entropy_operator_form(rho_ab: DensityMatrix, condition_on: int = 1) -> float:
    """``-Tr[rho_AB log2 rho_{A|B}]`` alone, without the difference-form cross-check."""
    amp = conditional_amplitude_operator(rho_ab, condition_on)
    return float(-np.trace(rho_ab.matrix @ logm_psd(amp, base=2.0)).real)


def mutual_entropy(rho_ab: DensityMatrix) -> float:
    _require_parties(rho_ab, 2)
    return marginal_entropy(rho_ab, [0]) + marginal_entropy(rho_ab, [1]) - von_neumann(rho_ab)


def conditional_mutual(rho: DensityMatrix, u: int = 0, d: int = 1, s: int = 2) -> float:
    """``S(u:d|s) = S(us) + S(ds) - S(s) - S(uds)``."""
    _require_parties(rho, 3)
    if sorted((u, d, s)) != [0, 1, 2]:
        raise DimensionError(f"u, d, s must be a permutation of 0, 1, 2, got {(u, d, s)}")
    return (
        marginal_entropy(rho, [u, s])
        + marginal_entropy(rho, [d, s])
        - marginal_entropy(rho, [s])
        - von_neumann(rho)
    )


def tripartite_entropies(rho: DensityMatrix) -> dict[str, float]:
    """All seven marginal entropies of a tripartite state keyed by party names."""
    _require_parties(rho, 3)
    names = "uds"
    out = {}
    for keep in ([0], [1], [2], [0, 1], [0, 2], [1, 2]):
        out["".join(names[k] for k in keep)] = marginal_entropy(rho, keep)
    out["uds"] = von_neumann(rho)
    return out


def ternary_mutual(rho: DensityMatrix) -> float:
    """Inclusion-exclusion entropy ``S(u:d:s)``; zero for pure tripartite states."""
    e = tripartite_entropies(rho)
    return e["u"] + e["d"] + e["s"] - e["ud"] - e["us"] - e["ds"] + e["uds"]


@dataclass(frozen=True)
class ChainRuleReport:
    telescoping_residual: float
    printed_form_residual: float
    joint: float
    terms: dict


def chain_rule_check(rho: DensityMatrix) -> ChainRuleReport:
    """Compare ``S(uds)`` against two chain-rule decompositions.

    ``telescoping_residual`` uses ``S(u) + S(d|u) + S(s|ud)`` and vanishes
    identically.  ``printed_form_residual`` uses ``S(u) + S(d) + S(s|ud)``,
    which only holds when ``u`` and ``d`` are uncorrelated.
    """
    e = tripartite_entropies(rho)
    d_given_u = e["ud"] - e["u"]
    s_given_ud = e["uds"] - e["ud"]
    telescoping = e["u"] + d_given_u + s_given_ud
    printed = e["u"] + e["d"] + s_given_ud
    return ChainRuleReport(
        abs(e["uds"] - telescoping),
        abs(e["uds"] - printed),
        e["uds"],
        {"S(u)": e["u"], "S(d)": e["d"], "S(d|u)": d_given_u, "S(s|ud)": s_given_ud},
    )


def holographic_bound_bits(area: float) -> float:
    """Maximum information in bits inside a surface of `area` square metres.

    ``A / (4 l_p^2 ln 2)`` with ``l_p^2 = hbar G / c^3``.
    """
    if not math.isfinite(area) or area < 0:
        raise ValueError(f"area must be a non-negative finite number, got {area}")
    return area / (4.0 * PLANCK_LENGTH_SQ * LN2)
