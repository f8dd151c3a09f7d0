"""Dense complex linear algebra shared by every other module.

Matrices are plain ``numpy.ndarray`` objects of dtype ``complex128`` (or
``float64`` where the caller already has real data).  Nothing here mutates
its inputs.
"""

from __future__ import annotations

import math
from typing import Callable, NamedTuple, Sequence

import numpy as np

HERMITIAN_TOL = 1e-12
PSD_TOL = 1e-10
SUPPORT_CUTOFF = 1e-12

# Matrices at or below this size go through the Jacobi solver by default.
JACOBI_MAX_DIM = 32

_LOG_FUNCS = (np.log, np.log2, np.log10, math.log, math.log2, math.log10)


class DimensionError(ValueError):
    """Raised when subsystem dimensions do not match a matrix shape."""


class NotHermitianError(ValueError):
    pass


class NotPSDError(ValueError):
    """A log-type matrix function met a clearly negative eigenvalue."""


class Spectrum(NamedTuple):
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def dagger(m: np.ndarray) -> np.ndarray:
    return np.conj(np.asarray(m)).T


def is_hermitian(m: np.ndarray, tol: float = HERMITIAN_TOL) -> bool:
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        return False
    return bool(np.max(np.abs(m - dagger(m)), initial=0.0) <= tol)


def tensor(*factors: np.ndarray) -> np.ndarray:
    """Kronecker product of one or more matrices, leftmost factor outermost.

    ``tensor(a, b)[i*rb + k, j*cb + l] == a[i, j] * b[k, l]``.
    """
    if not factors:
        raise ValueError("tensor needs at least one factor")
    out = np.asarray(factors[0])
    for f in factors[1:]:
        out = np.kron(out, np.asarray(f))
    return out


def partial_trace(m: np.ndarray, dims: Sequence[int], keep: Sequence[int]) -> np.ndarray:
    """Trace out every subsystem not listed in `keep`.

    Parameters
    ----------
    m : ndarray
        Square operator on the product space ``dims[0] x dims[1] x ...``.
    dims : sequence of int
        Subsystem dimensions, first factor first.
    keep : sequence of int
        Indices of the subsystems to retain.  The result keeps them in
        their original order regardless of the order given here.  An
        empty `keep` returns the full trace as a 1x1 matrix.

    Returns
    -------
    ndarray
        Reduced operator of size ``prod(dims[k] for k in keep)``.
    """
    m = np.asarray(m)
    dims = [int(d) for d in dims]
    n = int(np.prod(dims)) if dims else 1
    if m.ndim != 2 or m.shape != (n, n):
        raise DimensionError(f"dims {dims} imply a {n}x{n} matrix, got shape {m.shape}")
    keep = sorted(set(int(k) for k in keep))
    if any(k < 0 or k >= len(dims) for k in keep):
        raise DimensionError(f"keep indices {keep} out of range for {len(dims)} subsystems")

    nsys = len(dims)
    t = m.reshape(dims + dims)
    # einsum labels: row index i_k, column index j_k; traced systems share a label
    row = list(range(nsys))
    col = [k if k not in keep else nsys + k for k in range(nsys)]
    out = [k for k in keep] + [nsys + k for k in keep]
    reduced = np.einsum(t, row + col, out)
    dk = int(np.prod([dims[k] for k in keep])) if keep else 1
    return reduced.reshape(dk, dk)


def _canonical_phase(vecs: np.ndarray) -> np.ndarray:
    """Rotate each column so its first significant component is real positive."""
    vecs = vecs.copy()
    for j in range(vecs.shape[1]):
        col = vecs[:, j]
        idx = int(np.argmax(np.abs(col) > 1e-8 * np.max(np.abs(col))))
        c = col[idx]
        if c != 0:
            vecs[:, j] = col * (np.conj(c) / abs(c))
    return vecs


def _order_spectrum(w: np.ndarray, v: np.ndarray, degeneracy_tol: float) -> Spectrum:
    w = np.asarray(w, dtype=float)
    order = np.argsort(w, kind="stable")
    w, v = w[order], _canonical_phase(v[:, order])
    # tie-break inside degenerate clusters: lexicographic on rounded components
    start = 0
    n = len(w)
    while start < n:
        stop = start + 1
        while stop < n and w[stop] - w[stop - 1] <= degeneracy_tol:
            stop += 1
        if stop - start > 1:
            keys = []
            for j in range(start, stop):
                col = np.round(v[:, j], 8)
                keys.append((tuple(-np.abs(col)), tuple(col.real), tuple(col.imag), j))
            perm = [k[-1] for k in sorted(keys)]
            v[:, start:stop] = v[:, perm]
        start = stop
    return Spectrum(w, v)


def jacobi_eigh(m: np.ndarray, tol: float = 1e-15, max_sweeps: int = 60) -> tuple[np.ndarray, np.ndarray]:
    """Cyclic Jacobi eigensolver for a Hermitian matrix.

    Each pivot (p, q) is first phase-rotated so the off-diagonal entry is
    real, then annihilated by a real plane rotation.  Returns unsorted
    eigenvalues and the accumulated unitary.
    """
    a = np.array(m, dtype=complex)
    n = a.shape[0]
    v = np.eye(n, dtype=complex)
    scale = max(np.max(np.abs(a), initial=0.0), np.finfo(float).tiny)
    for _ in range(max_sweeps):
        off = np.sqrt(np.sum(np.abs(a - np.diag(np.diag(a))) ** 2))
        if off <= tol * scale * n:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                mag = abs(apq)
                if mag <= tol * scale * 1e-3:
                    continue
                phase = apq / mag
                theta = 0.5 * math.atan2(2.0 * mag, a[p, p].real - a[q, q].real)
                c, s = math.cos(theta), math.sin(theta)
                # J = diag(1, conj(phase)) @ [[c, -s], [s, c]]
                j = np.array([[c, -s], [s * np.conj(phase), c * np.conj(phase)]])
                idx = [p, q]
                a[:, idx] = a[:, idx] @ j
                a[idx, :] = dagger(j) @ a[idx, :]
                a[p, q] = a[q, p] = 0.0
                v[:, idx] = v[:, idx] @ j
    else:
        raise RuntimeError("Jacobi iteration did not converge")
    return np.real(np.diag(a)).copy(), v


def herm_eig(m: np.ndarray, method: str = "auto") -> Spectrum:
    """Eigendecomposition of a Hermitian matrix, ascending and deterministic.

    Parameters
    ----------
    m : ndarray
        Hermitian matrix (checked to within ``1e-12`` entrywise).
    method : {'auto', 'jacobi', 'lapack'}
        ``'auto'`` uses the Jacobi solver up to ``JACOBI_MAX_DIM`` and LAPACK
        beyond that.

    Returns
    -------
    Spectrum
        Ascending eigenvalues and orthonormal eigenvector columns.  Each
        column's first significant component is real and positive;
        degenerate clusters are ordered lexicographically.
    """
    m = np.asarray(m)
    if not is_hermitian(m, HERMITIAN_TOL * max(1.0, np.max(np.abs(m), initial=0.0))):
        raise NotHermitianError("matrix is not Hermitian within 1e-12")
    n = m.shape[0]
    if method == "auto":
        method = "jacobi" if n <= JACOBI_MAX_DIM else "lapack"
    if method == "jacobi":
        w, v = jacobi_eigh(m)
    elif method == "lapack":
        w, v = np.linalg.eigh(m)
    else:
        raise ValueError(f"unknown method {method!r}")
    scale = max(np.max(np.abs(w), initial=0.0), 1.0)
    return _order_spectrum(w, v, 1e-10 * scale)


def _is_log_type(f: Callable) -> bool:
    return any(f is g for g in _LOG_FUNCS)


def matrix_func_on_support(
    m: np.ndarray,
    f: Callable[[np.ndarray], np.ndarray],
    support_cutoff: float = SUPPORT_CUTOFF,
    *,
    log_type: bool | None = None,
) -> np.ndarray:
    """Apply a scalar function to a Hermitian matrix through its spectrum.

    For log-type functions (detected automatically for the numpy and math
    logs, or forced with `log_type`) the matrix must be PSD and `f` is
    applied only to eigenvalues above ``support_cutoff * max(eigenvalue)``;
    the rest map to 0, i.e. ``0 log 0 = 0``.  Other functions act on the
    whole spectrum, so ``exp(0) = I``.
    """
    if log_type is None:
        log_type = _is_log_type(f)
    w, v = herm_eig(m)
    if log_type:
        if w.size and w[0] < -PSD_TOL:
            raise NotPSDError(f"eigenvalue {w[0]:.3e} < -{PSD_TOL:g} for a log-type function")
        cutoff = support_cutoff * max(np.max(w, initial=0.0), 0.0)
        mask = w > cutoff
        fw = np.zeros_like(w)
        fw[mask] = f(w[mask])
    else:
        fw = np.asarray(f(w), dtype=float)
    return (v * fw) @ dagger(v)


def logm_psd(m: np.ndarray, base: float = 2.0, support_cutoff: float = SUPPORT_CUTOFF) -> np.ndarray:
    """Logarithm of a PSD matrix restricted to its support."""
    if base == 2.0:
        return matrix_func_on_support(m, np.log2, support_cutoff)
    if base == math.e:
        return matrix_func_on_support(m, np.log, support_cutoff)
    return matrix_func_on_support(m, np.log, support_cutoff) / math.log(base)


def expm_herm(m: np.ndarray) -> np.ndarray:
    return matrix_func_on_support(m, np.exp, log_type=False)


def random_unitary(n: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-random unitary via QR of a complex Gaussian matrix."""
    z = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / math.sqrt(2)
    q, r = np.linalg.qr(z)
    d = np.diag(r)
    return q * (d / np.abs(d))
