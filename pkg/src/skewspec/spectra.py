"""Skew spectra, skew spectral radius, skew energy and exact determinants.

The eigenvalues of a skew adjacency matrix ``S`` are ``±i*sigma`` where the
``sigma`` are the singular values of ``S``. They are computed as square
roots of the eigenvalues of the integer matrix ``S^T S`` using a cyclic
Jacobi eigensolver that works on one matrix or a whole stack at once.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import OrientedGraph, UndirectedGraph, skew_adjacency

JACOBI_TOL = 1e-12
MAX_SWEEPS = 100
SYMMETRY_TOL = 1e-12
CLAMP_TOL = 1e-10
CLUSTER_GAP = 1e-7
PFAFFIAN_MAX_N = 16
BATCH_DET_MAX_N = 14


class EigenError(ArithmeticError):
    """Non-symmetric input, non-convergence or an impossible negative eigenvalue."""


def symmetric_eigenvalues(M, tol: float = JACOBI_TOL, max_sweeps: int = MAX_SWEEPS) -> np.ndarray:
    """Eigenvalues (descending) of a real symmetric matrix or a stack of them.

    Cyclic Jacobi: sweeps of plane rotations over every (p, q) pair until the
    off-diagonal Frobenius norm is at most ``tol * ||M||_F``.
    """
    A = np.array(M, dtype=np.float64)
    if A.ndim < 2 or A.shape[-1] != A.shape[-2]:
        raise EigenError(f"expected square matrices, got shape {A.shape}")
    batch_shape = A.shape[:-2]
    n = A.shape[-1]
    A = A.reshape(-1, n, n)
    fro = np.sqrt((A * A).sum(axis=(1, 2)))
    asym = np.abs(A - A.transpose(0, 2, 1)).max(axis=(1, 2), initial=0.0)
    if (asym > SYMMETRY_TOL * np.maximum(fro, 1.0)).any():
        raise EigenError("matrix is not symmetric")
    A = 0.5 * (A + A.transpose(0, 2, 1))

    diag_idx = np.arange(n)
    off_mask = ~np.eye(n, dtype=bool)
    active = np.arange(A.shape[0])
    for sweep in range(max_sweeps + 1):
        sub = A[active]
        off = np.sqrt((sub[:, off_mask] ** 2).sum(axis=1))
        keep = off > tol * fro[active]
        active = active[keep]
        if active.size == 0:
            break
        if sweep == max_sweeps:
            raise EigenError(f"Jacobi iteration did not converge in {max_sweeps} sweeps")
        sub = sub[keep]
        for p in range(n - 1):
            for q in range(p + 1, n):
                _rotate(sub, p, q)
        A[active] = sub

    ev = np.sort(A[:, diag_idx, diag_idx], axis=1)[:, ::-1]
    return ev.reshape(batch_shape + (n,))


def _rotate(A: np.ndarray, p: int, q: int) -> None:
    """Annihilate A[:, p, q] in place on every matrix of the stack."""
    apq = A[:, p, q]
    nz = apq != 0.0
    if not nz.any():
        return
    theta = np.zeros_like(apq)
    with np.errstate(over="ignore"):
        theta[nz] = (A[nz, q, q] - A[nz, p, p]) / (2.0 * apq[nz])
        t = np.where(theta >= 0.0, 1.0, -1.0) / (np.abs(theta) + np.hypot(theta, 1.0))
    t[~nz] = 0.0
    c = (1.0 / np.sqrt(t * t + 1.0))[:, None]
    s = t[:, None] * c
    col_p = A[:, :, p].copy()
    col_q = A[:, :, q].copy()
    A[:, :, p] = c * col_p - s * col_q
    A[:, :, q] = s * col_p + c * col_q
    row_p = A[:, p, :].copy()
    row_q = A[:, q, :].copy()
    A[:, p, :] = c * row_p - s * row_q
    A[:, q, :] = s * row_p + c * row_q
    A[:, p, q] = 0.0
    A[:, q, p] = 0.0


def skew_sigma(S) -> np.ndarray:
    """Descending eigenvalue norms for one skew matrix or a stack ``(..., n, n)``."""
    S = np.asarray(S)
    gram = np.swapaxes(S, -1, -2) @ S
    ev = symmetric_eigenvalues(gram)
    if (ev < -CLAMP_TOL).any():
        raise EigenError(f"S^T S has a negative eigenvalue {ev.min():.3g}")
    # values within the solver's accuracy of zero are zero; otherwise their
    # square roots would be ~1e-8 and spoil pairing and switching comparisons
    fro = np.sqrt((gram.astype(np.float64) ** 2).sum(axis=(-1, -2)))[..., None]
    ev = np.where(ev <= JACOBI_TOL * fro, 0.0, ev)
    return np.sqrt(ev)


@dataclass(frozen=True)
class SkewSpectrum:
    """Norms ``sigma_1 >= ... >= sigma_n >= 0``; the eigenvalues are ``±i*sigma``."""

    sigma: np.ndarray
    m: int

    @property
    def n(self) -> int:
        return len(self.sigma)

    @property
    def radius(self) -> float:
        return float(self.sigma[0]) if self.n else 0.0

    @property
    def energy(self) -> float:
        return float(self.sigma.sum())

    @property
    def gap(self) -> float:
        return cluster_gap(self.radius)

    def imaginary_parts(self) -> np.ndarray:
        """The real numbers ``lambda_1 >= ... >= lambda_n`` with eigenvalues ``i*lambda_j``."""
        npos = int((self.sigma > self.gap).sum())
        half = self.sigma[: npos : 2]
        zeros = np.zeros(self.n - 2 * len(half))
        return np.concatenate([half, zeros, -half[::-1]])

    def is_paired(self) -> bool:
        return bool(pairing_holds(self.sigma[None, :])[0])

    def sum_of_squares(self) -> float:
        return float((self.sigma ** 2).sum())


def cluster_gap(radius):
    return CLUSTER_GAP * (1.0 + radius)


def pairing_holds(sigma: np.ndarray) -> np.ndarray:
    """Row-wise check that nonzero norms come in equal pairs (so zeros match the parity of n).

    Values are clustered by consecutive gaps of at most ``1e-7 * (1 + sigma_1)``.
    """
    sigma = np.atleast_2d(sigma)
    if sigma.shape[1] == 0:
        return np.ones(sigma.shape[0], dtype=bool)
    gap = cluster_gap(sigma[:, :1])
    positive = sigma > gap
    npos = positive.sum(axis=1)
    # a run of equal values may only start at an even position
    breaks = ((sigma[:, :-1] - sigma[:, 1:]) > gap) & positive[:, 1:]
    odd_start = breaks[:, 0::2].any(axis=1)
    return (npos % 2 == 0) & ~odd_start


def skew_spectrum(o: OrientedGraph) -> SkewSpectrum:
    return SkewSpectrum(skew_sigma(skew_adjacency(o)), o.m)


def skew_spectral_radius(o: OrientedGraph) -> float:
    return skew_spectrum(o).radius


def skew_energy(o: OrientedGraph) -> float:
    return skew_spectrum(o).energy


def adjacency_spectral_radius(G: UndirectedGraph) -> float:
    if G.n == 0:
        return 0.0
    return float(symmetric_eigenvalues(G.adjacency())[0])


@dataclass(frozen=True)
class ExactDeterminant:
    value: int
    pfaffian: int | None

    @property
    def nonsingular(self) -> bool:
        return self.value != 0


def bareiss_determinant(M) -> int:
    """Exact integer determinant by fraction-free Gaussian elimination."""
    A = [[int(x) for x in row] for row in np.asarray(M).tolist()]
    n = len(A)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if A[i][k] != 0), None)
            if pivot is None:
                return 0
            A[k], A[pivot] = A[pivot], A[k]
            sign = -sign
        akk = A[k][k]
        row_k = A[k]
        for i in range(k + 1, n):
            row_i = A[i]
            aik = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = akk
    return sign * A[n - 1][n - 1]


def batch_determinants(S) -> np.ndarray:
    """Exact determinants of a stack of integer matrices (vectorised Bareiss, int64, n <= 14)."""
    A = np.array(S, dtype=np.int64)
    count, n = A.shape[0], A.shape[-1]
    if n > BATCH_DET_MAX_N:
        return np.array([bareiss_determinant(M) for M in A], dtype=object)
    if n == 0:
        return np.ones(count, dtype=np.int64)
    sign = np.ones(count, dtype=np.int64)
    prev = np.ones(count, dtype=np.int64)
    alive = np.ones(count, dtype=bool)
    for k in range(n - 1):
        zero = np.flatnonzero((A[:, k, k] == 0) & alive)
        if zero.size:
            col = A[zero, k:, k] != 0
            found = col.any(axis=1)
            dead = zero[~found]
            alive[dead] = False
            A[dead] = 0
            rows = zero[found]
            piv = k + np.argmax(col[found], axis=1)
            row_k = A[rows, k, :].copy()
            A[rows, k, :] = A[rows, piv, :]
            A[rows, piv, :] = row_k
            sign[rows] *= -1
        akk = np.where(alive, A[:, k, k], 1)
        A[:, k + 1:, k + 1:] = (
            A[:, k + 1:, k + 1:] * akk[:, None, None] - A[:, k + 1:, k:k + 1] * A[:, k:k + 1, k + 1:]
        ) // prev[:, None, None]
        A[:, k + 1:, k] = 0
        prev = akk
    det = sign * A[:, n - 1, n - 1]
    det[~alive] = 0
    return det


def pfaffian(S) -> int:
    """Pfaffian by expansion along the first row, skipping zero entries."""
    A = [[int(x) for x in row] for row in np.asarray(S).tolist()]
    n = len(A)
    if n % 2:
        return 0
    if n > PFAFFIAN_MAX_N:
        raise ValueError(f"pfaffian expansion limited to n <= {PFAFFIAN_MAX_N}")

    def expand(idx):
        if not idx:
            return 1
        i = idx[0]
        total = 0
        for pos in range(1, len(idx)):
            a = A[i][idx[pos]]
            if a:
                rest = idx[1:pos] + idx[pos + 1:]
                total += (a if pos % 2 else -a) * expand(rest)
        return total

    return expand(tuple(range(n)))


def exact_determinant(S) -> ExactDeterminant:
    S = np.asarray(S)
    n = S.shape[0]
    if n % 2:
        return ExactDeterminant(0, 0)
    det = bareiss_determinant(S)
    pf = pfaffian(S) if n <= PFAFFIAN_MAX_N else None
    if pf is not None and pf * pf != det:
        raise ArithmeticError(f"pfaffian^2 = {pf * pf} disagrees with det = {det}")
    return ExactDeterminant(det, pf)
