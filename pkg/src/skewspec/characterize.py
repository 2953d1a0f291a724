"""Checks for oriented graphs whose skew spectral radius equals sqrt(max degree).

Column inner products of ``S`` are computed in exact integer arithmetic;
tolerances only enter through spectral quantities.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

from .bounds import log_bound
from .graph import OrientedGraph, is_perfect_matching, skew_adjacency
from .spectra import SkewSpectrum, exact_determinant, skew_spectrum

SPECTRAL_TOL = 1e-7
INTEGER_TOL = 0.5


def gram(o: OrientedGraph) -> np.ndarray:
    """Integer matrix ``S^T S`` of column inner products."""
    S = skew_adjacency(o)
    return S.T @ S


def _require_degree(o: OrientedGraph) -> int:
    if o.max_degree < 1:
        raise ValueError("maximum degree must be at least 1")
    return o.max_degree


def is_optimum_skew_energy(o: OrientedGraph, tol: float = INTEGER_TOL) -> bool:
    """Whether ``S^T S = max_degree * I`` entrywise within ``tol``."""
    M = gram(o) - o.max_degree * np.eye(o.n, dtype=np.int64)
    return bool(np.abs(M).max(initial=0) <= tol)


def attains_sqrt_delta(o: OrientedGraph, tol: float = SPECTRAL_TOL, spectrum: SkewSpectrum | None = None) -> bool:
    delta = _require_degree(o)
    rho = (spectrum or skew_spectrum(o)).radius
    return abs(rho - math.sqrt(delta)) <= tol


def max_degree_orthogonality(o: OrientedGraph):
    """Whether every max-degree column of ``S`` is orthogonal to all other columns.

    Returns ``(holds, violations)`` with violations as ``(i, j)`` pairs.
    """
    M = gram(o)
    deg = o.underlying.degrees
    bad = []
    for i in np.flatnonzero(deg == o.max_degree):
        for j in range(o.n):
            if j != i and M[i, j] != 0:
                bad.append((int(i), j))
    return not bad, bad


def orthogonal_max_degree_vertices(o: OrientedGraph) -> list:
    """Max-degree vertices whose column is orthogonal to every other column."""
    if o.m == 0:
        return []
    M = gram(o)
    off = M - np.diag(np.diag(M))
    deg = o.underlying.degrees
    return [int(i) for i in np.flatnonzero(deg == o.max_degree) if not off[i].any()]


def has_i_sqrt_delta_eigenvalue(o: OrientedGraph, tol: float = SPECTRAL_TOL,
                                spectrum: SkewSpectrum | None = None) -> bool:
    root = math.sqrt(_require_degree(o))
    sigma = (spectrum or skew_spectrum(o)).sigma
    return bool((np.abs(sigma - root) <= tol).any())


@dataclass(frozen=True)
class LogEqualityCase:
    equality: bool
    perfect_matching: bool

    @property
    def agree(self) -> bool:
        return self.equality == self.perfect_matching


def log_bound_equality_case(o: OrientedGraph, tol: float = SPECTRAL_TOL) -> LogEqualityCase:
    """Energy meets the logarithmic bound, next to the structural perfect-matching test."""
    if o.n < 4:
        raise ValueError("equality cases are only checked for n >= 4")
    det = exact_determinant(skew_adjacency(o)).value
    if det == 0:
        raise ValueError("oriented graph is singular")
    gap = skew_spectrum(o).energy - log_bound(o.n, o.max_degree, det)
    return LogEqualityCase(abs(gap) <= tol, is_perfect_matching(o))


def regular_equivalence_check(o: OrientedGraph, tol: float = SPECTRAL_TOL) -> bool:
    """On a regular graph, radius sqrt(D) and ``S^T S = D I`` must coincide; False means a bug."""
    if not o.underlying.is_regular():
        raise ValueError("underlying graph is not regular")
    return attains_sqrt_delta(o, tol) == is_optimum_skew_energy(o)


@dataclass(frozen=True)
class CharacterizationResult:
    attains_sqrt_delta: bool
    optimum_energy: bool
    max_deg_columns_orthogonal: bool
    has_i_sqrt_delta_eigenvalue: bool
    tolerance: float

    def to_dict(self) -> dict:
        return asdict(self)


def characterize(o: OrientedGraph, tol: float = SPECTRAL_TOL) -> CharacterizationResult:
    spec = skew_spectrum(o)
    has_edges = o.max_degree >= 1
    return CharacterizationResult(
        attains_sqrt_delta=has_edges and attains_sqrt_delta(o, tol, spec),
        optimum_energy=is_optimum_skew_energy(o),
        max_deg_columns_orthogonal=max_degree_orthogonality(o)[0],
        has_i_sqrt_delta_eigenvalue=has_edges and has_i_sqrt_delta_eigenvalue(o, tol, spec),
        tolerance=tol,
    )
