"""Lower and upper bounds on the skew spectral radius and the skew energy.

The energy bounds take raw parameters ``(n, m, max_degree, det)`` so they
can be evaluated far beyond the sizes where a spectrum is computable.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import NamedTuple

import numpy as np

from .graph import OrientedGraph, UndirectedGraph, gamma, net_degrees, skew_adjacency, switch_to_source
from .spectra import exact_determinant, skew_spectrum

BOUND_TOL = 1e-7
PARTITION_EXHAUSTIVE_MAX_N = 16
GAMMA_MIN_N = 600


def partition_bound(o: OrientedGraph, A, B) -> float:
    """``|gamma(A,B) - gamma(B,A)| / sqrt(|A||B|)`` for nonempty, possibly overlapping A and B."""
    A, B = set(A), set(B)
    if not A or not B:
        raise ValueError("A and B must be nonempty")
    d = gamma(o, A, B) - gamma(o, B, A)
    # one rounding in the quotient keeps e.g. Delta / sqrt(Delta) exactly sqrt(Delta)
    return math.sqrt(d * d / (len(A) * len(B)))


@dataclass(frozen=True)
class PartitionWitness:
    A: frozenset
    B: frozenset
    value: float
    switched: frozenset = frozenset()  # switching set applied to o before (A, B) is read


def _neighbourhood_witness(o: OrientedGraph):
    """The singleton/neighbourhood pair after switching the max-degree vertex to a source."""
    if o.m == 0:
        return None
    v = int(np.argmax(o.underlying.degrees))
    W = frozenset(t for t, h in o.arcs if h == v)
    switched = switch_to_source(o, v)
    B = frozenset(o.underlying.neighbors[v])
    return PartitionWitness(frozenset({v}), B, partition_bound(switched, {v}, B), W)


def _best_disjoint_exhaustive(S: np.ndarray):
    n = S.shape[0]
    masks = (np.arange(1, 2 ** n)[:, None] >> np.arange(n)) & 1
    in_a = masks.astype(bool)
    sizes = masks.sum(axis=1)
    # r[j] = gamma(A, {j}) - gamma({j}, A)
    r = (masks @ S).astype(np.float64)
    best = (0.0, None, None)
    for sign in (1.0, -1.0):
        vals = np.where(in_a, -np.inf, sign * r)
        order = np.argsort(-vals, axis=1, kind="stable")
        sorted_vals = np.take_along_axis(vals, order, axis=1)
        prefix = np.cumsum(sorted_vals, axis=1)
        b = np.arange(1, n + 1)
        with np.errstate(invalid="ignore"):
            score = prefix / np.sqrt(sizes[:, None] * b[None, :])
        score = np.where(np.isfinite(score), score, -np.inf)
        flat = int(np.argmax(score))
        row, col = divmod(flat, n)
        if score[row, col] > best[0]:
            A = frozenset(np.flatnonzero(in_a[row]).tolist())
            B = frozenset(order[row, : col + 1].tolist())
            best = (float(score[row, col]), A, B)
    return best


def _hillclimb(S: np.ndarray, seed: int, restarts: int = 8):
    n = S.shape[0]
    rng = np.random.default_rng(seed)

    def value(labels):
        a = labels == 1
        b = labels == 2
        if not a.any() or not b.any():
            return -1.0
        return abs(float(a.astype(np.int64) @ S @ b.astype(np.int64))) / math.sqrt(a.sum() * b.sum())

    best = (0.0, None, None)
    for _ in range(restarts):
        labels = rng.integers(0, 3, size=n)
        current = value(labels)
        improved = True
        while improved:
            improved = False
            for v in range(n):
                for lab in (0, 1, 2):
                    if lab == labels[v]:
                        continue
                    old = labels[v]
                    labels[v] = lab
                    cand = value(labels)
                    if cand > current + 1e-12:
                        current = cand
                        improved = True
                    else:
                        labels[v] = old
        if current > best[0]:
            best = (current, frozenset(np.flatnonzero(labels == 1).tolist()),
                    frozenset(np.flatnonzero(labels == 2).tolist()))
    return best


def best_partition_bound(o: OrientedGraph, mode: str = "exhaustive", seed: int = 0) -> PartitionWitness:
    """Largest partition bound over disjoint nonempty pairs and the neighbourhood family.

    ``exhaustive`` is exact over disjoint pairs (n <= 16): for each A the best B
    of every size takes the largest (or smallest) column sums of ``S`` over A.
    """
    if o.m == 0:
        return PartitionWitness(frozenset(), frozenset(), 0.0)
    S = skew_adjacency(o)
    if mode == "exhaustive":
        if o.n > PARTITION_EXHAUSTIVE_MAX_N:
            raise ValueError(f"exhaustive partition search limited to n <= {PARTITION_EXHAUSTIVE_MAX_N}")
        value, A, B = _best_disjoint_exhaustive(S)
    elif mode == "hillclimb":
        value, A, B = _hillclimb(S, seed)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    nb = _neighbourhood_witness(o)
    if A is None or nb.value > value + 1e-12:
        return nb
    return PartitionWitness(A, B, value)


def sqrt_delta_bound(G) -> float:
    """Square root of the maximum degree; accepts either graph type."""
    return math.sqrt(G.max_degree)


def degree_sequence_bound(o: OrientedGraph) -> float:
    if o.n == 0:
        return 0.0
    d = net_degrees(o)
    return math.sqrt(float((d * d).sum()) / o.n)


def chromatic_bound(o: OrientedGraph, chi_o: int) -> float:
    """Average degree over ``chi_o - 1``."""
    if chi_o < 2:
        if o.m > 0:
            raise ValueError("an oriented graph with arcs needs at least 2 colours")
        return 0.0
    return o.avg_degree / (chi_o - 1)


def max_cut_local(G: UndirectedGraph, seed: int = 0):
    """Bipartition at a single-vertex-move local optimum; its cut has at least m/2 edges."""
    rng = np.random.default_rng(seed)
    side = rng.integers(0, 2, size=G.n).astype(bool)
    improved = True
    while improved:
        improved = False
        for v in range(G.n):
            same = sum(1 for w in G.neighbors[v] if side[w] == side[v])
            if 2 * same > len(G.neighbors[v]):
                side[v] = not side[v]
                improved = True
    A = frozenset(np.flatnonzero(~side).tolist())
    B = frozenset(np.flatnonzero(side).tolist())
    return A, B


def cut_size(G: UndirectedGraph, A) -> int:
    A = set(A)
    return sum(1 for u, v in G.edges if (u in A) != (v in A))


def average_degree_orientation(G: UndirectedGraph, seed: int = 0):
    """Orient the cut of a local max-cut from A to B, all other edges low to high.

    Returns the orientation and ``avg_degree / 2``, which its skew spectral radius reaches.
    """
    A, _ = max_cut_local(G, seed)
    arcs = []
    for u, v in G.edges:
        if (u in A) != (v in A):
            arcs.append((u, v) if u in A else (v, u))
        else:
            arcs.append((u, v))
    return OrientedGraph(G.n, arcs), G.avg_degree / 2


def _scalar(x):
    return float(x) if np.ndim(x) == 0 else x


def _det_power(det_s, n: int):
    det_s = np.asarray(det_s, dtype=np.float64)
    if (det_s < 0).any():
        raise ValueError("det(S) must be nonnegative")
    positive = det_s > 0
    return np.where(positive, np.exp(2.0 * np.log(np.where(positive, det_s, 1.0)) / max(n, 1)), 0.0)


def mc_classic(n: int, m: int, det_s):
    """``sqrt(2m + n(n-1) det^(2/n))``; ``det_s`` may be an array."""
    return _scalar(np.sqrt(2 * m + n * (n - 1) * _det_power(det_s, n)))


def mc_improved(n: int, m: int, det_s):
    """``sqrt(4m + n(n-2) det^(2/n))``; ``det_s`` may be an array."""
    return _scalar(np.sqrt(4 * m + n * (n - 2) * _det_power(det_s, n)))


def _check_nonsingular(delta, det_s):
    det_s = np.asarray(det_s, dtype=np.float64)
    if (det_s <= 0).any():
        raise ValueError("bound needs a nonsingular oriented graph (det(S) > 0)")
    if delta < 1:
        raise ValueError("maximum degree must be at least 1")
    return det_s


def nonsingular_bound(n: int, delta: float, det_s):
    """``2 sqrt(D) + (n-2) (det/D)^(1/(n-2))``; ``2 sqrt(D)`` when n = 2."""
    det_s = _check_nonsingular(delta, det_s)
    if n % 2 or n < 2:
        raise ValueError("a nonsingular oriented graph has even order n >= 2")
    if n == 2:
        return _scalar(np.full(det_s.shape, 2 * math.sqrt(delta)))
    return _scalar(2 * math.sqrt(delta) + (n - 2) * np.exp((np.log(det_s) - math.log(delta)) / (n - 2)))


def log_bound(n: int, delta: float, det_s):
    """``2 sqrt(D) + n - 2 + ln det - ln D``."""
    det_s = _check_nonsingular(delta, det_s)
    return _scalar(2 * math.sqrt(delta) + n - 2 + np.log(det_s) - math.log(delta))


def optimum_upper(n: int, delta: float) -> float:
    return n * math.sqrt(delta)


def in_gamma(n: int, m: int, delta: float, det_s: float) -> bool:
    """Parameter test for the large sparse class where the log bound beats ``mc_improved``.

    Membership also requires a connected graph; callers holding a graph check that.
    """
    return n >= GAMMA_MIN_N and n / 2 <= delta <= det_s <= n * n and m <= 10 * n


class GammaComparison(NamedTuple):
    log_bound: float
    mc_improved: float
    log_wins: bool


def gamma_comparison(n: int, m: int, delta: float, det_s: float) -> GammaComparison:
    if not in_gamma(n, m, delta, det_s):
        raise ValueError(f"parameters (n={n}, m={m}, delta={delta}, det={det_s}) are outside the class")
    lb = log_bound(n, delta, det_s)
    mc = mc_improved(n, m, det_s)
    return GammaComparison(lb, mc, lb > mc)


def family_tuple(n: int) -> tuple:
    """``(n, 3n/2 - 2, n/2, n^2/4)``: the sparse family used to show the gain in the class."""
    return n, 3 * n // 2 - 2, n // 2, n * n // 4


def sample_gamma(count: int, seed: int = 0, n_max: int = 4000, families=(600, 1000, 2000)) -> list:
    """Deterministic ``(n, m, delta, det)`` tuples inside the class.

    The family tuples for ``families`` come first; the rest draw an even n,
    then delta, a log-uniform det in ``[delta, n^2]`` and ``m`` in
    ``[max(n - 1, delta), 10n]``.
    """
    rng = np.random.default_rng(seed)
    out = [family_tuple(n) for n in families][:count]
    while len(out) < count:
        n = 2 * int(rng.integers(GAMMA_MIN_N // 2, n_max // 2 + 1))
        delta = int(rng.integers(n // 2, n))
        det = int(round(math.exp(rng.uniform(math.log(delta), math.log(n * n)))))
        det = min(max(det, delta), n * n)
        m = int(rng.integers(max(n - 1, delta), 10 * n + 1))
        out.append((n, m, delta, det))
    return out


@dataclass
class BoundsReport:
    n: int
    m: int
    max_degree: int
    avg_degree: float
    det_s: int | None
    rho_s: float
    energy: float
    partition_best: float
    sqrt_delta: float
    degree_seq: float
    chromatic: float | None
    mc_classic: float
    mc_improved: float
    nonsingular: float | None
    log_bound: float | None
    optimum_upper: float
    is_nonsingular: bool
    in_gamma: bool

    def to_dict(self) -> dict:
        return asdict(self)

    def violations(self, tol: float = BOUND_TOL) -> list:
        """Bounds that exceed their target by more than ``tol``; empty for a correct report."""
        checks = [
            ("partition_best", self.partition_best, "rho_s", self.rho_s),
            ("sqrt_delta", self.sqrt_delta, "rho_s", self.rho_s),
            ("degree_seq", self.degree_seq, "rho_s", self.rho_s),
            ("chromatic", self.chromatic, "rho_s", self.rho_s),
            ("mc_classic", self.mc_classic, "mc_improved", self.mc_improved),
            ("mc_improved", self.mc_improved, "energy", self.energy),
            ("nonsingular", self.nonsingular, "energy", self.energy),
            ("log_bound", self.log_bound, "energy", self.energy),
            ("energy", self.energy, "optimum_upper", self.optimum_upper),
        ]
        return [
            f"{name}={lo:.9g} exceeds {target}={hi:.9g}"
            for name, lo, target, hi in checks
            if lo is not None and lo > hi + tol
        ]


def full_report(o: OrientedGraph, chi_o: int | None = None, chromatic_max_n: int = 10,
                seed: int = 0) -> BoundsReport:
    """Every applicable bound next to the computed radius and energy.

    The chromatic bound uses ``chi_o`` when given, else the exact oriented
    chromatic number for n <= ``chromatic_max_n``.
    """
    from .coloring import oriented_chromatic_number

    spec = skew_spectrum(o)
    det = exact_determinant(skew_adjacency(o)).value
    n, m, delta = o.n, o.m, o.max_degree
    if chi_o is None and 0 < n <= chromatic_max_n:
        chi_o = oriented_chromatic_number(o, max_n=chromatic_max_n)
    mode = "exhaustive" if n <= PARTITION_EXHAUSTIVE_MAX_N else "hillclimb"
    nonsing = det > 0
    return BoundsReport(
        n=n,
        m=m,
        max_degree=delta,
        avg_degree=o.avg_degree,
        det_s=det,
        rho_s=spec.radius,
        energy=spec.energy,
        partition_best=best_partition_bound(o, mode=mode, seed=seed).value,
        sqrt_delta=sqrt_delta_bound(o),
        degree_seq=degree_sequence_bound(o),
        chromatic=chromatic_bound(o, chi_o) if chi_o is not None and n > 0 else None,
        mc_classic=mc_classic(n, m, det) if n else 0.0,
        mc_improved=mc_improved(n, m, det) if n else 0.0,
        nonsingular=nonsingular_bound(n, delta, det) if nonsing and delta >= 1 else None,
        log_bound=log_bound(n, delta, det) if nonsing and delta >= 1 else None,
        optimum_upper=optimum_upper(n, delta),
        is_nonsingular=nonsing,
        in_gamma=in_gamma(n, m, delta, det) and o.underlying.is_connected(),
    )

