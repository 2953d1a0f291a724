"""Exhaustive and randomised searches over orientations.

An orientation of ``G`` is encoded as an integer: bit ``k`` set means the
k-th sorted edge points from its higher to its lower endpoint. Batches of
codes are turned into stacks of skew matrices and evaluated together.
"""

from __future__ import annotations

import json
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import cached_property

import numpy as np

from . import corpus
from .bounds import BOUND_TOL, log_bound, mc_classic, mc_improved, nonsingular_bound, optimum_upper
from .characterize import has_i_sqrt_delta_eigenvalue, orthogonal_max_degree_vertices
from .coloring import (  # noqa: F401  re-exported search surface
    OrientedColoring,
    is_valid_oriented_coloring,
    optimal_oriented_coloring,
    oriented_chromatic_number,
)
from .generators import random_orientation, random_regular
from .graph import GraphError, OrientedGraph, UndirectedGraph, orientation_matrices, skew_adjacency
from .io import to_graph6
from .spectra import adjacency_spectral_radius, batch_determinants, pairing_holds, skew_sigma, skew_spectrum

ENUMERATION_MAX_M = 26
CHUNK = 1 << 15
SUM_SQUARES_TOL = 1e-8
EIGENVALUE_TOL = 1e-6
LOG_EQUALITY_MARGIN = 1e-3


def orientation_codes(G: UndirectedGraph, dedup_switching: bool = False) -> np.ndarray:
    """Codes of all orientations, or of one representative per switching class at least.

    With dedup the edges of a spanning forest stay low-to-high; switching can
    reach any orientation of forest edges, so no class is lost.
    """
    if G.m > ENUMERATION_MAX_M:
        raise ValueError(f"enumeration limited to m <= {ENUMERATION_MAX_M} (got {G.m})")
    if not dedup_switching:
        return np.arange(1 << G.m, dtype=np.int64)
    forest = set(G.spanning_forest())
    free = np.array([k for k in range(G.m) if k not in forest], dtype=np.int64)
    sub = np.arange(1 << free.size, dtype=np.int64)
    codes = np.zeros(sub.size, dtype=np.int64)
    for i, k in enumerate(free):
        codes |= ((sub >> i) & 1) << k
    return codes


def enumerate_orientations(G: UndirectedGraph, dedup_switching: bool = False):
    for code in orientation_codes(G, dedup_switching):
        yield OrientedGraph.from_code(G, int(code))


def _lex_key(codes: np.ndarray, m: int) -> np.ndarray:
    """Bit-reversed codes, so integer order equals lexicographic order of arc vectors."""
    key = np.zeros_like(codes)
    for k in range(m):
        key |= ((codes >> k) & 1) << (m - 1 - k)
    return key


@dataclass
class SearchOutcome:
    arcs: list
    n: int
    value: float
    examined: int
    seed: int | None = None
    elapsed: float = 0.0
    extra: dict = field(default_factory=dict)

    @property
    def orientation(self) -> OrientedGraph:
        return OrientedGraph(self.n, self.arcs)

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)


def min_rho_orientation(G: UndirectedGraph, tie_tol: float = 1e-9) -> SearchOutcome:
    """Orientation of ``G`` with the smallest skew spectral radius (exhaustive).

    Ties within ``tie_tol`` go to the lexicographically smallest arc vector.
    """
    start = time.perf_counter()
    codes = orientation_codes(G)
    best_val, best_key, best_code = math.inf, None, None
    for lo in range(0, codes.size, CHUNK):
        chunk = codes[lo:lo + CHUNK]
        rho = skew_sigma(orientation_matrices(G, chunk))[:, 0] if G.n else np.zeros(chunk.size)
        cmin = float(rho.min())
        if cmin < best_val - tie_tol:
            best_key = None
        best_val = min(best_val, cmin)
        near = rho <= best_val + tie_tol
        keys = _lex_key(chunk[near], G.m)
        k = int(keys.argmin())
        if best_key is None or keys[k] < best_key:
            best_key, best_code = int(keys[k]), int(chunk[near][k])
    o = OrientedGraph.from_code(G, best_code)
    value = skew_spectrum(o).radius if o.n else 0.0
    return SearchOutcome(list(o.arcs), G.n, value, int(codes.size), None, time.perf_counter() - start)


# ---------------------------------------------------------------------------
# batch properties for exhaustive scans


class Batch:
    """A graph with a batch of orientation codes; spectral data computed on demand."""

    def __init__(self, G: UndirectedGraph, codes):
        self.G = G
        self.codes = np.asarray(codes, dtype=np.int64)

    @cached_property
    def S(self) -> np.ndarray:
        return orientation_matrices(self.G, self.codes)

    @cached_property
    def sigma(self) -> np.ndarray:
        return skew_sigma(self.S)

    @property
    def rho(self) -> np.ndarray:
        return self.sigma[:, 0]

    @property
    def energy(self) -> np.ndarray:
        return self.sigma.sum(axis=1)

    @cached_property
    def det(self) -> np.ndarray:
        if self.G.n % 2:
            return np.zeros(self.codes.size, dtype=np.int64)
        return batch_determinants(self.S)

    @cached_property
    def net_degrees(self) -> np.ndarray:
        return self.S.sum(axis=2)

    @cached_property
    def gram(self) -> np.ndarray:
        return np.swapaxes(self.S, 1, 2) @ self.S

    @property
    def n(self) -> int:
        return self.G.n

    @property
    def delta(self) -> int:
        return self.G.max_degree

    def orthogonal_columns(self) -> np.ndarray:
        """(batch, n) flags: max-degree vertex whose S column is orthogonal to every other."""
        n = self.n
        off = self.gram * (1 - np.eye(n, dtype=np.int64))
        clean = ~off.any(axis=2)
        return clean & (self.G.degrees == self.delta)[None, :]

    def __len__(self):
        return self.codes.size


def _prop_sqrt_delta(b: Batch):
    return b.rho >= math.sqrt(b.delta) - BOUND_TOL


def _prop_sum_squares(b: Batch):
    m2 = 2 * b.G.m
    return np.abs((b.sigma ** 2).sum(axis=1) - m2) <= SUM_SQUARES_TOL * max(1, m2)


def _prop_pairing(b: Batch):
    return pairing_holds(b.sigma)


def _prop_degree_sequence(b: Batch):
    d = b.net_degrees
    bound = np.sqrt((d * d).sum(axis=1) / b.n)
    return bound <= b.rho + BOUND_TOL


def _prop_adjacency_upper(b: Batch):
    return b.rho <= adjacency_spectral_radius(b.G) + 1e-8


def _prop_energy_chain(b: Batch):
    classic = mc_classic(b.n, b.G.m, b.det)
    improved = mc_improved(b.n, b.G.m, b.det)
    E = b.energy
    upper = optimum_upper(b.n, b.delta)
    return (classic <= improved + BOUND_TOL) & (improved <= E + BOUND_TOL) & (E <= upper + BOUND_TOL)


def _nonsingular_terms(b: Batch):
    """Mask of nonsingular orientations with their nonsingular and log bounds."""
    ok = b.det > 0
    if not ok.any():
        return ok, np.zeros(0), np.zeros(0)
    det = b.det[ok].astype(np.float64)
    return ok, nonsingular_bound(b.n, b.delta, det), log_bound(b.n, b.delta, det)


def _prop_nonsingular_chain(b: Batch):
    holds = np.ones(len(b), dtype=bool)
    ok, nonsing, logb = _nonsingular_terms(b)
    if b.n >= 4 and ok.any():
        holds[ok] = (logb <= nonsing + BOUND_TOL) & (nonsing <= b.energy[ok] + BOUND_TOL)
    return holds


def _prop_log_equality(b: Batch):
    """Energy equals the log bound iff perfect matching; otherwise it misses by >= 1e-3."""
    holds = np.ones(len(b), dtype=bool)
    ok, _, logb = _nonsingular_terms(b)
    if b.n >= 4 and ok.any():
        gap = np.abs(b.energy[ok] - logb)
        matching = bool((b.G.degrees == 1).all())
        holds[ok] = gap <= BOUND_TOL if matching else gap >= LOG_EQUALITY_MARGIN
    return holds


def _prop_orthogonality(b: Batch):
    """Radius sqrt(D) forces every max-degree column to be orthogonal to the rest."""
    if b.delta == 0:
        return np.ones(len(b), dtype=bool)
    attains = np.abs(b.rho - math.sqrt(b.delta)) <= BOUND_TOL
    maxdeg = b.G.degrees == b.delta
    all_clean = (b.orthogonal_columns() | ~maxdeg[None, :]).all(axis=1)
    return ~attains | all_clean


def _prop_eigenvalue_guarantee(b: Batch):
    """One orthogonal max-degree column forces sqrt(D) into the sigma list."""
    if b.delta == 0:
        return np.ones(len(b), dtype=bool)
    hyp = b.orthogonal_columns().any(axis=1)
    present = (np.abs(b.sigma - math.sqrt(b.delta)) <= EIGENVALUE_TOL).any(axis=1)
    return ~hyp | present


def _prop_regular_equivalence(b: Batch):
    if b.delta == 0 or not b.G.is_regular():
        return np.ones(len(b), dtype=bool)
    attains = np.abs(b.rho - math.sqrt(b.delta)) <= BOUND_TOL
    eye = b.delta * np.eye(b.n, dtype=np.int64)
    optimum = ~(b.gram - eye[None]).any(axis=(1, 2))
    return attains == optimum


def _prop_double_sqrt_delta(b: Batch):
    """Deliberately false (rho >= 2 sqrt(D)); used to exercise the violation path."""
    return b.rho >= 2 * math.sqrt(b.delta) - BOUND_TOL


PROPERTIES = {
    "sqrt-delta": _prop_sqrt_delta,
    "sum-squares": _prop_sum_squares,
    "pairing": _prop_pairing,
    "degree-sequence": _prop_degree_sequence,
    "adjacency-upper": _prop_adjacency_upper,
    "energy-chain": _prop_energy_chain,
    "nonsingular-chain": _prop_nonsingular_chain,
    "log-equality": _prop_log_equality,
    "orthogonality": _prop_orthogonality,
    "eigenvalue-guarantee": _prop_eigenvalue_guarantee,
    "regular-equivalence": _prop_regular_equivalence,
    "double-sqrt-delta": _prop_double_sqrt_delta,
}


@dataclass
class Violation:
    property: str
    graph6: str
    n: int
    code: int
    arcs: list
    rho_s: float

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @property
    def orientation(self) -> OrientedGraph:
        return OrientedGraph(self.n, self.arcs)


def scan_batch(prop: str, batch: Batch) -> list:
    holds = PROPERTIES[prop](batch)
    out = []
    for i in np.flatnonzero(~np.asarray(holds)):
        o = OrientedGraph.from_code(batch.G, int(batch.codes[i]))
        out.append(Violation(prop, to_graph6(batch.G), batch.G.n, int(batch.codes[i]),
                             [list(a) for a in o.arcs], float(batch.rho[i])))
    return out


def sample_orientations(graphs, count: int, seed: int):
    """``count`` uniformly random (graph, orientation) pairs grouped per graph."""
    rng = np.random.default_rng(seed)
    picks = rng.integers(0, len(graphs), size=count)
    groups = {}
    for gi in picks:
        G = graphs[gi]
        groups.setdefault(int(gi), []).append(int(rng.integers(0, 1 << G.m)) if G.m else 0)
    return [(graphs[gi], np.array(groups[gi], dtype=np.int64)) for gi in sorted(groups)]


def graph_batches(graphs, dedup_switching: bool = False, sample: int | None = None, seed: int = 0):
    """Yield Batch objects covering all (or ``sample`` random) orientations of ``graphs``."""
    if sample is not None:
        for G, codes in sample_orientations(list(graphs), sample, seed):
            yield Batch(G, codes)
        return
    for G in graphs:
        codes = orientation_codes(G, dedup_switching)
        for lo in range(0, codes.size, CHUNK):
            yield Batch(G, codes[lo:lo + CHUNK])


def exhaustive_property_scan(n_max: int, prop: str, n_min: int = 1, graphs=None,
                             dedup_switching: bool = False, sample: int | None = None,
                             seed: int = 0, threads: int = 1) -> list:
    """Violations of a named property over orientations of connected graphs.

    Graphs default to the bundled corpus of connected graphs with
    ``n_min <= n <= n_max`` (n_max <= 7). Results do not depend on ``threads``.
    """
    if prop not in PROPERTIES:
        raise ValueError(f"unknown property {prop!r}; choose from {sorted(PROPERTIES)}")
    if graphs is None:
        if n_max > corpus.CONNECTED_MAX_N:
            raise ValueError(f"all-graphs mode supports n_max <= {corpus.CONNECTED_MAX_N}")
        graphs = corpus.connected_graphs_upto(n_max, n_min)
    batches = graph_batches(graphs, dedup_switching, sample, seed)
    if threads > 1:
        with ThreadPoolExecutor(threads) as pool:
            parts = list(pool.map(lambda b: scan_batch(prop, b), batches))
    else:
        parts = [scan_batch(prop, b) for b in batches]
    return [v for part in parts for v in part]


# ---------------------------------------------------------------------------
# counterexample search for the converse of the orthogonality theorem


def _planted_graph(n: int, delta: int, p: float, rng) -> UndirectedGraph:
    """Random graph with vertex 0 of degree ``delta`` in which every other vertex
    shares an even number of neighbours with vertex 0."""
    nb = list(range(1, delta + 1))
    rest = list(range(delta + 1, n))
    edges = {(0, k) for k in nb}
    # even-degree subgraph on N(0) as a sum of random triangles
    for _ in range(int(rng.integers(0, 3))):
        a, b, c = sorted(int(x) for x in rng.choice(nb, 3, replace=False))
        edges ^= {(a, b), (b, c), (a, c)}
    for j in rest:
        k = 2 * int(rng.integers(0, delta // 2 + 1))
        edges |= {(int(w), j) for w in rng.choice(nb, k, replace=False)}
    for a in rest:
        for b in rest:
            if a < b and rng.random() < p:
                edges.add((a, b))
    return UndirectedGraph(n, edges)


def _even_common_neighbours(G: UndirectedGraph, v: int) -> bool:
    Nv = G.neighbors[v]
    return all(len(Nv & G.neighbors[j]) % 2 == 0 for j in range(G.n) if j != v)


def _orthogonalise(S: np.ndarray, v: int, nb: list):
    """Signs on the arcs at ``v`` making column v orthogonal to every other column, or None."""
    others = [j for j in range(S.shape[0]) if j != v]
    M = S[np.ix_(nb, others)]
    bits = np.arange(1 << len(nb))[:, None] >> np.arange(len(nb))
    eps = 1 - 2 * (bits & 1)
    ok = np.flatnonzero(~(eps @ M).any(axis=1))
    if ok.size == 0:
        return None
    T = S.copy()
    for e, k in zip(eps[ok[0]], nb):
        T[k, v] = e
        T[v, k] = -e
    return T


def find_orthogonality_counterexample(budget: float = 60.0, seed: int = 0, n_range=(8, 12),
                                      delta: int = 6, families=("planted", "regular"),
                                      margin: float = 0.01, max_candidates: int | None = None):
    """Search for an orientation with a max-degree vertex whose column is orthogonal
    to all others, yet whose skew spectral radius exceeds sqrt(D) + ``margin``.

    ``budget`` is wall-clock seconds. Candidates come from a seeded stream, so a
    run that finds a witness returns the same one regardless of machine speed.
    Returns a SearchOutcome or None.
    """
    if budget <= 0:
        return None
    rng = np.random.default_rng(seed)
    start = time.perf_counter()
    examined = 0
    while time.perf_counter() - start < budget:
        if max_candidates is not None and examined >= max_candidates:
            break
        family = families[examined % len(families)]
        examined += 1
        n = int(rng.integers(n_range[0], n_range[1] + 1))
        try:
            if family == "planted":
                if delta >= n:
                    continue
                G = _planted_graph(n, delta, float(rng.uniform(0.1, 0.5)), rng)
            else:
                G = random_regular(n, int(rng.integers(3, min(delta, n - 1) + 1)), int(rng.integers(1 << 31)))
        except (GraphError, ValueError):
            continue
        D = G.max_degree
        S = skew_adjacency(random_orientation(G, int(rng.integers(1 << 31))))
        for v in np.flatnonzero(G.degrees == D):
            v = int(v)
            if not _even_common_neighbours(G, v):
                continue
            T = _orthogonalise(S, v, sorted(G.neighbors[v]))
            if T is None:
                continue
            arcs = [(int(i), int(j)) for i, j in zip(*np.nonzero(T > 0))]
            o = OrientedGraph(G.n, arcs)
            spec = skew_spectrum(o)
            if spec.radius > math.sqrt(D) + margin:
                if v not in orthogonal_max_degree_vertices(o) or not has_i_sqrt_delta_eigenvalue(
                        o, EIGENVALUE_TOL, spec):
                    raise ArithmeticError("witness failed re-verification")
                return SearchOutcome(list(o.arcs), o.n, spec.radius, examined, seed,
                                     time.perf_counter() - start,
                                     {"vertex": v, "max_degree": D, "family": family})
    return None
