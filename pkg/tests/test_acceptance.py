"""Acceptance checks, one test per criterion.

Oracles: LAPACK singular values (numpy) for every swept spectrum, a
brute-force labelling search for small oriented chromatic numbers, exact
integer arithmetic for determinants and Gram matrices.
"""

import itertools
import math

import numpy as np
import pytest

from skewspec import corpus
from skewspec.bounds import (
    average_degree_orientation,
    chromatic_bound,
    cut_size,
    degree_sequence_bound,
    family_tuple,
    gamma_comparison,
    in_gamma,
    max_cut_local,
    mc_classic,
    mc_improved,
    partition_bound,
    sample_gamma,
)
from skewspec.characterize import (
    has_i_sqrt_delta_eigenvalue,
    is_optimum_skew_energy,
    orthogonal_max_degree_vertices,
)
from skewspec.coloring import optimal_oriented_coloring, oriented_chromatic_number
from skewspec.generators import (
    cycle,
    directed_cycle,
    directed_path,
    odd_oriented_cycle,
    out_star,
    random_gnp,
    random_orientation,
    star,
)
from skewspec.graph import OrientedGraph, skew_adjacency, switch, switch_to_source
from skewspec.search import (
    PROPERTIES,
    Batch,
    find_orthogonality_counterexample,
    graph_batches,
    orientation_codes,
)
from skewspec.spectra import pairing_holds, pfaffian, skew_spectrum

TOL = 1e-7
SWEEP_PROPS = ["sqrt-delta", "degree-sequence", "orthogonality", "eigenvalue-guarantee",
               "energy-chain", "nonsingular-chain", "log-equality", "sum-squares", "pairing"]


@pytest.fixture(scope="module")
def sweep():
    """Every orientation of every connected graph with n <= 6, checked batch by batch."""
    stats = dict(count=0, svd_err=0.0, attains=0, hypothesis=0, nonsingular=0,
                 pf_checked=0, pf_bad=0, det_rel_err=0.0, log_cases_n46=0)
    violations = {p: 0 for p in SWEEP_PROPS}
    spectra = []
    for b in graph_batches(corpus.connected_graphs_upto(6)):
        stats["count"] += len(b)
        ref = np.linalg.svd(b.S.astype(float), compute_uv=False)
        stats["svd_err"] = max(stats["svd_err"], float(np.abs(ref - b.sigma).max()))
        for p in SWEEP_PROPS:
            violations[p] += int((~np.asarray(PROPERTIES[p](b))).sum())
        if b.delta:
            stats["attains"] += int((np.abs(b.rho - math.sqrt(b.delta)) <= TOL).sum())
            stats["hypothesis"] += int(b.orthogonal_columns().any(axis=1).sum())
        nz = np.flatnonzero(b.det > 0)
        stats["nonsingular"] += nz.size
        if b.n in (4, 6):
            stats["log_cases_n46"] += nz.size
        _check_determinants(b, nz, stats)
        spectra.append((b.sigma, b.G.m))
    return stats, violations, spectra


def _check_determinants(b, idx, stats):
    for i in idx:
        stats["pf_checked"] += 1
        if pfaffian(b.S[i]) ** 2 != b.det[i]:
            stats["pf_bad"] += 1
        sigma = b.sigma[i]
        approx = float(np.prod(sigma[0::2])) ** 2
        stats["det_rel_err"] = max(stats["det_rel_err"], abs(approx - int(b.det[i])) / int(b.det[i]))


@pytest.fixture(scope="module")
def n7_sample():
    graphs = list(corpus.connected_graphs(7))
    bad = 0
    spectra = []
    count = 0
    for b in graph_batches(graphs, sample=10_000, seed=7):
        count += len(b)
        bad += int((~PROPERTIES["sqrt-delta"](b)).sum())
        spectra.append((b.sigma, b.G.m))
    return count, bad, spectra


def _random_oriented(rng, n_max):
    n = int(rng.integers(2, n_max + 1))
    G = random_gnp(n, float(rng.uniform(0.2, 0.9)), int(rng.integers(1 << 31)))
    return random_orientation(G, int(rng.integers(1 << 31)))


def _nonempty_subset(rng, n):
    while True:
        mask = rng.integers(0, 2, size=n).astype(bool)
        if mask.any():
            return set(np.flatnonzero(mask).tolist())


@pytest.fixture(scope="module")
def partition_trials():
    rng = np.random.default_rng(2)
    rows = []
    for _ in range(1000):
        o = _random_oriented(rng, 10)
        A, B = _nonempty_subset(rng, o.n), _nonempty_subset(rng, o.n)
        spec = skew_spectrum(o)
        rows.append((partition_bound(o, A, B), spec))
    return rows


@pytest.fixture(scope="module")
def switching_trials():
    rng = np.random.default_rng(3)
    rows = []
    for _ in range(1000):
        o = _random_oriented(rng, 10)
        W = set(np.flatnonzero(rng.integers(0, 2, size=o.n)).tolist())
        rows.append((skew_spectrum(o), skew_spectrum(switch(o, W))))
    return rows


@pytest.fixture(scope="module")
def avg_degree_trials():
    rng = np.random.default_rng(5)
    rows = []
    for k in range(200):
        n = int(rng.integers(2, 13))
        G = random_gnp(n, float(rng.uniform(0.1, 0.9)), int(rng.integers(1 << 31)))
        o, target = average_degree_orientation(G, seed=k)
        A, _ = max_cut_local(G, seed=k)
        rows.append((G, skew_spectrum(o), target, cut_size(G, A)))
    return rows


@pytest.fixture(scope="module")
def chromatic_trials():
    rows = []
    for G in corpus.connected_graphs_upto(5):
        for code in orientation_codes(G):
            o = OrientedGraph.from_code(G, int(code))
            chi = oriented_chromatic_number(o)
            rows.append((o, chi, skew_spectrum(o)))
    return rows


def _brute_chi(o):
    """Smallest k admitting a valid labelling, trying all k^n labellings."""
    for k in range(1, o.n + 1):
        for labels in itertools.product(range(k), repeat=o.n):
            seen = {}
            ok = True
            for t, h in o.arcs:
                a, c = labels[t], labels[h]
                if a == c or seen.setdefault(frozenset((a, c)), (a, c)) != (a, c):
                    ok = False
                    break
            if ok:
                return k
    return o.n


# ---------------------------------------------------------------------------


@pytest.mark.criterion(1, "rho_s >= sqrt(max degree) on all orientations n <= 6 and 10,000 at n = 7")
def test_universal_sqrt_delta(sweep, n7_sample):
    stats, violations, _ = sweep
    assert stats["count"] == 141_359
    assert stats["svd_err"] < 1e-9
    assert violations["sqrt-delta"] == 0
    count, bad, _ = n7_sample
    assert count == 10_000
    assert bad == 0


@pytest.mark.criterion(2, "partition bound below rho_s on 1,000 random triples; star gives sqrt(D)")
def test_partition_bound(partition_trials):
    worst = max(value - spec.radius for value, spec in partition_trials)
    assert worst <= TOL
    rng = np.random.default_rng(0)
    for delta in range(2, 9):
        o = random_orientation(star(delta + 1), int(rng.integers(1 << 31)))
        w = switch_to_source(o, 0)
        assert partition_bound(w, {0}, set(range(1, delta + 1))) == math.sqrt(delta)


@pytest.mark.criterion(3, "switching preserves the spectrum on 1,000 random (o, W)")
def test_switching_invariance(switching_trials):
    diffs = [np.abs(a.sigma - b.sigma).max(initial=0.0) for a, b in switching_trials]
    assert max(diffs) <= 1e-8


@pytest.mark.criterion(4, "net-degree bound on the n <= 6 sweep; sqrt(3) on the out-star K_{1,3}")
def test_degree_sequence_bound(sweep):
    _, violations, _ = sweep
    assert violations["degree-sequence"] == 0
    o = out_star(4)
    assert degree_sequence_bound(o) == math.sqrt(3)
    assert abs(skew_spectrum(o).radius - math.sqrt(3)) <= TOL


@pytest.mark.criterion(5, "average-degree orientation reaches d/2 and its cut has >= m/2 edges")
def test_average_degree_orientation(avg_degree_trials):
    for G, spec, target, cut in avg_degree_trials:
        assert spec.radius >= target - TOL
        assert 2 * cut >= G.m


@pytest.mark.criterion(6, "chromatic bound with exact chi_o for all orientations n <= 5")
def test_chromatic_bound(chromatic_trials):
    for o, chi, spec in chromatic_trials:
        if o.m:
            assert chromatic_bound(o, chi) <= spec.radius + TOL
    assert oriented_chromatic_number(directed_path(3)) == _brute_chi(directed_path(3)) == 3
    assert oriented_chromatic_number(directed_cycle(4)) == _brute_chi(directed_cycle(4)) == 4
    # brute-force cross-check on every orientation up to n = 4
    for o, chi, _ in chromatic_trials:
        if o.n <= 4:
            assert chi == _brute_chi(o)
            assert optimal_oriented_coloring(o).k == chi


@pytest.mark.criterion(7, "pairing and sum of squares = 2m on every spectrum of criteria 1-6")
def test_spectrum_structure(sweep, n7_sample, partition_trials, switching_trials,
                            avg_degree_trials, chromatic_trials):
    batches = list(sweep[2]) + list(n7_sample[2])
    singles = [spec for _, spec in partition_trials]
    singles += [s for pair in switching_trials for s in pair]
    singles += [spec for _, spec, _, _ in avg_degree_trials]
    singles += [spec for _, _, spec in chromatic_trials]
    singles += [skew_spectrum(o) for o in (out_star(4), directed_path(3), directed_cycle(4))]
    checked = 0
    for sigma, m in batches:
        tol = 1e-8 * max(1, 2 * m)
        assert np.abs((sigma ** 2).sum(axis=1) - 2 * m).max() <= tol
        assert pairing_holds(sigma).all()
        checked += len(sigma)
    for spec in singles:
        assert abs(spec.sum_of_squares() - 2 * spec.m) <= 1e-8 * max(1, 2 * spec.m)
        assert spec.is_paired()
        checked += 1
    assert checked > 150_000


@pytest.mark.criterion(8, "regular graphs: rho_s = sqrt(D) iff S^T S = D I; odd C4 energy 4 sqrt(2)")
def test_regular_equivalence():
    graphs = corpus.connected_regular_graphs(8, 3)
    edge_sets = {(G.n, G.edges) for G in graphs}
    assert (4, cycle(4).edges) in edge_sets and (8, cycle(8).edges) in edge_sets
    assert any(G.n == 4 and G.m == 6 for G in graphs)
    both = 0
    for G in graphs:
        codes = orientation_codes(G)
        for lo in range(0, codes.size, 4096):
            b = Batch(G, codes[lo:lo + 4096])
            assert PROPERTIES["regular-equivalence"](b).all()
            both += int((np.abs(b.rho - math.sqrt(b.delta)) <= TOL).sum())
    assert both > 0
    o = odd_oriented_cycle(4)
    assert is_optimum_skew_energy(o)
    assert abs(skew_spectrum(o).radius - math.sqrt(2)) <= TOL
    assert abs(skew_spectrum(o).energy - 4 * math.sqrt(2)) <= TOL


@pytest.mark.criterion(9, "sqrt(D) radius forces orthogonal max-degree columns; one such column gives i sqrt(D)")
def test_orthogonality_and_eigenvalue(sweep):
    stats, violations, _ = sweep
    assert stats["attains"] > 0 and stats["hypothesis"] > 0
    assert violations["orthogonality"] == 0
    assert violations["eigenvalue-guarantee"] == 0


@pytest.mark.criterion(10, "seeded search finds an orthogonal column with rho_s > sqrt(D) + 0.01")
def test_converse_counterexample():
    found = find_orthogonality_counterexample(budget=60.0, seed=0)
    assert found is not None
    o = found.orientation
    v = found.extra["vertex"]
    delta = o.max_degree
    assert o.underlying.degrees[v] == delta
    S = skew_adjacency(o)
    col = S[:, v]
    assert all(int(col @ S[:, j]) == 0 for j in range(o.n) if j != v)
    assert v in orthogonal_max_degree_vertices(o)
    assert has_i_sqrt_delta_eigenvalue(o, tol=1e-6)
    rho = np.linalg.svd(S.astype(float), compute_uv=False)[0]
    assert rho > math.sqrt(delta) + 0.01
    assert abs(rho - found.value) <= 1e-9


@pytest.mark.criterion(11, "mc_classic <= mc_improved <= energy <= n sqrt(D); equality on odd C4")
def test_energy_chain(sweep):
    _, violations, _ = sweep
    assert violations["energy-chain"] == 0
    o = odd_oriented_cycle(4)
    E = skew_spectrum(o).energy
    assert abs(mc_classic(4, 4, 4) - math.sqrt(32)) <= TOL
    assert abs(mc_improved(4, 4, 4) - math.sqrt(32)) <= TOL
    assert abs(E - math.sqrt(32)) <= TOL


@pytest.mark.criterion(12, "log <= nonsingular <= energy; log equality exactly on perfect matchings")
def test_nonsingular_bounds(sweep):
    stats, violations, _ = sweep
    assert stats["log_cases_n46"] > 0
    assert violations["nonsingular-chain"] == 0
    assert violations["log-equality"] == 0
    # perfect matchings are disconnected, so the equality case needs every graph on 4 and 6 vertices
    nonsingular = matchings = bad = 0
    for b in graph_batches(corpus.all_graphs(4) + corpus.all_graphs(6)):
        ok = b.det > 0
        nonsingular += int(ok.sum())
        if (b.G.degrees == 1).all():
            matchings += int(ok.sum())
        for p in ("nonsingular-chain", "log-equality"):
            bad += int((~PROPERTIES[p](b)).sum())
    assert matchings == 2 ** 2 + 2 ** 3
    assert nonsingular > stats["log_cases_n46"]
    assert bad == 0


@pytest.mark.criterion(13, "log bound beats mc_improved on 10,000 samples of the large sparse class")
def test_gamma_comparison():
    samples = sample_gamma(10_000, seed=0)
    assert len(samples) == 10_000
    for n in (600, 1000, 2000):
        t = family_tuple(n)
        assert t == (n, 3 * n // 2 - 2, n // 2, n * n // 4)
        assert t in samples
    for t in samples:
        assert in_gamma(*t)
        assert gamma_comparison(*t).log_wins


@pytest.mark.criterion(14, "pfaffian^2 = det and det = (prod of paired sigma)^2 on nonsingular n <= 8")
def test_determinant_consistency(sweep):
    stats, _, _ = sweep
    assert stats["pf_checked"] == stats["nonsingular"] > 0
    assert stats["pf_bad"] == 0
    assert stats["det_rel_err"] <= 1e-6
    extra = {"pf_checked": 0, "pf_bad": 0, "det_rel_err": 0.0}
    graphs = [G for G in corpus.connected_regular_graphs(8, 3) if G.n == 8]
    for G in graphs:
        b = Batch(G, orientation_codes(G))
        _check_determinants(b, np.flatnonzero(b.det > 0), extra)
    rng = np.random.default_rng(14)
    gnp = [random_gnp(8, float(rng.uniform(0.25, 0.75)), int(rng.integers(1 << 31))) for _ in range(40)]
    for G, codes in _sample(gnp, 20_000, rng):
        b = Batch(G, codes)
        _check_determinants(b, np.flatnonzero(b.det > 0), extra)
    assert extra["pf_checked"] > 1000
    assert extra["pf_bad"] == 0
    assert extra["det_rel_err"] <= 1e-6


def _sample(graphs, count, rng):
    per = count // len(graphs)
    for G in graphs:
        yield G, rng.integers(0, 1 << G.m, size=per) if G.m else np.zeros(per, dtype=np.int64)
