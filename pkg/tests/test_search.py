import itertools
import json
import math

import numpy as np
import pytest
from hypothesis import given

from conftest import oriented_graphs, undirected_graphs
from skewspec import corpus
from skewspec.characterize import has_i_sqrt_delta_eigenvalue, orthogonal_max_degree_vertices
from skewspec.coloring import (
    ColoringError,
    OrientedColoring,
    coloring_violation,
    is_valid_oriented_coloring,
    optimal_oriented_coloring,
    oriented_chromatic_number,
)
from skewspec.generators import complete, cycle, directed_cycle, directed_path, path, random_gnp, random_regular
from skewspec.graph import OrientedGraph, UndirectedGraph, skew_adjacency, switch
from skewspec.search import (
    PROPERTIES,
    SearchOutcome,
    Violation,
    enumerate_orientations,
    exhaustive_property_scan,
    find_orthogonality_counterexample,
    min_rho_orientation,
    orientation_codes,
)
from skewspec.spectra import skew_spectrum

K2 = UndirectedGraph(2, [(0, 1)])


def svd_radius(o):
    return np.linalg.svd(skew_adjacency(o).astype(float), compute_uv=False)[0] if o.n else 0.0


@pytest.mark.parametrize("G, full, dedup", [(K2, 2, 1), (path(3), 4, 1), (cycle(4), 16, 2)])
def test_enumeration_counts(G, full, dedup):
    assert len(list(enumerate_orientations(G))) == full
    assert len(list(enumerate_orientations(G, dedup_switching=True))) == dedup


def test_enumeration_cap():
    with pytest.raises(ValueError):
        orientation_codes(complete(8))


@given(undirected_graphs(max_n=6))
def test_enumeration_is_complete_and_distinct(G):
    arcs = {o.arcs for o in enumerate_orientations(G)}
    assert len(arcs) == 2 ** G.m
    assert all(OrientedGraph(G.n, a).underlying == G for a in arcs)


def _switching_class(o):
    return frozenset(switch(o, {v for v in range(o.n) if mask >> v & 1}).arcs for mask in range(1 << o.n))


@pytest.mark.parametrize("G", [cycle(5), complete(4), UndirectedGraph(5, [(0, 1), (2, 3), (3, 4), (2, 4)])])
def test_dedup_hits_every_switching_class(G):
    reps = list(enumerate_orientations(G, dedup_switching=True))
    covered = set()
    for r in reps:
        covered |= _switching_class(r)
    assert covered == {o.arcs for o in enumerate_orientations(G)}
    # and every orientation shares its representative's spectrum
    for o in enumerate_orientations(G):
        rep = next(r for r in reps if o.arcs in _switching_class(r))
        assert np.allclose(skew_spectrum(o).sigma, skew_spectrum(rep).sigma, atol=1e-8)


def test_dedup_count_is_cycle_space():
    for G in corpus.connected_graphs_upto(5):
        assert orientation_codes(G, dedup_switching=True).size == 2 ** (G.m - G.n + 1)


def _brute_min_rho(G):
    best = min(svd_radius(o) for o in enumerate_orientations(G))
    near = [o for o in enumerate_orientations(G) if svd_radius(o) <= best + 1e-9]
    return best, min(near, key=lambda o: o.arc_vector())


@pytest.mark.parametrize("G", [cycle(4), path(3), complete(4), cycle(5), random_gnp(6, 0.6, 3)])
def test_min_rho_matches_brute_force(G):
    found = min_rho_orientation(G)
    best, witness = _brute_min_rho(G)
    assert found.value == pytest.approx(best, abs=1e-9)
    assert tuple(map(tuple, found.arcs)) == witness.arcs
    assert found.examined == 2 ** G.m
    assert found.value >= math.sqrt(G.max_degree) - 1e-7


def test_min_rho_examples():
    c4 = min_rho_orientation(cycle(4))
    assert c4.value == pytest.approx(math.sqrt(2))
    assert skew_spectrum(c4.orientation).radius == pytest.approx(c4.value, abs=1e-12)
    assert min_rho_orientation(path(3)).value == pytest.approx(math.sqrt(2))
    assert min_rho_orientation(complete(4)).value >= math.sqrt(3) - 1e-7


def test_outcome_json_round_trip():
    out = min_rho_orientation(cycle(4))
    d = json.loads(out.to_json())
    assert SearchOutcome(**d).orientation == out.orientation


def test_scan_examples():
    assert exhaustive_property_scan(5, "sqrt-delta") == []
    assert exhaustive_property_scan(5, "sum-squares") == []
    bad = exhaustive_property_scan(4, "double-sqrt-delta")
    assert bad and bad[0].graph6 == "A_"
    v = bad[0]
    assert Violation(**json.loads(v.to_json())) == v
    assert v.orientation.code() == v.code
    with pytest.raises(ValueError):
        exhaustive_property_scan(8, "sqrt-delta")
    with pytest.raises(ValueError):
        exhaustive_property_scan(3, "no-such-property")


def test_scan_properties_hold_up_to_five():
    for prop in PROPERTIES:
        if prop != "double-sqrt-delta":
            assert exhaustive_property_scan(5, prop) == [], prop


def test_scan_is_thread_count_independent():
    one = exhaustive_property_scan(5, "double-sqrt-delta")
    four = exhaustive_property_scan(5, "double-sqrt-delta", threads=4)
    assert [v.to_json() for v in one] == [v.to_json() for v in four]


def test_scan_sampling_is_seeded():
    a = exhaustive_property_scan(6, "double-sqrt-delta", n_min=6, sample=200, seed=1)
    b = exhaustive_property_scan(6, "double-sqrt-delta", n_min=6, sample=200, seed=1)
    assert [v.code for v in a] == [v.code for v in b]


def test_scan_on_given_graphs():
    graphs = [random_regular(8, 3, s) for s in range(3)]
    assert exhaustive_property_scan(8, "regular-equivalence", graphs=graphs) == []


# -- colouring ----------------------------------------------------------------


def brute_chi(o):
    for k in range(1, o.n + 1):
        for labels in itertools.product(range(k), repeat=o.n):
            if is_valid_oriented_coloring(o, labels):
                return k


def test_coloring_validity_examples():
    arc = OrientedGraph(2, [(0, 1)])
    assert is_valid_oriented_coloring(arc, [0, 1])
    p3 = directed_path(3)
    assert not is_valid_oriented_coloring(p3, [0, 1, 0])
    assert "classes 0 and 1" in coloring_violation(p3, [0, 1, 0])
    assert is_valid_oriented_coloring(p3, [0, 1, 2])
    with pytest.raises(ColoringError):
        coloring_violation(p3, [0, 1])


@given(oriented_graphs(max_n=7))
def test_discrete_colouring_always_valid(o):
    assert is_valid_oriented_coloring(o, list(range(o.n)))


def test_chromatic_examples():
    assert oriented_chromatic_number(OrientedGraph(2, [(0, 1)])) == 2
    assert oriented_chromatic_number(directed_path(3)) == 3
    assert oriented_chromatic_number(directed_cycle(4)) == 4
    assert oriented_chromatic_number(OrientedGraph(3, [])) == 1
    with pytest.raises(ValueError):
        oriented_chromatic_number(OrientedGraph(11, []))


@given(oriented_graphs(max_n=5))
def test_chromatic_number_matches_brute_force(o):
    col = optimal_oriented_coloring(o)
    assert is_valid_oriented_coloring(o, col)
    assert col.k == brute_chi(o)


@given(oriented_graphs(max_n=6))
def test_oriented_chi_at_least_proper_chi(o):
    edges = o.underlying.edges
    proper = next(k for k in range(1, o.n + 1)
                  if any(all(c[u] != c[v] for u, v in edges) for c in itertools.product(range(k), repeat=o.n)))
    assert oriented_chromatic_number(o) >= proper


def test_coloring_from_classes():
    col = OrientedColoring.from_classes([[0, 2], [1]], 3)
    assert col.labels == (0, 1, 0) and col.k == 2 and col.classes() == [[0, 2], [1]]
    for bad in ([[0], [0, 1, 2]], [[0, 1]], [[0, 1, 2], []], [[0, 5], [1, 2]]):
        with pytest.raises(ColoringError):
            OrientedColoring.from_classes(bad, 3)


# -- counterexample search -----------------------------------------------------


def test_counterexample_budget_zero():
    assert find_orthogonality_counterexample(budget=0) is None


def test_counterexample_is_verified_and_reproducible():
    a = find_orthogonality_counterexample(budget=60, seed=0)
    b = find_orthogonality_counterexample(budget=60, seed=0)
    assert a is not None and a.arcs == b.arcs and a.examined == b.examined
    o = a.orientation
    v = a.extra["vertex"]
    assert o.underlying.degrees[v] == o.max_degree == a.extra["max_degree"]
    assert v in orthogonal_max_degree_vertices(o)
    assert has_i_sqrt_delta_eigenvalue(o, 1e-6)
    assert svd_radius(o) > math.sqrt(o.max_degree) + 0.01


def test_counterexample_candidate_cap():
    assert find_orthogonality_counterexample(budget=60, seed=0, max_candidates=0) is None
