"""When is the skew spectral radius exactly sqrt(max degree)?

Orthogonality of the max-degree columns of S is necessary, and one
orthogonal column already puts i*sqrt(max degree) in the spectrum.  It is
not sufficient: the search below finds a graph with an orthogonal
max-degree column whose radius is strictly larger.
"""

import math

from skewspec import characterize, corpus, min_rho_orientation
from skewspec.characterize import gram, orthogonal_max_degree_vertices
from skewspec.search import exhaustive_property_scan, find_orthogonality_counterexample

# %% Smallest radius over all orientations of a few graphs
for G in corpus.connected_graphs(4):
    best = min_rho_orientation(G)
    print(f"m={G.m} max degree={G.max_degree}: min rho_s={best.value:.4f} "
          f"(sqrt D = {math.sqrt(G.max_degree):.4f}) via {best.arcs}")

# %% The necessary condition, checked on every orientation up to 6 vertices
print("violations:", len(exhaustive_property_scan(6, "orthogonality")))

# %% ... and the converse failing
found = find_orthogonality_counterexample(budget=30, seed=0)
o = found.orientation
v = found.extra["vertex"]
print(f"\nn={o.n} m={o.m} max degree={o.max_degree} vertex {v}")
print("orthogonal max-degree vertices:", orthogonal_max_degree_vertices(o))
print("column inner products at v:", gram(o)[v].tolist())
print(f"rho_s = {found.value:.4f} > sqrt(D) = {math.sqrt(o.max_degree):.4f}")
print(characterize(o))
