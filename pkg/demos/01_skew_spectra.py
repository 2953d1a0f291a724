"""A first look at skew spectra.

Run with ``python demos/01_skew_spectra.py``.
"""

import numpy as np

from skewspec import exact_determinant, skew_adjacency, skew_spectrum, switch
from skewspec.generators import directed_cycle, directed_path, odd_oriented_cycle, random_gnp, random_orientation

# %% The skew adjacency matrix of the directed path 0 -> 1 -> 2
o = directed_path(3)
S = skew_adjacency(o)
print(S)

# %% S is skew-symmetric, so its eigenvalues are purely imaginary and come
# in conjugate pairs.  skew_spectrum stores their norms sigma.
spec = skew_spectrum(o)
print("sigma:", spec.sigma)
print("imaginary parts:", spec.imaginary_parts())
print("sum of squares:", spec.sum_of_squares(), "= 2m =", 2 * o.m)

# %% Two orientations of C4 with very different spectra
for name, c in [("directed C4", directed_cycle(4)), ("odd C4", odd_oriented_cycle(4))]:
    sp = skew_spectrum(c)
    det = exact_determinant(skew_adjacency(c))
    print(f"{name:12s} sigma={np.round(sp.sigma, 6)} rho={sp.radius:.6f} "
          f"energy={sp.energy:.6f} det={det.value} pf={det.pfaffian}")

# %% Switching at a vertex set W reverses every arc leaving or entering W
# and leaves the spectrum alone.
G = random_gnp(9, 0.45, seed=3)
o = random_orientation(G, seed=1)
w = switch(o, {0, 2, 5})
print("arcs changed:", len(set(o.arcs) - set(w.arcs)))
print("max spectrum difference:", np.abs(skew_spectrum(o).sigma - skew_spectrum(w).sigma).max())
