"""Every lower bound next to the quantity it bounds, on a few small graphs."""

from skewspec import full_report
from skewspec.bounds import average_degree_orientation, max_cut_local, cut_size
from skewspec.generators import complete, directed_path, odd_oriented_cycle, out_star, random_gnp, random_orientation

# %% A report collects the radius bounds (partition, sqrt of max degree,
# net degrees, chromatic) and the energy bounds in one place.
graphs = {
    "directed P3": directed_path(3),
    "out-star K_{1,3}": out_star(4),
    "odd C4": odd_oriented_cycle(4),
    "random n=8": random_orientation(random_gnp(8, 0.5, seed=2), seed=0),
}
for name, o in graphs.items():
    r = full_report(o)
    print(f"\n{name}: rho_s={r.rho_s:.4f} energy={r.energy:.4f} det={r.det_s}")
    print(f"  radius bounds  partition={r.partition_best:.4f} sqrt_delta={r.sqrt_delta:.4f} "
          f"degree_seq={r.degree_seq:.4f} chromatic={r.chromatic:.4f}")
    print(f"  energy bounds  mc_classic={r.mc_classic:.4f} mc_improved={r.mc_improved:.4f} "
          f"nonsingular={r.nonsingular} log={r.log_bound}")
    assert not r.violations()

# %% Some orientation of any graph reaches half the average degree: cut the
# graph with a local max-cut and point all cut edges one way.
G = complete(7)
A, _ = max_cut_local(G, seed=0)
o, half = average_degree_orientation(G, seed=0)
print(f"\nK7: cut {cut_size(G, A)} of {G.m} edges, rho_s={full_report(o).rho_s:.4f} >= {half}")
