"""Standard graph families and seeded random graphs and orientations."""

from __future__ import annotations

import itertools

import numpy as np

from .graph import GraphError, OrientedGraph, UndirectedGraph


def path(n: int) -> UndirectedGraph:
    return UndirectedGraph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> UndirectedGraph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return UndirectedGraph(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> UndirectedGraph:
    """K_{1,n-1} with centre 0."""
    if n < 1:
        raise GraphError("a star needs at least 1 vertex")
    return UndirectedGraph(n, [(0, i) for i in range(1, n)])


def complete(n: int) -> UndirectedGraph:
    return UndirectedGraph(n, list(itertools.combinations(range(n), 2)))


def empty(n: int) -> UndirectedGraph:
    return UndirectedGraph(n, [])


def perfect_matching(n: int) -> UndirectedGraph:
    if n % 2:
        raise GraphError("a perfect matching needs an even number of vertices")
    return UndirectedGraph(n, [(i, i + 1) for i in range(0, n, 2)])


def directed_path(n: int) -> OrientedGraph:
    return OrientedGraph(n, [(i, i + 1) for i in range(n - 1)])


def directed_cycle(n: int) -> OrientedGraph:
    cycle(n)
    return OrientedGraph(n, [(i, (i + 1) % n) for i in range(n)])


def out_star(n: int) -> OrientedGraph:
    """Star with every arc leaving the centre 0."""
    return OrientedGraph(n, star(n).edges)


def odd_oriented_cycle(n: int) -> OrientedGraph:
    """Directed n-cycle with the closing arc reversed.

    For n = 4 this orientation has ``S^T S = 2I``.
    """
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    if n % 2:
        raise GraphError("odd_oriented_cycle is defined for even n")
    return OrientedGraph(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])


def random_gnp(n: int, p: float, seed: int) -> UndirectedGraph:
    if not 0.0 <= p <= 1.0:
        raise GraphError("p must lie in [0, 1]")
    rng = np.random.default_rng(seed)
    pairs = list(itertools.combinations(range(n), 2))
    keep = rng.random(len(pairs)) < p
    return UndirectedGraph(n, [e for e, k in zip(pairs, keep) if k])


def random_regular(n: int, d: int, seed: int, max_tries: int = 1000) -> UndirectedGraph:
    """Uniform-ish d-regular graph by the pairing model with restarts."""
    if d < 0 or (n > 0 and d >= n) or (n * d) % 2:
        raise GraphError(f"no {d}-regular graph on {n} vertices")
    rng = np.random.default_rng(seed)
    for _ in range(max_tries):
        stubs = np.repeat(np.arange(n), d)
        rng.shuffle(stubs)
        pairs = stubs.reshape(-1, 2)
        edges = {(int(min(a, b)), int(max(a, b))) for a, b in pairs}
        if len(edges) == n * d // 2 and all(a != b for a, b in edges):
            return UndirectedGraph(n, edges)
    raise GraphError(f"failed to sample a {d}-regular graph on {n} vertices")


def random_orientation(G: UndirectedGraph, seed: int) -> OrientedGraph:
    rng = np.random.default_rng(seed)
    flips = rng.integers(0, 2, size=G.m)
    return OrientedGraph(G.n, [(v, u) if f else (u, v) for (u, v), f in zip(G.edges, flips)])


def from_spec(text: str) -> UndirectedGraph:
    """Build a named graph from ``family:args``, e.g. ``cycle:4`` or ``gnp:8,0.4,1``."""
    name, _, args = text.partition(":")
    parts = [a for a in args.split(",") if a]
    try:
        if name == "gnp":
            return random_gnp(int(parts[0]), float(parts[1]), int(parts[2]) if len(parts) > 2 else 0)
        if name == "regular":
            return random_regular(int(parts[0]), int(parts[1]), int(parts[2]) if len(parts) > 2 else 0)
        family = {
            "path": path,
            "cycle": cycle,
            "star": star,
            "complete": complete,
            "empty": empty,
            "matching": perfect_matching,
        }[name]
        return family(int(parts[0]))
    except (KeyError, IndexError, ValueError) as exc:
        if isinstance(exc, GraphError):
            raise
        raise GraphError(f"bad graph spec {text!r}") from None
