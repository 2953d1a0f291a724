"""Undirected graphs, orientations and the operations on them.

Vertices are ``0..n-1``. Both graph types are immutable; edges and arcs are
kept in sorted order so equality of two orientations is set equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

import numpy as np


class GraphError(ValueError):
    """Invalid graph data or vertex reference."""


def _check_vertices(n: int, vertices: Iterable[int]) -> frozenset:
    vs = frozenset(int(v) for v in vertices)
    for v in vs:
        if not 0 <= v < n:
            raise GraphError(f"vertex {v} out of range for n={n}")
    return vs


@dataclass(frozen=True)
class UndirectedGraph:
    n: int
    edges: tuple

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("n must be nonnegative")
        seen = set()
        for u, v in self.edges:
            u, v = int(u), int(v)
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={self.n}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise GraphError(f"duplicate edge {e}")
            seen.add(e)
        object.__setattr__(self, "edges", tuple(sorted(seen)))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def degrees(self) -> np.ndarray:
        deg = np.zeros(self.n, dtype=np.int64)
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    @property
    def max_degree(self) -> int:
        return int(self.degrees.max()) if self.n else 0

    @property
    def avg_degree(self) -> float:
        return 2 * self.m / self.n if self.n else 0.0

    @cached_property
    def neighbors(self) -> tuple:
        nb = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nb[u].add(v)
            nb[v].add(u)
        return tuple(frozenset(s) for s in nb)

    def adjacency(self) -> np.ndarray:
        A = np.zeros((self.n, self.n), dtype=np.int64)
        for u, v in self.edges:
            A[u, v] = A[v, u] = 1
        return A

    def is_regular(self) -> bool:
        return self.n == 0 or bool((self.degrees == self.degrees[0]).all())

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = {0}
        stack = [0]
        while stack:
            for w in self.neighbors[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    def spanning_forest(self) -> list:
        """Edge indices of a BFS spanning forest, one tree per component."""
        index = {e: k for k, e in enumerate(self.edges)}
        seen = set()
        tree = []
        for root in range(self.n):
            if root in seen:
                continue
            seen.add(root)
            queue = [root]
            for u in queue:
                for w in sorted(self.neighbors[u]):
                    if w not in seen:
                        seen.add(w)
                        queue.append(w)
                        tree.append(index[(min(u, w), max(u, w))])
        return sorted(tree)


@dataclass(frozen=True)
class OrientedGraph:
    """An undirected graph with one direction chosen per edge.

    ``arcs`` holds ``(tail, head)`` pairs.
    """

    n: int
    arcs: tuple

    def __post_init__(self):
        arcs = tuple(sorted((int(t), int(h)) for t, h in self.arcs))
        # validates loops, ranges and duplicate/opposite arcs in one go
        try:
            underlying = UndirectedGraph(self.n, arcs)
        except GraphError as exc:
            if "duplicate edge" in str(exc):
                raise GraphError(f"duplicate or opposite arcs: {exc}") from None
            raise
        object.__setattr__(self, "arcs", arcs)
        object.__setattr__(self, "_underlying", underlying)

    @property
    def underlying(self) -> UndirectedGraph:
        return self._underlying

    @property
    def m(self) -> int:
        return len(self.arcs)

    @property
    def max_degree(self) -> int:
        return self.underlying.max_degree

    @property
    def avg_degree(self) -> float:
        return self.underlying.avg_degree

    @cached_property
    def out_degrees(self) -> np.ndarray:
        d = np.zeros(self.n, dtype=np.int64)
        for t, _ in self.arcs:
            d[t] += 1
        return d

    @cached_property
    def in_degrees(self) -> np.ndarray:
        d = np.zeros(self.n, dtype=np.int64)
        for _, h in self.arcs:
            d[h] += 1
        return d

    def code(self) -> int:
        """Bit vector over the sorted underlying edges; bit k set when edge k points high to low."""
        reversed_edges = {(h, t) for t, h in self.arcs if t > h}
        return sum(1 << k for k, e in enumerate(self.underlying.edges) if e in reversed_edges)

    def arc_vector(self) -> tuple:
        c = self.code()
        return tuple((c >> k) & 1 for k in range(self.m))

    @classmethod
    def from_code(cls, G: UndirectedGraph, code: int) -> "OrientedGraph":
        arcs = [(v, u) if (code >> k) & 1 else (u, v) for k, (u, v) in enumerate(G.edges)]
        return cls(G.n, arcs)


def skew_adjacency(o: OrientedGraph) -> np.ndarray:
    S = np.zeros((o.n, o.n), dtype=np.int64)
    for t, h in o.arcs:
        S[t, h] = 1
        S[h, t] = -1
    return S


def orientation_matrices(G: UndirectedGraph, codes) -> np.ndarray:
    """Stack of skew adjacency matrices, one per orientation code."""
    codes = np.asarray(codes, dtype=np.int64).reshape(-1)
    S = np.zeros((codes.size, G.n, G.n), dtype=np.int64)
    for k, (u, v) in enumerate(G.edges):
        sign = 1 - 2 * ((codes >> k) & 1)
        S[:, u, v] = sign
        S[:, v, u] = -sign
    return S


def net_degrees(o: OrientedGraph) -> np.ndarray:
    """Out-degree minus in-degree per vertex."""
    return o.out_degrees - o.in_degrees


def gamma(o: OrientedGraph, A, B) -> int:
    """Number of arcs with tail in ``A`` and head in ``B`` (sets may overlap)."""
    A = _check_vertices(o.n, A)
    B = _check_vertices(o.n, B)
    return sum(1 for t, h in o.arcs if t in A and h in B)


def switch(o: OrientedGraph, W) -> OrientedGraph:
    """Reverse every arc with exactly one end in ``W``."""
    W = _check_vertices(o.n, W)
    return OrientedGraph(o.n, [(h, t) if (t in W) != (h in W) else (t, h) for t, h in o.arcs])


def switch_to_source(o: OrientedGraph, v: int) -> OrientedGraph:
    """Switch with respect to the in-neighbours of ``v`` so every arc at ``v`` leaves it."""
    _check_vertices(o.n, [v])
    return switch(o, {t for t, h in o.arcs if h == v})


def induced_suborientation(o: OrientedGraph, A) -> OrientedGraph:
    keep = sorted(_check_vertices(o.n, A))
    relabel = {v: i for i, v in enumerate(keep)}
    return OrientedGraph(
        len(keep), [(relabel[t], relabel[h]) for t, h in o.arcs if t in relabel and h in relabel]
    )


def is_perfect_matching(o: OrientedGraph) -> bool:
    """True when every vertex meets exactly one arc."""
    return o.n > 0 and bool((o.underlying.degrees == 1).all())


def orient(G: UndirectedGraph, arcs=None) -> OrientedGraph:
    """Orient ``G`` low-to-high, or check that ``arcs`` orient exactly ``G``."""
    if arcs is None:
        return OrientedGraph(G.n, G.edges)
    o = OrientedGraph(G.n, arcs)
    if o.underlying.edges != G.edges:
        raise GraphError("arcs do not match the edges of the graph")
    return o
