"""Oriented colourings and the exact oriented chromatic number for small graphs."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import OrientedGraph

CHROMATIC_MAX_N = 10


class ColoringError(ValueError):
    """Malformed partition, or a partition that is not an oriented colouring."""


@dataclass(frozen=True)
class OrientedColoring:
    """Vertex -> class id, with ids ``0..k-1`` all used."""

    labels: tuple

    @property
    def k(self) -> int:
        return max(self.labels) + 1 if self.labels else 0

    def classes(self) -> list:
        out = [[] for _ in range(self.k)]
        for v, c in enumerate(self.labels):
            out[c].append(v)
        return out

    @classmethod
    def from_classes(cls, classes, n: int) -> "OrientedColoring":
        labels = [-1] * n
        for c, members in enumerate(classes):
            if not members:
                raise ColoringError(f"class {c} is empty")
            for v in members:
                if not 0 <= v < n:
                    raise ColoringError(f"vertex {v} out of range for n={n}")
                if labels[v] != -1:
                    raise ColoringError(f"vertex {v} appears in two classes")
                labels[v] = c
        missing = [v for v, c in enumerate(labels) if c == -1]
        if missing:
            raise ColoringError(f"vertices {missing} are not coloured")
        return cls(tuple(labels))


def coloring_violation(o: OrientedGraph, labels):
    """First reason ``labels`` fails to be an oriented colouring of ``o``, or None."""
    labels = list(labels)
    if len(labels) != o.n or any(c < 0 for c in labels):
        raise ColoringError("colouring must assign a nonnegative class to every vertex")
    direction = {}
    for t, h in o.arcs:
        a, b = labels[t], labels[h]
        if a == b:
            return f"arc {t}->{h} lies inside class {a}"
        key = (min(a, b), max(a, b))
        d = 1 if a < b else -1
        if direction.setdefault(key, (d, (t, h)))[0] != d:
            prev = direction[key][1]
            return (f"classes {key[0]} and {key[1]} see arcs in both directions "
                    f"({prev[0]}->{prev[1]} and {t}->{h})")
    return None


def is_valid_oriented_coloring(o: OrientedGraph, labels) -> bool:
    if isinstance(labels, OrientedColoring):
        labels = labels.labels
    return coloring_violation(o, labels) is None


def optimal_oriented_coloring(o: OrientedGraph, max_n: int = CHROMATIC_MAX_N) -> OrientedColoring:
    """A minimum oriented colouring, found by restricted-growth search in increasing k."""
    if o.n > max_n:
        raise ValueError(f"exact oriented colouring limited to n <= {max_n}")
    if o.n == 0:
        return OrientedColoring(())
    # arcs to earlier vertices, signed +1 for v -> u and -1 for u -> v
    back = [[] for _ in range(o.n)]
    for t, h in o.arcs:
        if t < h:
            back[h].append((t, -1))
        else:
            back[t].append((h, 1))
    labels = [0] * o.n
    direction = {}

    def place(v, used, k):
        if v == o.n:
            return True
        for c in range(min(used + 1, k)):
            added = []
            ok = True
            for u, s in back[v]:
                cu = labels[u]
                if cu == c:
                    ok = False
                    break
                # direction of arcs from class c to class cu
                key, d = ((c, cu), s) if c < cu else ((cu, c), -s)
                cur = direction.get(key)
                if cur is None:
                    direction[key] = d
                    added.append(key)
                elif cur != d:
                    ok = False
                    break
            if ok:
                labels[v] = c
                if place(v + 1, max(used, c + 1), k):
                    return True
            for key in added:
                del direction[key]
        return False

    k = 1 if o.m == 0 else 2
    while not place(0, 0, k):
        direction.clear()
        k += 1
    return OrientedColoring(tuple(labels))


def oriented_chromatic_number(o: OrientedGraph, max_n: int = CHROMATIC_MAX_N) -> int:
    return optimal_oriented_coloring(o, max_n).k
