"""Bundled graph6 corpora of small connected graphs (up to isomorphism)."""

from __future__ import annotations

from functools import lru_cache
from importlib import resources

from .io import parse_graph6

CONNECTED_MAX_N = 7
ALL_MAX_N = 6


@lru_cache(maxsize=None)
def _load(name: str) -> tuple:
    text = resources.files("skewspec").joinpath("data", name).read_text()
    return tuple(parse_graph6(line) for line in text.splitlines() if line.strip())


def connected_graphs(n: int) -> tuple:
    """All connected graphs on exactly ``n`` vertices, one per isomorphism class."""
    if not 1 <= n <= CONNECTED_MAX_N:
        raise ValueError(f"bundled corpus covers 1 <= n <= {CONNECTED_MAX_N}")
    return _load(f"connected_n{n}.g6")


def connected_graphs_upto(n_max: int, n_min: int = 1) -> list:
    return [G for n in range(n_min, n_max + 1) for G in connected_graphs(n)]


def all_graphs(n: int) -> tuple:
    """Every graph on ``n`` vertices (connected or not), one per isomorphism class; n <= 6."""
    if not 1 <= n <= ALL_MAX_N:
        raise ValueError(f"bundled corpus of all graphs covers 1 <= n <= {ALL_MAX_N}")
    return _load(f"all_n{n}.g6")


def connected_regular_graphs(n_max: int = 8, max_degree: int = 3) -> list:
    """Connected regular graphs with 1 <= degree <= ``max_degree`` and n <= ``n_max`` (n_max <= 8)."""
    if n_max > 8:
        raise ValueError("bundled regular corpus covers n <= 8")
    graphs = [G for G in connected_graphs_upto(min(n_max, CONNECTED_MAX_N), n_min=2) if G.is_regular()]
    if n_max >= 8:
        graphs += list(_load("regular_n8_deg3.g6"))
    return [G for G in graphs if 1 <= G.max_degree <= max_degree]
