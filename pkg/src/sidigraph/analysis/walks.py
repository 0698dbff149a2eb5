"""Signed walk counts and upper bounds on energy."""

from __future__ import annotations

import math

import numpy as np

from ..graph import GraphError, SignedDigraph

__all__ = [
    "signed_walk_matrix",
    "brute_force_walks",
    "closed_walk_balance",
    "mcclelland_bound",
    "arc_bound_check",
    "is_k2_union",
]


def signed_walk_matrix(graph: SignedDigraph, l: int) -> np.ndarray:
    """``A**l`` with exact Python integers: positive minus negative walks of length ``l``."""
    if l < 1:
        raise GraphError(f"walk length must be >= 1, got {l}")
    a = graph.adjacency().astype(object)
    out = a.copy()
    for _ in range(l - 1):
        out = out.dot(a)
    return out


def brute_force_walks(graph: SignedDigraph, l: int) -> tuple[np.ndarray, np.ndarray]:
    """Count positive and negative walks of length ``l`` between every pair by enumeration."""
    n = graph.n
    plus = np.zeros((n, n), dtype=np.int64)
    minus = np.zeros((n, n), dtype=np.int64)
    out = graph.out_lists()

    def extend(start: int, v: int, depth: int, sign: int) -> None:
        if depth == l:
            if sign > 0:
                plus[start, v] += 1
            else:
                minus[start, v] += 1
            return
        for w, s in out[v]:
            extend(start, w, depth + 1, sign * s)

    for start in range(n):
        extend(start, start, 0, 1)
    return plus, minus


def closed_walk_balance(graph: SignedDigraph, m: int) -> int:
    """Positive minus negative closed walks of length ``m``, i.e. ``tr(A**m)``."""
    return int(np.trace(signed_walk_matrix(graph, m)))


def mcclelland_bound(graph: SignedDigraph) -> float:
    """``sqrt(n (a + c2+ - c2-) / 2)`` with ``a`` arcs and ``c2+ - c2- = tr(A^2)``."""
    a = graph.num_arcs
    t2 = closed_walk_balance(graph, 2) if a else 0
    # tr(A^2) counts each digon twice with its sign, so |tr(A^2)| <= a
    radicand = a + t2
    assert radicand >= 0, radicand
    return math.sqrt(0.5 * graph.n * radicand)


def is_k2_union(graph: SignedDigraph) -> bool:
    """Disjoint digons with equal arc signs in each digon, plus isolated vertices."""
    out_deg = [0] * graph.n
    for t, h, s in graph.arcs:
        out_deg[t] += 1
        if graph.sign(h, t) != s:
            return False
    return all(d <= 1 for d in out_deg)


def arc_bound_check(graph: SignedDigraph) -> tuple[int, bool]:
    """The arc count bound on energy and whether the graph is an equality case."""
    return graph.num_arcs, is_k2_union(graph)
