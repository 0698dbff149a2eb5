"""Exact characteristic polynomials of signed digraphs.

Two independent routes are provided:

* :func:`charpoly_enumerate` sums over linear subdigraphs (vertex-disjoint
  unions of directed cycles), each weighted by ``(-1)**components`` times the
  product of its cycle signs.
* :func:`charpoly_trace` uses power sums ``tr(A**k)`` and Newton's identities
  in exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

import numpy as np

from .graph import GraphError, SignedDigraph
from .polynomial import IntPolynomial

__all__ = [
    "DEFAULT_ENUMERATION_CAP",
    "EnumerationCapError",
    "CycleLengthError",
    "LinearTypeCensus",
    "charpoly",
    "charpoly_enumerate",
    "charpoly_trace",
    "charpoly_uniform_cycle_length",
    "linear_type_census",
    "cycle_vertex_sets",
    "cycle_lengths",
    "has_cycle",
    "iter_simple_cycles",
    "iter_linear_subdigraphs",
    "power_traces",
]

DEFAULT_ENUMERATION_CAP = 12


class EnumerationCapError(GraphError):
    pass


class CycleLengthError(GraphError):
    pass


def _check_cap(graph: SignedDigraph, cap: int | None) -> None:
    cap = DEFAULT_ENUMERATION_CAP if cap is None else cap
    if graph.n > cap:
        raise EnumerationCapError(f"{graph.n} vertices exceeds the enumeration cap {cap}")


# ----------------------------------------------------------------------------
# Cycle enumeration


def iter_simple_cycles(graph: SignedDigraph) -> Iterator[tuple[tuple[int, ...], int]]:
    """Yield every directed cycle once as ``(vertices, sign)``.

    Each cycle starts at its least vertex.  Plain backtracking; exponential
    in dense graphs, intended for small ``n``.
    """
    out = graph.out_lists()
    for start in range(graph.n):
        path = [start]
        on_path = {start}
        stack = [iter(out[start])]
        signs = [1]
        while stack:
            advanced = False
            for head, sign in stack[-1]:
                if head == start:
                    yield tuple(path), signs[-1] * sign
                elif head > start and head not in on_path:
                    path.append(head)
                    on_path.add(head)
                    signs.append(signs[-1] * sign)
                    stack.append(iter(out[head]))
                    advanced = True
                    break
            if not advanced:
                stack.pop()
                on_path.discard(path.pop())
                signs.pop()


def cycle_vertex_sets(graph: SignedDigraph) -> dict[int, tuple[int, int]]:
    """Map vertex bitmask -> (number of positive, number of negative) cycles on exactly those vertices.

    Computed by a subset dynamic program over simple paths from the least
    vertex of the set, so it stays polynomial in ``2**n``.
    """
    n = graph.n
    out = graph.out_lists()
    result: dict[int, tuple[int, int]] = {}
    for start in range(n):
        # paths[(mask, v)] = [pos, neg] counts of simple paths start -> v over mask
        layer: dict[tuple[int, int], list[int]] = {(1 << start, start): [1, 0]}
        while layer:
            nxt: dict[tuple[int, int], list[int]] = {}
            for (mask, v), (pos, neg) in layer.items():
                for head, sign in out[v]:
                    if head == start:
                        p, q = (pos, neg) if sign > 0 else (neg, pos)
                        old = result.get(mask, (0, 0))
                        result[mask] = (old[0] + p, old[1] + q)
                    elif head > start and not (mask >> head) & 1:
                        key = (mask | (1 << head), head)
                        acc = nxt.setdefault(key, [0, 0])
                        if sign > 0:
                            acc[0] += pos
                            acc[1] += neg
                        else:
                            acc[0] += neg
                            acc[1] += pos
            layer = nxt
    return result


def cycle_lengths(graph: SignedDigraph) -> set[int]:
    return {bin(mask).count("1") for mask in cycle_vertex_sets(graph)}


def has_cycle(graph: SignedDigraph) -> bool:
    from .graph import component_vertex_sets

    return any(len(c) > 1 for c in component_vertex_sets(graph))


# ----------------------------------------------------------------------------
# Linear subdigraph counting


def _linear_counts(graph: SignedDigraph) -> dict[int, list[int]]:
    """Counts of linear subdigraphs by vertex set.

    Returns mask -> ``[odd_pos, odd_neg, even_pos, even_neg]`` where parity
    refers to the number of cycles and pos/neg to the product of cycle signs.
    """
    cycles = cycle_vertex_sets(graph)
    by_min: dict[int, list[tuple[int, int, int]]] = {}
    for mask, (pos, neg) in cycles.items():
        low = (mask & -mask).bit_length() - 1
        by_min.setdefault(low, []).append((mask, pos, neg))

    @lru_cache(maxsize=None)
    def counts(mask: int) -> tuple[int, int, int, int]:
        # linear subdigraphs covering exactly ``mask``; index = 2*even + neg
        if mask == 0:
            return (0, 0, 1, 0)
        low = (mask & -mask).bit_length() - 1
        acc = [0, 0, 0, 0]
        for cmask, pos, neg in by_min.get(low, ()):
            if cmask & ~mask:
                continue
            rest = counts(mask & ~cmask)
            for idx, cnt in enumerate(rest):
                if not cnt:
                    continue
                parity, sgn = divmod(idx, 2)
                flipped = 1 - parity
                acc[2 * flipped + sgn] += cnt * pos
                acc[2 * flipped + (1 - sgn)] += cnt * neg
        return tuple(acc)

    out: dict[int, list[int]] = {}
    for mask in range(1, 1 << graph.n):
        cnt = counts(mask)
        if any(cnt):
            out[mask] = list(cnt)
    counts.cache_clear()
    return out


@dataclass(frozen=True)
class LinearTypeCensus:
    """Linear subdigraphs of each order split by component-count parity and sign.

    ``type_a``: odd number of cycles, negative; ``type_b``: even, positive;
    ``type_c``: odd, positive; ``type_d``: even, negative.  Index ``i - 1``
    holds order ``i``.
    """

    n: int
    type_a: tuple[int, ...]
    type_b: tuple[int, ...]
    type_c: tuple[int, ...]
    type_d: tuple[int, ...]

    def coefficient(self, i: int) -> int:
        k = i - 1
        return (self.type_a[k] + self.type_b[k]) - (self.type_c[k] + self.type_d[k])

    def is_type_balanced(self) -> bool:
        return all(self.coefficient(i) == 0 for i in range(1, self.n + 1))

    def signed_count(self, i: int) -> int:
        """Positive minus negative linear subdigraphs of order ``i``."""
        k = i - 1
        return (self.type_b[k] + self.type_c[k]) - (self.type_a[k] + self.type_d[k])

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "orders": [
                {"order": i + 1, "a": self.type_a[i], "b": self.type_b[i],
                 "c": self.type_c[i], "d": self.type_d[i]}
                for i in range(self.n)
            ],
        }


def linear_type_census(graph: SignedDigraph, cap: int | None = None) -> LinearTypeCensus:
    _check_cap(graph, cap)
    a = [0] * graph.n
    b = [0] * graph.n
    c = [0] * graph.n
    d = [0] * graph.n
    for mask, (odd_pos, odd_neg, even_pos, even_neg) in _linear_counts(graph).items():
        k = bin(mask).count("1") - 1
        a[k] += odd_neg
        b[k] += even_pos
        c[k] += odd_pos
        d[k] += even_neg
    return LinearTypeCensus(graph.n, tuple(a), tuple(b), tuple(c), tuple(d))


def charpoly_enumerate(graph: SignedDigraph, cap: int | None = None) -> IntPolynomial:
    """Characteristic polynomial from signed counts of linear subdigraphs."""
    census = linear_type_census(graph, cap)
    c = [1] + [census.coefficient(i) for i in range(1, graph.n + 1)]
    return IntPolynomial.from_char_coefficients(c)


def iter_linear_subdigraphs(graph: SignedDigraph) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Yield each linear subdigraph explicitly as a tuple of cycles (vertex sequences).

    Brute force over simple cycles; a reference for small graphs only.
    """
    cycles = [(sum(1 << v for v in cyc), cyc, sign) for cyc, sign in iter_simple_cycles(graph)]

    def rec(i: int, used: int, chosen: list) -> Iterator:
        if i == len(cycles):
            if chosen:
                yield tuple(chosen)
            return
        yield from rec(i + 1, used, chosen)
        mask, cyc, _ = cycles[i]
        if not mask & used:
            chosen.append(cyc)
            yield from rec(i + 1, used | mask, chosen)
            chosen.pop()

    yield from rec(0, 0, [])


# ----------------------------------------------------------------------------
# Trace route

_INT64_SAFE = 2**62


def power_traces(adjacency: np.ndarray, count: int) -> list[int]:
    """Exact ``tr(A**k)`` for ``k = 1 .. count``.

    Matrix powers run in int64 while entries provably fit and switch to
    Python integers once they might not; diagonal sums are always taken in
    Python integers.
    """
    a = np.asarray(adjacency, dtype=np.int64)
    n = a.shape[0]
    row_l1 = int(np.abs(a).sum(axis=0).max()) if n else 0
    power = a.copy()
    traces = []
    exact = False
    for _ in range(count):
        # sum the diagonal as Python integers: n entries can overflow together
        traces.append(sum(int(power[i, i]) for i in range(n)))
        bound = int(np.abs(power).max()) if not exact else 0
        if not exact and bound * max(row_l1, 1) >= _INT64_SAFE:
            power = power.astype(object)
            a_obj = a.astype(object)
            exact = True
        if exact:
            power = power.dot(a_obj)
        else:
            power = power @ a
    return traces


def charpoly_trace(graph: SignedDigraph) -> IntPolynomial:
    """Characteristic polynomial via Newton's identities on ``tr(A**k)``.

    ``k c_k = -(p_k + c_1 p_(k-1) + ... + c_(k-1) p_1)``; the division by
    ``k`` is exact for integer matrices.
    """
    n = graph.n
    p = power_traces(graph.adjacency(), n)
    c = [1]
    for k in range(1, n + 1):
        s = p[k - 1] + sum(c[i] * p[k - 1 - i] for i in range(1, k))
        q, r = divmod(-s, k)
        if r:
            raise ArithmeticError(f"non-integral coefficient c_{k} = {-s}/{k}")
        c.append(q)
    return IntPolynomial.from_char_coefficients(c)


def charpoly(graph: SignedDigraph) -> IntPolynomial:
    """Default characteristic polynomial (trace route, no size cap)."""
    return charpoly_trace(graph)


# ----------------------------------------------------------------------------
# Uniform cycle length


def charpoly_uniform_cycle_length(
    graph: SignedDigraph, h: int, cap: int | None = None
) -> tuple[IntPolynomial, list[int]]:
    """Characteristic polynomial of a graph whose cycles all have length ``h``.

    Returns the polynomial and the signed counts ``c*(S, kh)`` for
    ``k = 1 .. n // h``.  Raises :class:`CycleLengthError` if some cycle has
    another length.
    """
    if h < 2:
        raise GraphError(f"cycle length must be >= 2, got {h}")
    _check_cap(graph, cap)
    bad = sorted(cycle_lengths(graph) - {h})
    if bad:
        raise CycleLengthError(f"graph has cycles of length {bad}, expected only {h}")
    census = linear_type_census(graph, cap)
    n = graph.n
    cstar = [census.signed_count(k * h) for k in range(1, n // h + 1)]
    c = [1] + [0] * n
    for k, value in enumerate(cstar, start=1):
        c[k * h] = (-1) ** k * value
    return IntPolynomial.from_char_coefficients(c), cstar
