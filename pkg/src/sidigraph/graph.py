"""Signed digraph data model, text/JSON serialization, builders and products.

A signed digraph (sidigraph) is a vertex count ``n`` plus a set of arcs
``(tail, head, sign)`` with ``sign`` in ``{+1, -1}``.  Vertices are the
integers ``0 .. n-1``.  Self-loops and parallel arcs are rejected.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "Arc",
    "SignedDigraph",
    "NepsBasis",
    "GraphError",
    "ParseError",
    "MalformedLineError",
    "DuplicateArcError",
    "SelfLoopError",
    "VertexRangeError",
    "BasisError",
    "parse_sidigraph",
    "serialize_sidigraph",
    "to_json",
    "from_json",
    "build_cycle",
    "build_path",
    "build_symmetric_double",
    "build_skew_symmetric",
    "build_pln",
    "build_k2_double",
    "empty_graph",
    "unsigned",
    "negated",
    "strong_components",
    "cyclic_part",
    "direct_sum",
    "neps",
    "neps_arcs_by_tuple",
    "cartesian_product",
    "kronecker_product",
]

Arc = tuple[int, int, int]


class GraphError(ValueError):
    """Invalid sidigraph construction or precondition violation."""


class ParseError(GraphError):
    """Base class for errors raised while reading graph text."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class MalformedLineError(ParseError):
    pass


class DuplicateArcError(ParseError):
    pass


class SelfLoopError(ParseError):
    pass


class VertexRangeError(ParseError):
    pass


class BasisError(GraphError):
    pass


def _sign(value: int) -> int:
    if value not in (1, -1):
        raise GraphError(f"arc sign must be +1 or -1, got {value!r}")
    return int(value)


@dataclass(frozen=True)
class SignedDigraph:
    """Immutable sidigraph with canonically sorted arcs."""

    n: int
    arcs: tuple[Arc, ...] = ()
    _index: dict = field(default_factory=dict, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        if not isinstance(self.n, (int, np.integer)) or self.n < 1:
            raise GraphError(f"vertex count must be a positive integer, got {self.n!r}")
        object.__setattr__(self, "n", int(self.n))
        index: dict[tuple[int, int], int] = {}
        for tail, head, sign in self.arcs:
            tail, head = int(tail), int(head)
            if not (0 <= tail < self.n and 0 <= head < self.n):
                raise VertexRangeError(f"arc ({tail}, {head}) outside [0, {self.n})")
            if tail == head:
                raise SelfLoopError(f"self-loop at vertex {tail}")
            if (tail, head) in index:
                raise DuplicateArcError(f"duplicate arc ({tail}, {head})")
            index[(tail, head)] = _sign(sign)
        arcs = tuple(sorted((t, h, s) for (t, h), s in index.items()))
        object.__setattr__(self, "arcs", arcs)
        object.__setattr__(self, "_index", index)

    @classmethod
    def from_matrix(cls, matrix) -> SignedDigraph:
        a = np.asarray(matrix)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise GraphError("adjacency matrix must be square")
        if np.any(np.diag(a) != 0):
            raise SelfLoopError("nonzero diagonal entry")
        if not np.all(np.isin(a, (-1, 0, 1))):
            raise GraphError("adjacency entries must lie in {-1, 0, 1}")
        rows, cols = np.nonzero(a)
        return cls(a.shape[0], tuple((int(i), int(j), int(a[i, j])) for i, j in zip(rows, cols)))

    @property
    def num_arcs(self) -> int:
        return len(self.arcs)

    @property
    def positive_arcs(self) -> tuple[Arc, ...]:
        return tuple(a for a in self.arcs if a[2] > 0)

    @property
    def negative_arcs(self) -> tuple[Arc, ...]:
        return tuple(a for a in self.arcs if a[2] < 0)

    def sign(self, tail: int, head: int) -> int:
        """Sign of the arc ``tail -> head``, or 0 when absent."""
        return self._index.get((tail, head), 0)

    def has_arc(self, tail: int, head: int) -> bool:
        return (tail, head) in self._index

    def adjacency(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for tail, head, sign in self.arcs:
            a[tail, head] = sign
        return a

    def successors(self, v: int) -> list[int]:
        return [h for (t, h) in self._index if t == v]

    def out_lists(self) -> list[list[tuple[int, int]]]:
        out: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for tail, head, sign in self.arcs:
            out[tail].append((head, sign))
        return out

    def induced(self, vertices: Sequence[int]) -> SignedDigraph:
        """Induced subsidigraph, relabelled in the given vertex order."""
        pos = {v: i for i, v in enumerate(vertices)}
        return SignedDigraph(
            len(vertices),
            tuple((pos[t], pos[h], s) for t, h, s in self.arcs if t in pos and h in pos),
        )

    def is_skew_symmetric(self) -> bool:
        a = self.adjacency()
        return bool(np.array_equal(a, -a.T))

    def is_symmetric(self) -> bool:
        a = self.adjacency()
        return bool(np.array_equal(a, a.T))

    def __str__(self) -> str:
        return serialize_sidigraph(self)


# ----------------------------------------------------------------------------
# Text and JSON formats


def serialize_sidigraph(graph: SignedDigraph) -> str:
    lines = [str(graph.n)]
    lines.extend(f"{t} {h} {'+' if s > 0 else '-'}" for t, h, s in graph.arcs)
    return "\n".join(lines) + "\n"


def parse_sidigraph(text: str) -> SignedDigraph:
    """Read the line format: vertex count, then ``tail head sign`` per arc.

    Blank lines and ``#`` comments are ignored.
    """
    n: int | None = None
    arcs: dict[tuple[int, int], int] = {}
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 1 or not fields[0].isdigit() or int(fields[0]) < 1:
                raise MalformedLineError(f"expected a positive vertex count, got {line!r}", lineno)
            n = int(fields[0])
            continue
        if len(fields) != 3 or fields[2] not in ("+", "-"):
            raise MalformedLineError(f"expected 'tail head sign', got {line!r}", lineno)
        try:
            tail, head = int(fields[0]), int(fields[1])
        except ValueError:
            raise MalformedLineError(f"non-integer vertex in {line!r}", lineno) from None
        if not (0 <= tail < n and 0 <= head < n):
            raise VertexRangeError(f"vertex index out of range [0, {n}) in {line!r}", lineno)
        if tail == head:
            raise SelfLoopError(f"self-loop at vertex {tail}", lineno)
        if (tail, head) in arcs:
            raise DuplicateArcError(f"duplicate arc ({tail}, {head})", lineno)
        arcs[(tail, head)] = 1 if fields[2] == "+" else -1
    if n is None:
        raise MalformedLineError("missing vertex count")
    return SignedDigraph(n, tuple((t, h, s) for (t, h), s in arcs.items()))


def to_json(graph: SignedDigraph) -> dict:
    return {"n": graph.n, "arcs": [list(a) for a in graph.arcs]}


def from_json(data: dict | str) -> SignedDigraph:
    if isinstance(data, str):
        data = json.loads(data)
    try:
        return SignedDigraph(int(data["n"]), tuple(tuple(a) for a in data["arcs"]))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, GraphError):
            raise
        raise MalformedLineError(f"bad graph JSON: {exc}") from None


# ----------------------------------------------------------------------------
# Builders


def empty_graph(n: int) -> SignedDigraph:
    return SignedDigraph(n)


def build_cycle(n: int, sign: int = 1) -> SignedDigraph:
    """Directed cycle ``0 -> 1 -> ... -> n-1 -> 0``.

    A negative cycle carries its single negative arc on the closing arc.
    """
    if n < 2:
        raise GraphError(f"cycle needs n >= 2, got {n}")
    sign = _sign(sign)
    arcs = [(i, i + 1, 1) for i in range(n - 1)]
    arcs.append((n - 1, 0, sign))
    return SignedDigraph(n, tuple(arcs))


def build_path(n: int, signs: Sequence[int]) -> SignedDigraph:
    if n < 2:
        raise GraphError(f"path needs n >= 2, got {n}")
    if len(signs) != n - 1:
        raise GraphError(f"path on {n} vertices needs {n - 1} signs, got {len(signs)}")
    return SignedDigraph(n, tuple((i, i + 1, _sign(s)) for i, s in enumerate(signs)))


def build_symmetric_double(edges: Iterable[tuple[int, int, int]], n: int) -> SignedDigraph:
    """Replace every signed edge ``{u, v}`` by the arcs ``u -> v`` and ``v -> u`` of the same sign."""
    seen: set[frozenset] = set()
    arcs = []
    for u, v, s in edges:
        key = frozenset((u, v))
        if key in seen:
            raise DuplicateArcError(f"duplicate edge ({u}, {v})")
        seen.add(key)
        s = _sign(s)
        arcs.extend([(u, v, s), (v, u, s)])
    return SignedDigraph(n, tuple(arcs))


def build_k2_double(copies: int, sign: int = 1, isolated: int = 0) -> SignedDigraph:
    """``copies`` disjoint homogeneous digons plus ``isolated`` arcless vertices."""
    if copies < 0 or isolated < 0 or copies * 2 + isolated < 1:
        raise GraphError("need at least one vertex")
    edges = [(2 * i, 2 * i + 1, sign) for i in range(copies)]
    return build_symmetric_double(edges, 2 * copies + isolated)


def build_skew_symmetric(n: int) -> SignedDigraph:
    """Star whose edges are opposite-direction, opposite-sign arc pairs."""
    if n < 2:
        raise GraphError(f"skew-symmetric star needs n >= 2, got {n}")
    arcs = []
    for leaf in range(1, n):
        arcs.extend([(0, leaf, 1), (leaf, 0, -1)])
    return SignedDigraph(n, tuple(arcs))


def build_pln(n: int, l: int, cycle_sign: int = -1) -> SignedDigraph:
    """Cycle of length ``l`` with a positive directed path of ``n - l`` arcs leaving vertex ``l-1``."""
    if l < 2:
        raise GraphError(f"cycle length must be >= 2, got {l}")
    if n <= l:
        raise GraphError(f"need n > l, got n={n}, l={l}")
    cycle = build_cycle(l, cycle_sign)
    tail_arcs = [(l - 1 if i == l else i - 1, i, 1) for i in range(l, n)]
    return SignedDigraph(n, cycle.arcs + tuple(tail_arcs))


def unsigned(graph: SignedDigraph) -> SignedDigraph:
    return SignedDigraph(graph.n, tuple((t, h, 1) for t, h, _ in graph.arcs))


def negated(graph: SignedDigraph) -> SignedDigraph:
    return SignedDigraph(graph.n, tuple((t, h, -s) for t, h, s in graph.arcs))


# ----------------------------------------------------------------------------
# Strong components and direct sums


def _tarjan(graph: SignedDigraph) -> list[list[int]]:
    out = [[h for h, _ in row] for row in graph.out_lists()]
    index = [-1] * graph.n
    low = [0] * graph.n
    on_stack = [False] * graph.n
    stack: list[int] = []
    components: list[list[int]] = []
    counter = 0
    for root in range(graph.n):
        if index[root] >= 0:
            continue
        # iterative DFS: (vertex, next child position)
        work = [(root, 0)]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, i = work[-1]
            if i < len(out[v]):
                work[-1] = (v, i + 1)
                w = out[v][i]
                if index[w] < 0:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w]:
                    low[v] = min(low[v], index[w])
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                components.append(sorted(comp))
    return sorted(components, key=lambda c: c[0])


def component_vertex_sets(graph: SignedDigraph) -> list[list[int]]:
    """Vertex sets of the strong components, ordered by least vertex."""
    return _tarjan(graph)


def strong_components(graph: SignedDigraph) -> list[SignedDigraph]:
    return [graph.induced(comp) for comp in _tarjan(graph)]


def cyclic_part(graph: SignedDigraph) -> SignedDigraph:
    """Same vertex set with every arc joining two strong components removed."""
    label = {}
    for k, comp in enumerate(_tarjan(graph)):
        for v in comp:
            label[v] = k
    return SignedDigraph(graph.n, tuple(a for a in graph.arcs if label[a[0]] == label[a[1]]))


def direct_sum(parts: Sequence[SignedDigraph]) -> SignedDigraph:
    if not parts:
        raise GraphError("direct sum of an empty list")
    offset = 0
    arcs = []
    for part in parts:
        arcs.extend((t + offset, h + offset, s) for t, h, s in part.arcs)
        offset += part.n
    return SignedDigraph(offset, tuple(arcs))


# ----------------------------------------------------------------------------
# NEPS products


@dataclass(frozen=True)
class NepsBasis:
    """Set of binary tuples selecting which factors move along an arc."""

    m: int
    tuples: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.m < 1:
            raise BasisError("basis needs at least one coordinate")
        cleaned = []
        for beta in self.tuples:
            beta = tuple(int(b) for b in beta)
            if len(beta) != self.m:
                raise BasisError(f"tuple {beta} has arity {len(beta)}, expected {self.m}")
            if any(b not in (0, 1) for b in beta):
                raise BasisError(f"tuple {beta} is not binary")
            if not any(beta):
                raise BasisError("the all-zero tuple is not allowed")
            cleaned.append(beta)
        if len(set(cleaned)) != len(cleaned):
            raise BasisError("basis tuples must be distinct")
        for i in range(self.m):
            if not any(beta[i] for beta in cleaned):
                raise BasisError(f"coordinate {i} is not covered by any tuple")
        object.__setattr__(self, "tuples", tuple(sorted(cleaned)))

    @classmethod
    def kronecker(cls, m: int) -> NepsBasis:
        return cls(m, ((1,) * m,))

    @classmethod
    def cartesian(cls, m: int) -> NepsBasis:
        return cls(m, tuple(tuple(int(i == j) for j in range(m)) for i in range(m)))

    def __iter__(self):
        return iter(self.tuples)

    def __len__(self) -> int:
        return len(self.tuples)


def _neps_arcs(factors: Sequence[SignedDigraph], beta: tuple[int, ...]) -> list[Arc]:
    sizes = [f.n for f in factors]
    strides = [int(np.prod(sizes[i + 1:], dtype=np.int64)) for i in range(len(sizes))]
    # per coordinate: list of (u_i, v_i, sign) moves
    moves = []
    for f, b in zip(factors, beta):
        if b:
            moves.append(list(f.arcs))
        else:
            moves.append([(v, v, 1) for v in range(f.n)])
    arcs = []
    for combo in itertools.product(*moves):
        tail = sum(u * st for (u, _, _), st in zip(combo, strides))
        head = sum(v * st for (_, v, _), st in zip(combo, strides))
        sign = 1
        for _, _, s in combo:
            sign *= s
        arcs.append((tail, head, sign))
    return arcs


def neps_arcs_by_tuple(factors: Sequence[SignedDigraph], basis: NepsBasis) -> dict[tuple[int, ...], list[Arc]]:
    """Arcs of the NEPS product split by the basis tuple that generates them."""
    if basis.m != len(factors):
        raise BasisError(f"basis arity {basis.m} does not match {len(factors)} factors")
    return {beta: _neps_arcs(factors, beta) for beta in basis}


def neps(factors: Sequence[SignedDigraph], basis: NepsBasis) -> SignedDigraph:
    """Non-complete extended p-sum of the factors over ``basis``.

    Product vertices are ordered row-major over factor index tuples, so the
    vertex ``(u_1, ..., u_m)`` has index ``sum(u_i * prod(n_{i+1..m}))``.
    """
    if basis.m != len(factors):
        raise BasisError(f"basis arity {basis.m} does not match {len(factors)} factors")
    n = int(np.prod([f.n for f in factors], dtype=np.int64))
    arcs: list[Arc] = []
    for beta in basis:
        arcs.extend(_neps_arcs(factors, beta))
    # distinct tuples give disjoint arc sets; the constructor rejects duplicates
    return SignedDigraph(n, tuple(arcs))


def cartesian_product(*factors: SignedDigraph) -> SignedDigraph:
    return neps(factors, NepsBasis.cartesian(len(factors)))


def kronecker_product(*factors: SignedDigraph) -> SignedDigraph:
    return neps(factors, NepsBasis.kronecker(len(factors)))
