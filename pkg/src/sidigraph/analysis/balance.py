"""Cycle balance via switching potentials, with explicit negative-cycle witnesses."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

from ..graph import BasisError, NepsBasis, SignedDigraph, component_vertex_sets, neps, unsigned
from ..spectra import is_cospectral

__all__ = ["BalanceWitness", "TheoremViolation", "is_cycle_balanced", "neps_balance_check"]


class TheoremViolation(AssertionError):
    """A computed object contradicts a proven implication."""


@dataclass(frozen=True)
class BalanceWitness:
    """Outcome of the balance test.

    When balanced, ``potential[v]`` is a vertex sign with
    ``sign(u, v) == potential[u] * potential[v]`` on every arc inside a strong
    component.  Otherwise ``cycle`` lists the vertices of a negative directed
    cycle in order.
    """

    balanced: bool
    potential: tuple[int, ...] | None = None
    cycle: tuple[int, ...] | None = None
    extra: dict = field(default_factory=dict, compare=False)

    def to_json(self) -> dict:
        out: dict = {"balanced": self.balanced}
        if self.balanced:
            out["potential"] = list(self.potential)
        else:
            out["cycle"] = list(self.cycle)
        return out


def _tree_signs(adj: dict[int, list[tuple[int, int]]], root: int, members: set[int]):
    """BFS from ``root`` inside ``members``: signs and parents of the search tree."""
    sign = {root: 1}
    parent = {root: None}
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for w, s in adj.get(v, ()):
            if w in members and w not in sign:
                sign[w] = sign[v] * s
                parent[w] = v
                queue.append(w)
    return sign, parent


def _walk_to(parent: dict, v: int) -> list[int]:
    """Tree path from the root to ``v`` (inclusive)."""
    path = []
    while v is not None:
        path.append(v)
        v = parent[v]
    return path[::-1]


def _negative_cycle_from_walk(graph: SignedDigraph, walk: list[int]) -> tuple[int, ...]:
    """Split a closed walk of negative sign into simple cycles and return a negative one.

    ``walk`` lists vertices with ``walk[0] == walk[-1]``.  The walk sign is the
    product of its cycle signs, so at least one cycle is negative.
    """
    stack: list[int] = []
    pos: dict[int, int] = {}
    for v in walk:
        if v in pos:
            cyc = stack[pos[v]:]
            sign = 1
            for a, b in zip(cyc, cyc[1:] + [cyc[0]]):
                sign *= graph.sign(a, b)
            if sign < 0:
                return tuple(cyc)
            for u in cyc[1:]:
                del pos[u]
            del stack[pos[v] + 1:]
        else:
            pos[v] = len(stack)
            stack.append(v)
    raise RuntimeError("closed walk was not negative")


def is_cycle_balanced(graph: SignedDigraph) -> BalanceWitness:
    """Decide whether every directed cycle is positive.

    In each strong component a potential is grown along a BFS tree from its
    least vertex.  If every arc of the component satisfies
    ``sign(u, v) == s(u) s(v)``, each cycle has sign ``prod s(u) s(v) = +1``.
    If an arc ``u -> v`` fails, then with ``t`` the signs of tree paths back to
    the root, either ``root ~> u -> v ~> root`` or ``root ~> v ~> root`` is a
    negative closed walk, which contains a negative cycle.
    """
    fwd: dict[int, list[tuple[int, int]]] = {}
    rev: dict[int, list[tuple[int, int]]] = {}
    for t, h, s in graph.arcs:
        fwd.setdefault(t, []).append((h, s))
        rev.setdefault(h, []).append((t, s))
    potential = [1] * graph.n
    for comp in component_vertex_sets(graph):
        if len(comp) == 1:
            continue
        members = set(comp)
        root = comp[0]
        s_out, par_out = _tree_signs(fwd, root, members)
        for v in comp:
            potential[v] = s_out[v]
        for u in comp:
            for v, sgn in fwd.get(u, ()):
                if v not in members or s_out[u] * sgn == s_out[v]:
                    continue
                s_in, par_in = _tree_signs(rev, root, members)
                down_u = _walk_to(par_out, u)
                up_v = _walk_to(par_in, v)[::-1]  # v ... root
                if s_in[v] == s_out[v]:
                    walk = down_u + up_v
                else:
                    walk = _walk_to(par_out, v) + up_v[1:]
                return BalanceWitness(False, cycle=_negative_cycle_from_walk(graph, walk))
    return BalanceWitness(True, potential=tuple(potential))


def neps_balance_check(factors: Sequence[SignedDigraph], basis: NepsBasis) -> bool:
    """Balance of a NEPS product, checked against the known implications.

    Balanced factors force a balanced product for every basis; for the
    Cartesian basis the product is balanced exactly when every factor is, and
    exactly when it is cospectral with its unsigned version.  Raises
    :class:`TheoremViolation` if the computed balance disagrees.
    """
    if basis.m != len(factors):
        raise BasisError(f"basis arity {basis.m} does not match {len(factors)} factors")
    product = neps(factors, basis)
    actual = is_cycle_balanced(product).balanced
    factors_balanced = all(is_cycle_balanced(f).balanced for f in factors)
    if factors_balanced and not actual:
        raise TheoremViolation("balanced factors produced an unbalanced product")
    if basis == NepsBasis.cartesian(basis.m):
        if actual != factors_balanced:
            raise TheoremViolation("Cartesian product balance differs from factor balance")
        if actual != is_cospectral(product, unsigned(product)):
            raise TheoremViolation("Cartesian product balance differs from cospectrality with |S|")
    return actual
