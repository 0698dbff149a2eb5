"""Quasi-order on graphs whose cycles all share one length."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from ..charpoly import charpoly_uniform_cycle_length
from ..graph import GraphError, SignedDigraph
from ..spectra import energy_value
from .balance import TheoremViolation

__all__ = ["Relation", "QuasiOrderResult", "QuasiOrderMembershipError", "cstar_vector", "quasi_order_compare"]

MONOTONICITY_TOL = 1e-9


class QuasiOrderMembershipError(GraphError):
    pass


class Relation(str, Enum):
    LESS = "Less"
    GREATER = "Greater"
    EQUAL = "Equal"
    INCOMPARABLE = "Incomparable"


@dataclass(frozen=True)
class QuasiOrderResult:
    relation: Relation
    cstar_first: tuple[int, ...]
    cstar_second: tuple[int, ...]
    energies: tuple[float, float] | None = None

    def to_json(self) -> dict:
        return {
            "relation": self.relation.value,
            "cstar": [list(self.cstar_first), list(self.cstar_second)],
            "energies": list(self.energies) if self.energies else None,
        }


def cstar_vector(graph: SignedDigraph, h: int) -> tuple[int, ...]:
    """Signed counts ``c*(S, kh)``, ``k = 1 .. n // h``; requires every cycle to have length ``h``."""
    _, cstar = charpoly_uniform_cycle_length(graph, h)
    return tuple(cstar)


def compare_vectors(first, second) -> Relation:
    le = all(a <= b for a, b in zip(first, second))
    ge = all(a >= b for a, b in zip(first, second))
    if le and ge:
        return Relation.EQUAL
    if le:
        return Relation.LESS
    if ge:
        return Relation.GREATER
    return Relation.INCOMPARABLE


def quasi_order_compare(first: SignedDigraph, second: SignedDigraph, h: int) -> QuasiOrderResult:
    """Compare two members of the class with non-negative ``c*`` vectors.

    For ``h = 2 mod 4`` a strict relation must come with strictly ordered
    energies; a violation raises :class:`TheoremViolation`.
    """
    if first.n != second.n:
        raise QuasiOrderMembershipError(f"order mismatch: {first.n} vs {second.n}")
    try:
        c1 = cstar_vector(first, h)
        c2 = cstar_vector(second, h)
    except GraphError as exc:
        raise QuasiOrderMembershipError(str(exc)) from None
    for c in (c1, c2):
        if any(v < 0 for v in c):
            raise QuasiOrderMembershipError(f"negative signed count in {c}")
    relation = compare_vectors(c1, c2)
    energies = None
    if h % 4 == 2 and relation in (Relation.LESS, Relation.GREATER):
        e1, e2 = energy_value(first), energy_value(second)
        energies = (e1, e2)
        lo, hi = (e1, e2) if relation is Relation.LESS else (e2, e1)
        if not lo < hi - MONOTONICITY_TOL:
            raise TheoremViolation(f"strict quasi-order but energies {e1} and {e2}")
    return QuasiOrderResult(relation, c1, c2, energies)
