"""Generators of noncospectral equienergetic pairs."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from ..charpoly import charpoly
from ..graph import (
    GraphError,
    SignedDigraph,
    build_cycle,
    build_k2_double,
    build_pln,
    build_skew_symmetric,
    cartesian_product,
    kronecker_product,
)
from ..spectra import match_multisets, spectrum
from .balance import is_cycle_balanced

__all__ = ["KINDS", "EquienergeticReport", "equienergetic_pair", "k2_cartesian_energy_precondition"]

KINDS = ("odd-cycles", "cycle-k2", "pln-k2", "kron-skew")
ENERGY_TOL = 1e-9


@dataclass(frozen=True)
class EquienergeticReport:
    kind: str
    order: int
    energies: tuple[float, float]
    expected_energy: float | None
    cospectral: bool
    balanced: tuple[bool, bool]
    checks: dict = field(default_factory=dict)

    @property
    def verified(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "order": self.order,
            "energies": list(self.energies),
            "expected_energy": self.expected_energy,
            "cospectral": self.cospectral,
            "balanced": list(self.balanced),
            "checks": dict(self.checks),
            "verified": self.verified,
        }


def k2_cartesian_energy_precondition(graph: SignedDigraph) -> float:
    """Largest ``|Re z|`` over the spectrum; at most 1 means ``S x K2`` has energy ``2n``."""
    spec = spectrum(graph)
    return max(abs(z.real) for z, _ in spec.values)


def _positive_k2() -> SignedDigraph:
    return build_k2_double(1, 1)


def equienergetic_pair(
    n: int,
    kind: str,
    base: SignedDigraph | None = None,
    m: int | None = None,
) -> tuple[SignedDigraph, SignedDigraph, EquienergeticReport]:
    """Build a pair of equal-order, equal-energy, noncospectral graphs and verify it.

    ``odd-cycles``: negative and positive ``n``-cycles, ``n`` odd.
    ``cycle-k2``: negative and positive ``n``-cycles times a positive digon.
    ``pln-k2``: ``build_pln(n, 3)`` and ``build_pln(n, 4)`` times a positive digon.
    ``kron-skew``: ``(base (x) skew star S_m) x K2`` against ``n m`` disjoint
    positive digons, both of energy ``2 n m``.  ``base`` defaults to the
    positive ``n``-cycle and ``m`` to 2; the eigenvalues of ``base`` must
    satisfy ``|Im z| <= 1/sqrt(m - 1)``.
    """
    checks: dict[str, bool] = {}
    expected = None
    k2 = _positive_k2()
    if kind == "odd-cycles":
        if n < 3 or n % 2 == 0:
            raise GraphError(f"odd-cycles needs odd n >= 3, got {n}")
        first, second = build_cycle(n, -1), build_cycle(n, 1)
        s1, s2 = spectrum(first).expanded(), spectrum(second).expanded()
        checks["negated_spectrum"] = match_multisets(s1, -s2) <= 1e-8
    elif kind == "cycle-k2":
        if n < 2:
            raise GraphError(f"cycle-k2 needs n >= 2, got {n}")
        bases = build_cycle(n, -1), build_cycle(n, 1)
        checks["real_parts_at_most_one"] = all(k2_cartesian_energy_precondition(b) <= 1 + 1e-12 for b in bases)
        first, second = (cartesian_product(b, k2) for b in bases)
        expected = 2.0 * n
    elif kind == "pln-k2":
        if n < 5:
            raise GraphError(f"pln-k2 needs n >= 5, got {n}")
        bases = build_pln(n, 3, -1), build_pln(n, 4, -1)
        checks["real_parts_at_most_one"] = all(k2_cartesian_energy_precondition(b) <= 1 + 1e-12 for b in bases)
        first, second = (cartesian_product(b, k2) for b in bases)
        expected = 2.0 * n
        ones = spectrum(first).multiplicity(1.0), spectrum(second).multiplicity(1.0)
        checks["eigenvalue_one_multiplicities"] = ones == (n - 3, n - 4)
    elif kind == "kron-skew":
        base = build_cycle(n, 1) if base is None else base
        m = 2 if m is None else m
        if m < 2:
            raise GraphError(f"skew star order must be >= 2, got {m}")
        bound = 1.0 / math.sqrt(m - 1)
        imag_max = max(abs(z.imag) for z, _ in spectrum(base).values)
        if imag_max > bound + 1e-12:
            raise GraphError(f"base eigenvalue |Im z| = {imag_max:.6g} exceeds 1/sqrt(m-1) = {bound:.6g}")
        product = kronecker_product(base, build_skew_symmetric(m))
        checks["real_parts_at_most_one"] = k2_cartesian_energy_precondition(product) <= 1 + 1e-12
        first = cartesian_product(product, k2)
        second = build_k2_double(base.n * m, 1)
        expected = 2.0 * base.n * m
    else:
        raise GraphError(f"unknown kind {kind!r}; expected one of {KINDS}")

    e1, e2 = spectrum(first).energy(), spectrum(second).energy()
    cospectral = charpoly(first) == charpoly(second)
    balanced = is_cycle_balanced(first).balanced, is_cycle_balanced(second).balanced
    checks["equal_order"] = first.n == second.n
    checks["equal_energy"] = abs(e1 - e2) <= ENERGY_TOL
    checks["noncospectral"] = not cospectral
    if expected is not None:
        checks["expected_energy"] = abs(e1 - expected) <= ENERGY_TOL and abs(e2 - expected) <= ENERGY_TOL
    if kind in ("odd-cycles", "cycle-k2"):
        checks["one_balanced_one_not"] = balanced == (False, True)
    elif kind == "pln-k2":
        checks["both_unbalanced"] = balanced == (False, False)
    report = EquienergeticReport(kind, first.n, (e1, e2), expected, cospectral, balanced, checks)
    return first, second, report
