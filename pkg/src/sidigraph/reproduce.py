"""Golden-value reproduction suite, grouped by topic.

Each section returns a list of :class:`Check` rows (name, expected, got,
tolerance, pass).  Sections:

``2``  energy basics, builders, zero-energy classification, additivity
``3``  cycle closed forms, monotonicity, the Coulson integrals, uniform cycle length
``4``  NEPS products: spectrum composition and balance propagation
``5``  walks, trace identity and the two upper bounds
``6``  equienergetic families
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .analysis import (
    Relation,
    TheoremViolation,
    arc_bound_check,
    brute_force_walks,
    closed_walk_balance,
    cycle_energy_closed_form,
    cycle_energy_sum,
    equienergetic_pair,
    is_cycle_balanced,
    mcclelland_bound,
    neps_balance_check,
    quasi_order_compare,
    signed_walk_matrix,
    zero_energy_class,
)
from .charpoly import charpoly, charpoly_enumerate, charpoly_uniform_cycle_length
from .corpus import exhaustive, random_sidigraph
from .graph import (
    GraphError,
    NepsBasis,
    SignedDigraph,
    build_cycle,
    build_k2_double,
    build_path,
    build_pln,
    build_skew_symmetric,
    build_symmetric_double,
    direct_sum,
    empty_graph,
    kronecker_product,
    negated,
    neps,
    neps_arcs_by_tuple,
    strong_components,
    unsigned,
)
from .polynomial import IntPolynomial
from .spectra import (
    coulson_energy,
    coulson_log_energy,
    energy_value,
    is_cospectral,
    match_multisets,
    neps_spectrum,
    spectrum,
)

__all__ = ["Check", "SECTIONS", "run_section", "format_table"]


@dataclass(frozen=True)
class Check:
    name: str
    expected: object
    got: object
    tol: float | None
    passed: bool

    def to_json(self) -> dict:
        return {
            "check": self.name,
            "expected": _plain(self.expected),
            "got": _plain(self.got),
            "tol": self.tol,
            "pass": self.passed,
        }


def _plain(value):
    if isinstance(value, (bool, int, str)) or value is None:
        return value
    if isinstance(value, float):
        return value
    if isinstance(value, (np.floating, np.integer)):
        return value.item()
    return str(value)


def _close(name: str, expected: float, got: float, tol: float) -> Check:
    return Check(name, expected, got, tol, abs(expected - got) <= tol)


def _same(name: str, expected, got) -> Check:
    return Check(name, expected, got, None, expected == got)


def _true(name: str, ok: bool, detail=None) -> Check:
    """A boolean check; ``detail`` is shown as the observed value when given."""
    return Check(name, True, bool(ok) if detail is None else detail, None, bool(ok))


# ----------------------------------------------------------------------------


def section_2() -> list[Check]:
    out = []
    c4 = build_cycle(4, -1)
    out.append(_close("E(negative C4) = 2*sqrt(2)", 2 * math.sqrt(2), energy_value(c4), 1e-9))
    out.append(_same("charpoly negative C4", "x^4 + 1", str(charpoly(c4))))
    pln = build_pln(10, 3, -1)
    out.append(_same("charpoly pendant path on negative C3, n=10", "x^10 + x^7", str(charpoly(pln))))
    out.append(_close("E(pendant path on negative C3, n=10) = 2", 2.0, energy_value(pln), 1e-9))
    p5 = build_path(5, [1, -1, 1, -1])
    out.append(_same("acyclic charpoly P5", "x^5", str(charpoly_enumerate(p5))))
    out.append(_close("E(P5) = 0", 0.0, energy_value(p5), 1e-9))
    for n in range(2, 9):
        s = build_skew_symmetric(n)
        out.append(_close(f"E(skew star, n={n}) = 0", 0.0, energy_value(s), 1e-9))
        expected = IntPolynomial.monomial(n - 2) * IntPolynomial((n - 1, 0, 1))
        out.append(_same(f"charpoly skew star n={n}", str(expected), str(charpoly(s))))
    # additivity over strong components
    g = direct_sum([build_cycle(3, -1), build_cycle(4, 1), build_path(3, [1, 1])])
    parts = math.fsum(energy_value(c) for c in strong_components(g))
    out.append(_close("energy additive over strong components", parts, energy_value(g), 1e-9))
    pln5 = build_pln(5, 3, -1)
    out.append(_close("E(pendant path on C3, n=5) = E(C3)", energy_value(build_cycle(3, -1)), energy_value(pln5), 1e-9))
    # zero-energy classification
    shared = SignedDigraph(3, ((0, 1, 1), (1, 0, 1), (1, 2, 1), (2, 1, -1)))
    tags = [
        ("P5", p5, "Acyclic"),
        ("skew star n=4", build_skew_symmetric(4), "SkewSpectrum"),
        ("shared-vertex digons", shared, "TypeBalanced"),
        ("negative C4", c4, "NonZero"),
    ]
    for label, graph, tag in tags:
        out.append(_same(f"zero-energy class {label}", tag, zero_energy_class(graph).tag.value))
    count = 0
    agree = 0
    for n in (1, 2, 3):
        for graph in exhaustive(n):
            count += 1
            agree += zero_energy_class(graph).zero_energy == (energy_value(graph) <= 1e-9)
    out.append(_same("zero-energy class agrees with E = 0, all graphs n <= 3", count, agree))
    return out


def section_3() -> list[Check]:
    out = []
    worst = 0.0
    for n in range(2, 51):
        for s in (1, -1):
            worst = max(worst, abs(cycle_energy_closed_form(n, s) - energy_value(build_cycle(n, s))))
    out.append(Check("closed forms vs root finder, n <= 50, both signs", 0.0, worst, 1e-8, worst <= 1e-8))
    out.append(_close("odd closed form at n=3 equals 2", 2.0, cycle_energy_closed_form(3, 1), 1e-12))
    out.append(_close("direct summation at n=3 equals 2", 2.0, cycle_energy_sum(3, -1), 1e-12))
    out.append(_close("E(positive C4) = 2", 2.0, cycle_energy_closed_form(4, 1), 1e-12))
    out.append(_close("E(negative C6) = 2*sqrt(3)", 2 * math.sqrt(3), cycle_energy_closed_form(6, -1), 1e-12))
    neg = [energy_value(build_cycle(n, -1)) for n in range(2, 51)]
    mono = all(b > a for a, b in zip(neg, neg[1:]))
    out.append(_true("negative-cycle energy increases with n, 2 <= n <= 50", mono))
    tri = True
    for n in range(2, 51):
        pos, negv = energy_value(build_cycle(n, 1)), energy_value(build_cycle(n, -1))
        if n % 2 == 1:
            tri &= abs(pos - negv) <= 1e-9
        elif n % 4 == 0:
            tri &= negv > pos
        else:
            tri &= negv < pos
    out.append(_true("sign trichotomy of cycle energies, n <= 50", tri))
    cases = [
        ("negative C4", build_cycle(4, -1), 2 * math.sqrt(2)),
        ("positive C3", build_cycle(3, 1), 2.0),
        ("negative digon (poles at +-1)", build_cycle(2, -1), 0.0),
        ("skew star n=3", build_skew_symmetric(3), 0.0),
    ]
    for label, graph, value in cases:
        out.append(_close(f"Coulson integral {label}", value, coulson_energy(graph).energy, 1e-4))
    out.append(_close("log-form integral negative C4", 2 * math.sqrt(2), coulson_log_energy(build_cycle(4, -1)).energy, 1e-4))
    out.append(_close("log-form integral positive digon", 2.0, coulson_log_energy(build_cycle(2, 1)).energy, 1e-4))
    rng = np.random.default_rng(3)
    worst = 0.0
    for _ in range(40):
        g = random_sidigraph(rng, int(rng.integers(2, 9)), 0.4, 0.5)
        worst = max(worst, abs(coulson_energy(g).energy - energy_value(g)))
    out.append(Check("Coulson vs algebraic, 40 random graphs", 0.0, worst, 1e-4, worst <= 1e-4))
    # uniform cycle length
    p, cstar = charpoly_uniform_cycle_length(build_cycle(4, -1), 4)
    out.append(_same("uniform length h=4, negative C4", "x^4 + 1", str(p)))
    out.append(_same("c* of negative C4", [-1], cstar))
    p, cstar = charpoly_uniform_cycle_length(build_k2_double(2, 1), 2)
    out.append(_same("uniform length h=2, two positive digons", "x^4 - 2x^2 + 1", str(p)))
    out.append(_same("c* of two positive digons", [2, 1], cstar))
    one = build_k2_double(1, 1, isolated=2)
    two = build_k2_double(2, 1)
    r = quasi_order_compare(one, two, 2)
    out.append(_same("quasi-order: one digon vs two digons", "Less", r.relation.value))
    out.append(_true("quasi-order: energies strictly ordered", r.energies[0] < r.energies[1], r.energies))
    pairs, ok = quasi_order_forest_pairs(20, seed=11)
    out.append(_same("strict quasi-order implies larger energy, 20 forest pairs", 20, ok))
    return out


def random_signed_forest(rng: np.random.Generator, n: int, edge_prob: float = 0.8):
    """Random signed forest as a symmetric double: every cycle is a digon."""
    edges = []
    for v in range(1, n):
        if rng.random() < edge_prob:
            u = int(rng.integers(0, v))
            edges.append((u, v, 1 if rng.random() < 0.5 else -1))
    return edges


def quasi_order_forest_pairs(count: int, seed: int = 0, n_range=(3, 10)):
    """Pairs (subforest, forest) with at least one edge removed.

    Linear subdigraphs of a symmetric forest are matchings of digons and every
    digon is a positive cycle, so ``c*`` counts matchings and deleting an edge
    can only lower it.  Returns the pairs and how many satisfied the
    monotonicity check.
    """
    rng = np.random.default_rng(seed)
    pairs = []
    ok = 0
    while len(pairs) < count:
        n = int(rng.integers(n_range[0], n_range[1] + 1))
        edges = random_signed_forest(rng, n)
        if not edges:
            continue
        keep = [e for e in edges if rng.random() < 0.5]
        if len(keep) == len(edges):
            keep = keep[:-1]
        small, big = build_symmetric_double(keep, n), build_symmetric_double(edges, n)
        try:
            result = quasi_order_compare(small, big, 2)
        except TheoremViolation:
            pairs.append((small, big))
            continue
        pairs.append((small, big))
        ok += result.relation is Relation.LESS and result.energies[0] < result.energies[1]
    return pairs, ok


def random_basis(rng: np.random.Generator, m: int) -> NepsBasis:
    tuples = [t for t in itertools.product((0, 1), repeat=m) if any(t)]
    while True:
        pick = [t for t in tuples if rng.random() < 0.5]
        if pick and all(any(t[i] for t in pick) for i in range(m)):
            return NepsBasis(m, tuple(pick))


def section_4() -> list[Check]:
    out = []
    c3 = build_cycle(3, -1)
    k2 = build_k2_double(1, 1)
    prod = neps([c3, k2], NepsBasis.cartesian(2))
    out.append(_same("Cartesian product order", 6, prod.n))
    out.append(_same("Cartesian product arcs |A1| n2 + |A2| n1", 3 * 2 + 2 * 3, prod.num_arcs))
    out.append(_close("E(negative C3 x digon) = 6", 6.0, energy_value(prod), 1e-9))
    both = kronecker_product(build_cycle(2, 1), build_cycle(2, 1))
    out.append(_close("E(C2 (x) C2) = 4", 4.0, energy_value(both), 1e-9))
    rng = np.random.default_rng(4)
    worst = 0.0
    disjoint = True
    for _ in range(60):
        m = int(rng.integers(2, 4))
        factors = [random_sidigraph(rng, int(rng.integers(1, 5)), 0.5, 0.5) for _ in range(m)]
        basis = random_basis(rng, m)
        direct = spectrum(neps(factors, basis)).expanded()
        worst = max(worst, match_multisets(direct, neps_spectrum(factors, basis)))
        sets = [set((t, h) for t, h, _ in arcs) for arcs in neps_arcs_by_tuple(factors, basis).values()]
        disjoint &= all(not (a & b) for a, b in itertools.combinations(sets, 2))
    out.append(Check("NEPS spectrum = composed formula, 60 random products", 0.0, worst, 1e-7, worst <= 1e-7))
    out.append(_true("arc sets of distinct basis tuples are disjoint", disjoint))
    balanced_ok = True
    for _ in range(40):
        m = int(rng.integers(2, 4))
        factors = [unsigned(random_sidigraph(rng, int(rng.integers(1, 4)), 0.5, 0.0)) for _ in range(m)]
        try:
            balanced_ok &= neps_balance_check(factors, random_basis(rng, m))
        except TheoremViolation:
            balanced_ok = False
    out.append(_true("balanced factors give a balanced product, 40 random cases", balanced_ok))
    counter = kronecker_product(negated(build_cycle(3, 1)), build_k2_double(1, -1))
    out.append(_true("negated C3 (x) negative-double digon: all arcs positive", not counter.negative_arcs))
    out.append(_true("... product balanced", is_cycle_balanced(counter).balanced))
    out.append(_true("... factor unbalanced", not is_cycle_balanced(negated(build_cycle(3, 1))).balanced))
    cart = [
        ([build_cycle(3, -1), k2], False),
        ([build_cycle(3, 1), k2], True),
        ([build_cycle(4, -1), build_cycle(2, -1)], False),
    ]
    for factors, expected in cart:
        got = neps_balance_check(factors, NepsBasis.cartesian(2))
        out.append(_same(f"Cartesian balance with factor balance {expected}", expected, got))
    return out


def section_5() -> list[Check]:
    out = []
    out.append(_same("positive digon l=2 is identity", [[1, 0], [0, 1]], signed_walk_matrix(build_cycle(2, 1), 2).tolist()))
    out.append(_same("negative digon l=2 is -identity", [[-1, 0], [0, -1]], signed_walk_matrix(build_cycle(2, -1), 2).tolist()))
    out.append(_same("closed walk balance negative C4, m=4", -4, closed_walk_balance(build_cycle(4, -1), 4)))
    rng = np.random.default_rng(5)
    walks_ok = True
    trace_worst = 0.0
    for _ in range(40):
        g = random_sidigraph(rng, int(rng.integers(1, 6)), 0.5, 0.5)
        spec = spectrum(g)
        for l in range(1, 7):
            plus, minus = brute_force_walks(g, l)
            walks_ok &= np.array_equal(signed_walk_matrix(g, l).astype(np.int64), plus - minus)
            trace_worst = max(trace_worst, abs(spec.power_sum(l) - closed_walk_balance(g, l)))
    out.append(_true("walk matrix equals brute force, 40 graphs, l <= 6", walks_ok))
    out.append(Check("sum z^m = tr(A^m), m <= 6", 0.0, trace_worst, 1e-7, trace_worst <= 1e-7))
    for copies in (1, 2, 3):
        g = build_k2_double(copies, 1)
        out.append(_close(f"McClelland attained, {copies} positive digons", mcclelland_bound(g), energy_value(g), 1e-9))
    g = build_k2_double(2, -1)
    out.append(_close("McClelland attained, 2 negative-double digons", mcclelland_bound(g), energy_value(g), 1e-9))
    for n in (3, 5):
        g = build_skew_symmetric(n)
        out.append(_close(f"McClelland attained, skew star n={n}", 0.0, mcclelland_bound(g), 1e-12))
    out.append(_close("McClelland attained, negative C4", 2 * math.sqrt(2), mcclelland_bound(build_cycle(4, -1)), 1e-12))
    out.append(_same("arc bound, two digons + isolated vertex", (4, True), arc_bound_check(build_k2_double(2, 1, isolated=1))))
    out.append(_same("arc bound, negative C4", (4, False), arc_bound_check(build_cycle(4, -1))))
    out.append(_same("arc bound, arcless graph", (0, True), arc_bound_check(empty_graph(3))))
    bad = 0
    count = 0
    for n in (1, 2, 3):
        for g in exhaustive(n):
            count += 1
            e = energy_value(g)
            a, attained = arc_bound_check(g)
            if e > mcclelland_bound(g) + 1e-9 or e > a + 1e-9 or attained != (abs(e - a) <= 1e-9):
                bad += 1
    out.append(_same(f"bounds and equality cases on all {count} graphs n <= 3", 0, bad))
    return out


def section_6() -> list[Check]:
    out = []
    for n in range(2, 11):
        _, _, rep = equienergetic_pair(n, "cycle-k2")
        out.append(_true(f"cycle-k2 n={n}: E = {2 * n}, noncospectral, one balanced", rep.verified, rep.energies))
    for n in range(5, 11):
        _, _, rep = equienergetic_pair(n, "pln-k2")
        out.append(_true(f"pln-k2 n={n}: E = {2 * n}, noncospectral, eigenvalue-1 multiplicities", rep.verified, rep.energies))
    for n in (3, 5, 7, 9):
        _, _, rep = equienergetic_pair(n, "odd-cycles")
        out.append(_true(f"odd-cycles n={n}: equal energy, opposite spectra", rep.verified, rep.energies))
    for n, m in ((3, 2), (4, 2), (5, 2)):
        _, _, rep = equienergetic_pair(n, "kron-skew", m=m)
        out.append(_true(f"kron-skew base C{n}, m={m}: E = {2 * n * m}", rep.verified, rep.energies))
    try:
        equienergetic_pair(3, "kron-skew", m=3)
        rejected = False
    except GraphError:
        rejected = True
    out.append(_true("kron-skew rejects C3 with m=3 (|Im z| > 1/sqrt(2))", rejected))
    a = direct_sum([build_path(3, [1, 1]), build_path(2, [1])])
    b = build_path(5, [1, -1, 1, -1])
    out.append(_true("two different acyclic graphs on 5 vertices are cospectral", is_cospectral(a, b)))
    return out


SECTIONS: dict[str, Callable[[], list[Check]]] = {
    "2": section_2,
    "3": section_3,
    "4": section_4,
    "5": section_5,
    "6": section_6,
}


def run_section(section: str) -> list[tuple[str, list[Check]]]:
    if section == "all":
        keys = list(SECTIONS)
    elif section in SECTIONS:
        keys = [section]
    else:
        raise GraphError(f"unknown section {section!r}; expected one of {sorted(SECTIONS)} or 'all'")
    return [(k, SECTIONS[k]()) for k in keys]


def format_table(results: list[tuple[str, list[Check]]]) -> str:
    lines = []
    for key, checks in results:
        lines.append(f"== section {key} ==")
        width = max(len(c.name) for c in checks)
        for c in checks:
            tol = "exact" if c.tol is None else f"{c.tol:.0e}"
            status = "PASS" if c.passed else "FAIL"
            lines.append(f"{status}  {c.name:<{width}}  expected={_plain(c.expected)}  got={_plain(c.got)}  tol={tol}")
    return "\n".join(lines) + "\n"
