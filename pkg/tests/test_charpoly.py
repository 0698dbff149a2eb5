import itertools
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import numpy_charpoly, sidigraphs
from sidigraph import IntPolynomial, SignedDigraph
from sidigraph.charpoly import (
    CycleLengthError,
    EnumerationCapError,
    charpoly,
    charpoly_enumerate,
    charpoly_trace,
    charpoly_uniform_cycle_length,
    cycle_lengths,
    cycle_vertex_sets,
    iter_linear_subdigraphs,
    iter_simple_cycles,
    linear_type_census,
    power_traces,
)
from sidigraph.graph import (
    build_cycle,
    build_k2_double,
    build_path,
    build_pln,
    build_skew_symmetric,
    cyclic_part,
    direct_sum,
    strong_components,
    unsigned,
)
from sidigraph.polynomial import (
    imaginary_axis_parts,
    poly_divmod,
    poly_gcd,
    poly_mul,
    squarefree_decomposition,
)

SHARED_DIGONS = SignedDigraph(3, ((0, 1, 1), (1, 0, 1), (1, 2, 1), (2, 1, -1)))


def leibniz_charpoly(graph):
    """det(xI - A) by summing over all permutations; constant term first."""
    n = graph.n
    a = graph.adjacency()
    total = [0] * (n + 1)
    for perm in itertools.permutations(range(n)):
        # sign of the permutation by counting inversions
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = [(-1) ** inv]
        for i, j in enumerate(perm):
            factor = [-int(a[i, j]), 1] if i == j else [-int(a[i, j])]
            term = poly_mul(term, factor)
        for k, c in enumerate(term):
            total[k] += c
    return total


class TestPolynomialHelpers:
    def test_monic_required(self):
        with pytest.raises(ValueError):
            IntPolynomial((1, 2))

    def test_str(self):
        assert str(IntPolynomial((0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1))) == "x^10 + x^7"
        assert str(IntPolynomial((1, 0, -2, 0, 1))) == "x^4 - 2x^2 + 1"
        assert str(IntPolynomial.monomial(3)) == "x^3"

    def test_char_coefficients_round_trip(self):
        p = IntPolynomial.from_char_coefficients([1, 0, 4, 0])
        assert p.coeffs == (0, 4, 0, 1)
        assert p.char_coefficients() == [1, 0, 4, 0]
        assert p.c(2) == 4 and p.trailing_zeros() == 1

    def test_json(self):
        p = IntPolynomial((1, 0, 0, 0, 1))
        assert p.to_json() == [1, 0, 0, 0, 1]
        assert IntPolynomial.from_json(p.dumps()) == p
        assert IntPolynomial.from_json([2**70, 1]).coeffs[0] == 2**70

    def test_divmod_and_gcd(self):
        p = poly_mul([1, 1], [-1, 1])  # x^2 - 1
        q, r = poly_divmod(p, [1, 1])
        assert [int(c) for c in q] == [-1, 1] and not any(r)
        assert poly_gcd(p, [1, 1]) == [1, 1]
        assert poly_gcd([1, 0, 1], [-1, 1]) == [1]

    def test_squarefree(self):
        # x^2 (x - 1)^3 (x^2 + 1)
        p = poly_mul(poly_mul([0, 0, 1], poly_mul([-1, 1], poly_mul([-1, 1], [-1, 1]))), [1, 0, 1])
        parts = {m: f for f, m in squarefree_decomposition(p)}
        assert parts[2] == [0, 1]
        assert parts[3] == [-1, 1]
        assert parts[1] == [1, 0, 1]

    @given(st.lists(st.integers(-3, 3), min_size=1, max_size=4), st.integers(1, 3))
    def test_squarefree_reassembles(self, roots, power):
        p = [1]
        for r in roots:
            for _ in range(power):
                p = poly_mul(p, [-r, 1])
        rebuilt = [1]
        for f, m in squarefree_decomposition(p):
            for _ in range(m):
                rebuilt = poly_mul(rebuilt, f)
        assert rebuilt == p

    def test_imaginary_axis_parts(self):
        # p(x) = x^2 + 1: p(iy) = 1 - y^2, purely real
        re, im = imaginary_axis_parts([1, 0, 1])
        assert re == [1, 0, -1] and not any(im)


class TestCycles:
    def test_simple_cycles_of_pln(self):
        cycles = list(iter_simple_cycles(build_pln(6, 4, -1)))
        assert cycles == [((0, 1, 2, 3), -1)]

    def test_cycle_vertex_sets_counts_orientations(self):
        # complete digraph on 3 vertices: two directed triangles on {0,1,2}
        g = SignedDigraph(3, tuple((i, j, 1) for i in range(3) for j in range(3) if i != j))
        assert cycle_vertex_sets(g)[0b111] == (2, 0)
        assert cycle_lengths(g) == {2, 3}

    @given(sidigraphs(max_n=6))
    def test_subset_dp_matches_backtracking(self, g):
        expected = {}
        for cyc, sign in iter_simple_cycles(g):
            mask = sum(1 << v for v in cyc)
            pos, neg = expected.get(mask, (0, 0))
            expected[mask] = (pos + (sign > 0), neg + (sign < 0))
        assert cycle_vertex_sets(g) == expected


class TestEnumerationRoute:
    def test_pln_ten(self):
        assert str(charpoly_enumerate(build_pln(10, 3, -1))) == "x^10 + x^7"

    @pytest.mark.parametrize("n", [1, 2, 5, 8])
    def test_acyclic(self, n):
        g = build_path(n, [(-1) ** i for i in range(n - 1)]) if n > 1 else SignedDigraph(1)
        assert charpoly_enumerate(g) == IntPolynomial.monomial(n)

    def test_shared_vertex_digons_cancel(self):
        assert str(charpoly_enumerate(SHARED_DIGONS)) == "x^3"

    def test_cap(self):
        with pytest.raises(EnumerationCapError):
            charpoly_enumerate(build_cycle(13, 1))
        with pytest.raises(EnumerationCapError):
            charpoly_enumerate(build_cycle(5, 1), cap=4)
        assert str(charpoly_enumerate(build_cycle(13, 1), cap=13)) == "x^13 - 1"

    @given(sidigraphs(max_n=6))
    def test_against_leibniz(self, g):
        assert charpoly_enumerate(g).coeffs == tuple(leibniz_charpoly(g))

    @given(sidigraphs(max_n=6))
    def test_against_brute_force_linear_subdigraphs(self, g):
        c = [1] + [0] * g.n
        for linear in iter_linear_subdigraphs(g):
            order = sum(len(cyc) for cyc in linear)
            sign = 1
            for cyc in linear:
                for k in range(len(cyc)):
                    sign *= g.sign(cyc[k], cyc[(k + 1) % len(cyc)])
            c[order] += (-1) ** len(linear) * sign
        assert charpoly_enumerate(g).char_coefficients() == c


class TestTraceRoute:
    def test_negative_c4(self):
        assert str(charpoly_trace(build_cycle(4, -1))) == "x^4 + 1"

    def test_skew_star(self):
        assert str(charpoly_trace(build_skew_symmetric(5))) == "x^5 + 4x^3"

    def test_power_traces_exact(self):
        a = build_cycle(4, -1).adjacency()
        assert power_traces(a, 8) == [0, 0, 0, -4, 0, 0, 0, 4]

    def test_large_order(self):
        # negative 60-cycle: x^60 + 1; traces stay exact
        assert charpoly_trace(build_cycle(60, -1)).coeffs == (1,) + (0,) * 59 + (1,)

    def test_traces_beyond_int64(self):
        # complete digraph on 25 vertices: (x - 24)(x + 1)^24; tr(A^25) is far beyond int64
        n = 25
        g = SignedDigraph(n, tuple((i, j, 1) for i in range(n) for j in range(n) if i != j))
        expected = [1]
        for f in [[-24, 1]] + [[1, 1]] * 24:
            expected = poly_mul(expected, f)
        assert charpoly_trace(g).coeffs == tuple(expected)
        assert power_traces(g.adjacency(), 25)[-1] == 24**25 - 24
        assert 24**25 > 2**63

    @given(sidigraphs(max_n=8))
    def test_matches_enumeration(self, g):
        assert charpoly_trace(g) == charpoly_enumerate(g)

    @given(sidigraphs(max_n=7))
    def test_matches_numpy(self, g):
        assert list(charpoly_trace(g).coeffs) == numpy_charpoly(g)

    def test_default_is_trace(self):
        g = build_cycle(5, -1)
        assert charpoly(g) == charpoly_trace(g)


class TestStructure:
    @given(sidigraphs(max_n=6))
    def test_component_reduction(self, g):
        parts = strong_components(g)
        prod = IntPolynomial.monomial(0)
        k = 0
        for p in parts:
            if p.num_arcs:
                prod = prod * charpoly(p)
            else:
                k += p.n
        assert charpoly(g) == IntPolynomial.monomial(k) * prod
        assert charpoly(cyclic_part(g)) == charpoly(g)

    def test_direct_sum(self):
        g = direct_sum([build_cycle(2, 1), build_cycle(2, -1)])
        assert str(charpoly(g)) == "x^4 - 1"


class TestCensus:
    def test_negative_digon(self):
        census = linear_type_census(build_cycle(2, -1))
        assert (census.type_a[1], census.type_b[1], census.type_c[1], census.type_d[1]) == (1, 0, 0, 0)
        assert census.coefficient(2) == 1

    def test_positive_digon(self):
        census = linear_type_census(build_cycle(2, 1))
        assert census.type_c[1] == 1 and census.coefficient(2) == -1

    def test_acyclic_all_zero(self):
        census = linear_type_census(build_path(4, [1, -1, 1]))
        assert not any(census.type_a + census.type_b + census.type_c + census.type_d)
        assert census.is_type_balanced()

    def test_shared_digons_type_balanced(self):
        census = linear_type_census(SHARED_DIGONS)
        assert census.type_a[1] == census.type_c[1] == 1
        assert census.is_type_balanced()

    def test_two_digons_even_component_type(self):
        census = linear_type_census(build_k2_double(2, 1))
        # the union of both digons has two positive cycles
        assert census.type_b[3] == 1

    @given(sidigraphs(max_n=6))
    def test_consistency(self, g):
        census = linear_type_census(g)
        c = charpoly_enumerate(g).char_coefficients()
        for i in range(1, g.n + 1):
            assert census.coefficient(i) == c[i]
            assert min(census.type_a[i - 1], census.type_b[i - 1], census.type_c[i - 1], census.type_d[i - 1]) >= 0


class TestUniformCycleLength:
    def test_negative_c4(self):
        p, cstar = charpoly_uniform_cycle_length(build_cycle(4, -1), 4)
        assert str(p) == "x^4 + 1" and cstar == [-1]

    def test_two_positive_digons(self):
        p, cstar = charpoly_uniform_cycle_length(build_k2_double(2, 1), 2)
        assert str(p) == "x^4 - 2x^2 + 1" and cstar == [2, 1]

    def test_shared_vertex_digons(self):
        p, cstar = charpoly_uniform_cycle_length(SHARED_DIGONS, 2)
        assert str(p) == "x^3" and cstar == [0]

    def test_wrong_length(self):
        with pytest.raises(CycleLengthError):
            charpoly_uniform_cycle_length(build_pln(6, 3, -1), 2)

    @given(st.integers(2, 4), st.lists(st.sampled_from((1, -1)), min_size=1, max_size=3))
    def test_matches_general(self, h, signs):
        g = direct_sum([build_cycle(h, s) for s in signs])
        p, _ = charpoly_uniform_cycle_length(g, h)
        assert p == charpoly(g)


class TestBalanceCospectrality:
    @given(sidigraphs(max_n=5))
    def test_balanced_implies_cospectral(self, g):
        from sidigraph.analysis import is_cycle_balanced

        if is_cycle_balanced(g).balanced:
            assert charpoly(g) == charpoly(unsigned(g))


def test_numpy_oracle_sanity():
    # the rounding oracle is itself exact at these sizes
    g = build_cycle(5, -1)
    assert numpy_charpoly(g) == [1, 0, 0, 0, 0, 1]
    assert math.isclose(np.poly(g.adjacency().astype(float))[-1], 1.0)
