import cmath
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import numpy_eigenvalues, sidigraphs
from sidigraph import IntPolynomial
from sidigraph.graph import (
    NepsBasis,
    build_cycle,
    build_k2_double,
    build_path,
    build_pln,
    build_skew_symmetric,
    build_symmetric_double,
    direct_sum,
    neps,
    unsigned,
)
from sidigraph.rootfinding import RootFindingError, aberth, integer_poly_roots
from sidigraph.spectra import (
    ImaginaryAxisError,
    QuadratureError,
    coulson_energy,
    coulson_log_energy,
    energy,
    energy_value,
    imaginary_axis_eigenvalues,
    is_cospectral,
    match_multisets,
    neps_spectrum,
    roots,
    spectrum,
)

TAU = 1e-8


def _poly(asc):
    return IntPolynomial(tuple(asc))


class TestRoots:
    def test_x4_plus_1(self):
        spec = roots(_poly([1, 0, 0, 0, 1]))
        expected = [cmath.exp(1j * (2 * j + 1) * math.pi / 4) for j in range(4)]
        assert match_multisets(spec.expanded(), expected) < TAU

    def test_monomial_is_deflated(self):
        spec = roots(IntPolynomial.monomial(7))
        assert spec.values == ((0j, 7),)
        assert spec.residual == 0.0

    def test_cube_roots_of_minus_one(self):
        spec = roots(_poly([1, 0, 0, 1]))
        expected = [-1, cmath.exp(1j * math.pi / 3), cmath.exp(-1j * math.pi / 3)]
        assert match_multisets(spec.expanded(), expected) < TAU
        assert spec.multiplicity(-1) == 1

    def test_repeated_roots_exact_multiplicity(self):
        # (x - 1)^3 (x + 2)^2 (x^2 + 1)
        p = [1]
        for f in [[-1, 1]] * 3 + [[2, 1]] * 2 + [[1, 0, 1]]:
            p = np.polynomial.polynomial.polymul(p, f)
        spec = roots(_poly([int(round(c)) for c in p]))
        assert spec.multiplicity(1) == 3 and spec.multiplicity(-2) == 2
        assert spec.multiplicity(1j) == 1 and spec.multiplicity(-1j) == 1
        assert spec.degree == 7

    def test_degree_zero_rejected(self):
        with pytest.raises(ValueError):
            roots(IntPolynomial((1,)))

    def test_nonconvergence_is_reported(self):
        with pytest.raises(RootFindingError):
            aberth([1.0, 0.0, 0.0, 0.0, -1.0], max_iterations=1)

    def test_residual_bound(self):
        values, worst = integer_poly_roots([1] + [0] * 29 + [1])
        assert worst <= 1e-10
        assert sum(m for _, m in values) == 30

    def test_deterministic(self):
        p = _poly([3, -1, 4, 1, -5, 9, 1])
        assert roots(p).values == roots(p).values

    @given(sidigraphs(max_n=7))
    def test_matches_numpy_eigvals(self, g):
        spec = spectrum(g)
        assert spec.degree == g.n
        # defective eigenvalues are ill-conditioned for LAPACK; compare energies loosely
        # and full multisets only when numpy agrees with itself under transpose
        ev = numpy_eigenvalues(g)
        evt = np.linalg.eigvals(g.adjacency().T.astype(float))
        if match_multisets(ev, evt) < 1e-9:
            assert match_multisets(spec.expanded(), ev) < 1e-6

    @given(sidigraphs(max_n=7))
    def test_spectrum_invariants(self, g):
        spec = spectrum(g)
        z = spec.expanded()
        assert abs(z.sum()) < TAU * g.n
        assert match_multisets(z, np.conj(z)) < TAU
        t2 = int(np.trace(g.adjacency() @ g.adjacency()))
        assert abs(spec.power_sum(2) - t2) < 1e-7

    def test_json(self):
        spec = roots(_poly([1, 0, 1]))
        data = spec.to_json()
        assert sorted((d["re"], d["im"], d["multiplicity"]) for d in data) == [(0.0, -1.0, 1), (0.0, 1.0, 1)]


class TestEnergy:
    def test_negative_c4(self):
        rep = energy(build_cycle(4, -1))
        assert rep.method == "algebraic"
        assert abs(rep.energy - 2 * math.sqrt(2)) < 1e-9

    def test_acyclic_zero(self):
        assert energy_value(build_path(6, [1, -1, 1, 1, -1])) == 0.0

    @pytest.mark.parametrize("n", range(2, 9))
    def test_skew_star_zero(self, n):
        assert energy_value(build_skew_symmetric(n)) < 1e-12

    def test_positive_triangle_double(self):
        g = build_symmetric_double([(0, 1, 1), (1, 2, 1), (0, 2, 1)], 3)
        spec = spectrum(g)
        assert spec.multiplicity(2) == 1 and spec.multiplicity(-1) == 2
        assert abs(energy_value(g) - 4) < 1e-9

    def test_negative_double_digons(self):
        g = build_k2_double(3, -1)
        spec = spectrum(g)
        assert spec.multiplicity(1) == 3 and spec.multiplicity(-1) == 3

    @given(sidigraphs(max_n=5), sidigraphs(max_n=5))
    def test_additive_over_direct_sum(self, a, b):
        assert abs(energy_value(direct_sum([a, b])) - energy_value(a) - energy_value(b)) < 1e-9

    @pytest.mark.parametrize("n", [3, 5, 7, 9])
    def test_odd_cycles_opposite_spectra(self, n):
        neg, pos = spectrum(build_cycle(n, -1)).expanded(), spectrum(build_cycle(n, 1)).expanded()
        assert match_multisets(neg, -pos) < TAU

    def test_report_json(self):
        data = energy(build_cycle(3, 1)).to_json()
        assert data["method"] == "algebraic" and "root_residual_max" in data["residuals"]


class TestCospectral:
    def test_balanced_vs_unsigned(self):
        g = build_symmetric_double([(0, 1, -1), (1, 2, -1)], 3)
        assert is_cospectral(g, unsigned(g))

    def test_opposite_triangles(self):
        assert not is_cospectral(build_cycle(3, -1), build_cycle(3, 1))

    def test_acyclic_pair(self):
        a = direct_sum([build_path(3, [1, 1]), build_path(2, [-1])])
        b = build_path(5, [1, -1, 1, -1])
        assert a != b and is_cospectral(a, b)

    def test_order_mismatch(self):
        with pytest.raises(ValueError):
            is_cospectral(build_cycle(3), build_cycle(4))


class TestImaginaryAxis:
    def test_negative_digon_poles(self):
        assert imaginary_axis_eigenvalues(_poly([1, 0, 1])) == [-1.0, 1.0]

    def test_none_for_real_spectrum(self):
        assert imaginary_axis_eigenvalues(_poly([-1, 0, 1])) == []

    def test_zero_is_not_a_pole(self):
        assert imaginary_axis_eigenvalues(IntPolynomial.monomial(3)) == []

    def test_skew_star(self):
        poles = imaginary_axis_eigenvalues(_poly([0, 3, 0, 1]))
        assert np.allclose(poles, [-math.sqrt(3), math.sqrt(3)])


class TestCoulson:
    @pytest.mark.parametrize(
        "graph, value",
        [
            (build_cycle(4, -1), 2 * math.sqrt(2)),
            (build_cycle(3, 1), 2.0),
            (build_cycle(2, -1), 0.0),
            (build_cycle(2, 1), 2.0),
            (build_skew_symmetric(4), 0.0),
            (build_path(3, [1, 1]), 0.0),
        ],
    )
    def test_known_values(self, graph, value):
        rep = coulson_energy(graph)
        assert rep.method == "coulson"
        assert abs(rep.energy - value) < 1e-4
        assert rep.residuals["integral_error_estimate"] <= 1e-4

    def test_pole_case_records_poles(self):
        rep = coulson_energy(build_cycle(2, -1))
        assert rep.residuals["poles"] == [-1.0, 1.0]
        assert rep.energy >= 0

    def test_mixed_poles_and_real_parts(self):
        # negative digon plus a positive triangle: poles at +-1 and nonzero real parts
        g = direct_sum([build_cycle(2, -1), build_cycle(3, 1)])
        assert abs(coulson_energy(g).energy - 2.0) < 1e-4

    @given(sidigraphs(min_n=2, max_n=6))
    def test_agrees_with_algebraic(self, g):
        assert abs(coulson_energy(g).energy - energy_value(g)) < 1e-4

    def test_quadrature_error_type(self):
        assert issubclass(QuadratureError, ArithmeticError)


class TestCoulsonLog:
    def test_negative_c4(self):
        rep = coulson_log_energy(build_cycle(4, -1))
        assert rep.method == "coulson-log"
        assert abs(rep.energy - 2 * math.sqrt(2)) < 1e-4

    def test_positive_digon(self):
        assert abs(coulson_log_energy(build_cycle(2, 1)).energy - 2.0) < 1e-4

    def test_skew_rejected(self):
        with pytest.raises(ImaginaryAxisError):
            coulson_log_energy(build_skew_symmetric(3))

    def test_pln(self):
        assert abs(coulson_log_energy(build_pln(10, 3, -1)).energy - 2.0) < 1e-4

    @given(sidigraphs(min_n=2, max_n=6))
    def test_agrees_with_algebraic(self, g):
        from sidigraph import charpoly

        if imaginary_axis_eigenvalues(charpoly(g)):
            return
        assert abs(coulson_log_energy(g).energy - energy_value(g)) < 1e-4


class TestNepsSpectrum:
    def test_cartesian_pairwise_sums(self):
        a, b = build_cycle(3, -1), build_cycle(2, 1)
        composed = neps_spectrum([a, b], NepsBasis.cartesian(2))
        expected = [x + y for x in spectrum(a).expanded() for y in (1, -1)]
        assert match_multisets(composed, expected) < TAU

    @given(sidigraphs(max_n=3), sidigraphs(max_n=3), st.sampled_from(["cartesian", "kronecker", "strong"]))
    def test_direct_equals_composed(self, a, b, kind):
        basis = {
            "cartesian": NepsBasis.cartesian(2),
            "kronecker": NepsBasis.kronecker(2),
            "strong": NepsBasis(2, ((1, 0), (0, 1), (1, 1))),
        }[kind]
        direct = spectrum(neps([a, b], basis)).expanded()
        assert match_multisets(direct, neps_spectrum([a, b], basis)) < 1e-7


def test_root_finder_large_coefficient_regression():
    # 48-vertex NEPS product whose degree-44 square-free factor has coefficients near 2e12;
    # the iteration once stalled on rounding noise here
    from sidigraph import parse_sidigraph

    factors = [
        parse_sidigraph("3\n0 1 -\n0 2 -\n1 0 -\n1 2 +\n"),
        parse_sidigraph("4\n0 2 -\n0 3 -\n1 0 -\n1 3 -\n2 0 -\n2 1 -\n"),
        parse_sidigraph("4\n0 2 +\n0 3 +\n1 0 +\n1 2 +\n1 3 -\n2 1 +\n3 0 +\n3 2 -\n"),
    ]
    basis = NepsBasis(3, ((0, 1, 0), (0, 1, 1), (1, 0, 0), (1, 0, 1), (1, 1, 0)))
    g = neps(factors, basis)
    spec = spectrum(g)
    assert spec.residual <= 1e-10
    assert match_multisets(spec.expanded(), neps_spectrum(factors, basis)) < 1e-7
