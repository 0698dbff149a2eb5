"""Spectra and energy of signed digraphs.

Energy is the sum of ``|Re z|`` over the eigenvalues.  It is computed from
the exact integer characteristic polynomial, and independently from two
integral representations over the imaginary axis.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np
from scipy import integrate

from .charpoly import charpoly
from .graph import GraphError, NepsBasis, SignedDigraph
from .polynomial import IntPolynomial, imaginary_axis_parts, poly_gcd
from .rootfinding import integer_poly_roots

__all__ = [
    "CLUSTER_TOL",
    "QUADRATURE_TOL",
    "Spectrum",
    "EnergyReport",
    "QuadratureError",
    "ImaginaryAxisError",
    "roots",
    "spectrum",
    "energy",
    "energy_value",
    "coulson_energy",
    "coulson_log_energy",
    "imaginary_axis_eigenvalues",
    "is_cospectral",
    "match_multisets",
    "neps_spectrum",
]

CLUSTER_TOL = 1e-8
QUADRATURE_TOL = 1e-4


class QuadratureError(ArithmeticError):
    pass


class ImaginaryAxisError(GraphError):
    """The log-form integrand is undefined for eigenvalues on the imaginary axis."""


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues with multiplicities."""

    values: tuple[tuple[complex, int], ...]
    tol: float = CLUSTER_TOL
    residual: float = 0.0

    @property
    def degree(self) -> int:
        return sum(m for _, m in self.values)

    def expanded(self) -> np.ndarray:
        """One entry per eigenvalue, multiplicities repeated."""
        out = [z for z, m in self.values for _ in range(m)]
        return np.array(out, dtype=complex)

    def multiplicity(self, z: complex, tol: float | None = None) -> int:
        tol = self.tol if tol is None else tol
        return sum(m for w, m in self.values if abs(w - z) <= tol)

    def power_sum(self, m: int) -> complex:
        return complex(sum(mult * z**m for z, mult in self.values))

    def energy(self) -> float:
        return math.fsum(mult * abs(z.real) for z, mult in self.values)

    def to_json(self) -> list[dict]:
        return [{"re": z.real, "im": z.imag, "multiplicity": m} for z, m in self.values]

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def _cluster(values: list[tuple[complex, int]], tol: float) -> tuple[tuple[complex, int], ...]:
    clusters: list[list] = []
    for z, m in values:
        for cl in clusters:
            if abs(cl[0] - z) <= tol:
                cl[0] = (cl[0] * cl[1] + z * m) / (cl[1] + m)
                cl[1] += m
                break
        else:
            clusters.append([z, m])
    out = [(complex(z), int(m)) for z, m in clusters]
    out.sort(key=lambda t: (round(t[0].real, 9), round(t[0].imag, 9)))
    return tuple(out)


def roots(p: IntPolynomial, tol: float = CLUSTER_TOL) -> Spectrum:
    """All roots of ``p``; roots closer than ``tol`` are merged."""
    if p.degree < 1:
        raise ValueError("polynomial must have degree >= 1")
    values, residual = integer_poly_roots(list(p.coeffs))
    return Spectrum(_cluster(values, tol), tol, residual)


def spectrum(graph: SignedDigraph, tol: float = CLUSTER_TOL) -> Spectrum:
    return roots(charpoly(graph), tol)


@dataclass(frozen=True)
class EnergyReport:
    energy: float
    method: str
    residuals: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"energy": self.energy, "method": self.method, "residuals": dict(self.residuals)}


def energy(graph: SignedDigraph) -> EnergyReport:
    spec = spectrum(graph)
    return EnergyReport(spec.energy(), "algebraic", {"root_residual_max": spec.residual})


def energy_value(graph: SignedDigraph) -> float:
    return energy(graph).energy


def is_cospectral(first: SignedDigraph, second: SignedDigraph) -> bool:
    """Exact comparison of characteristic polynomials."""
    if first.n != second.n:
        raise GraphError(f"order mismatch: {first.n} vs {second.n}")
    return charpoly(first) == charpoly(second)


def match_multisets(left, right) -> float:
    """Largest distance under the optimal pairing of two equal-size complex multisets."""
    from scipy.optimize import linear_sum_assignment

    a = np.asarray(left, dtype=complex)
    b = np.asarray(right, dtype=complex)
    if a.shape != b.shape:
        raise ValueError("multisets differ in size")
    if a.size == 0:
        return 0.0
    cost = np.abs(a[:, None] - b[None, :])
    rows, cols = linear_sum_assignment(cost)
    return float(cost[rows, cols].max())


def neps_spectrum(factors: Sequence[SignedDigraph], basis: NepsBasis) -> np.ndarray:
    """Eigenvalues of a NEPS product composed from the factor spectra.

    For every choice of one eigenvalue ``z_i`` per factor the product has the
    eigenvalue ``sum over beta of prod z_i ** beta_i``.
    """
    if basis.m != len(factors):
        raise GraphError(f"basis arity {basis.m} does not match {len(factors)} factors")
    factor_values = [spectrum(f).expanded() for f in factors]
    out = []
    for combo in itertools.product(*factor_values):
        total = 0j
        for beta in basis:
            term = 1 + 0j
            for z, b in zip(combo, beta):
                if b:
                    term *= z
            total += term
        out.append(total)
    return np.array(out, dtype=complex)


# ----------------------------------------------------------------------------
# Integral representations


def _strip_zero_roots(p: IntPolynomial) -> list[int]:
    k = p.trailing_zeros()
    return list(p.coeffs[k:])


def imaginary_axis_eigenvalues(p: IntPolynomial) -> list[float]:
    """Real ``y != 0`` with ``p(iy) = 0``, i.e. nonzero eigenvalues on the imaginary axis.

    Detection is exact: such ``y`` are the common real roots of the real and
    imaginary parts of ``p(iy)``.  Only their locations are numeric.
    """
    q = _strip_zero_roots(p)
    re, im = imaginary_axis_parts(q)
    g = poly_gcd(re, im) if im else (re if re else [1])
    if len(g) <= 1:
        return []
    values, _ = integer_poly_roots(g)
    return sorted({round(z.real, 12) for z, _ in values if abs(z.imag) <= 1e-7 * (1 + abs(z)) and z != 0})


def _coulson_integrand(p: IntPolynomial) -> Callable[[float], float]:
    """Real part of ``n - iy p'(iy)/p(iy)`` as a function of real ``y``.

    Zero roots contribute nothing and are split off first.  For ``|y| > 1`` the
    reversed polynomial is used so large arguments never overflow.
    """
    q = _strip_zero_roots(p)
    m = len(q) - 1
    if m == 0:
        return lambda y: 0.0
    desc = np.array([float(c) for c in reversed(q)])
    ddesc = np.polyder(desc)
    rev = desc[::-1].copy()  # coefficients of w**m q(1/w), descending in w
    drev = np.polyder(rev)

    def f(y: float) -> float:
        if abs(y) <= 1.0:
            x = 1j * y
            val = np.polyval(desc, x)
            return float((m - x * np.polyval(ddesc, x) / val).real)
        w = 1.0 / (1j * y)
        val = np.polyval(rev, w)
        return float((w * np.polyval(drev, w) / val).real)

    return f


def _log_integrand(p: IntPolynomial) -> Callable[[float], float]:
    """``log|x**n p(i/x)| / x**2`` evaluated stably for small and large ``x``."""
    q = list(p.coeffs)
    n = len(q) - 1
    # x**n p(i/x) = sum_k q_k i**k x**(n-k); descending in x this is q_0, q_1 i, ...
    powers = [1, 1j, -1, -1j]
    asc_in_x = [q[n - j] * powers[(n - j) % 4] for j in range(n + 1)]
    desc = np.array(asc_in_x[::-1], dtype=complex)
    lead_first = np.array(asc_in_x, dtype=complex)  # descending in 1/x
    # near x = 0: log|P(x)/P(0)| = Re(a1) x + Re(a2 - a1^2/2) x^2 + Re(a3 - a1 a2 + a1^3/3) x^3 + ...
    a = [c / asc_in_x[0] for c in asc_in_x[1:4]] + [0, 0, 0]
    a1, a2, a3 = a[0], a[1], a[2]
    k1 = (a1).real
    k2 = (a2 - a1 * a1 / 2).real
    k3 = (a3 - a1 * a2 + a1**3 / 3).real

    def f(x: float) -> float:
        if abs(x) < 1e-4:
            # k1 vanishes for real characteristic polynomials
            return (k1 / x if x else 0.0) + k2 + k3 * x
        if abs(x) <= 1.0:
            val = abs(np.polyval(desc, x))
            return float(math.log(val) / (x * x)) if val > 0 else -math.inf
        t = 1.0 / x
        val = abs(np.polyval(lead_first, t))
        return float((n * math.log(abs(x)) + math.log(val)) / (x * x)) if val > 0 else -math.inf

    return f


def _theta_quad(f: Callable[[float], float], a: float, b: float, points) -> tuple[float, float]:
    """Integrate ``f(tan t) sec(t)**2`` over ``[a, b]`` in the angle variable."""

    def g(t: float) -> float:
        c = math.cos(t)
        if c <= 0.0:
            return 0.0
        return f(math.tan(t)) / (c * c)

    inner = sorted(p for p in points if a < p < b)
    value, err = integrate.quad(g, a, b, points=inner or None, limit=400, epsabs=1e-11, epsrel=1e-11)
    return value, err


def _excised_integral(f, poles: list[float], eps: float, marks: list[float]) -> tuple[float, float]:
    """Integral of ``f`` over the real line with ``(p - eps, p + eps)`` removed around each pole."""
    half = math.pi / 2
    cuts = []
    for p in poles:
        cuts.append((math.atan(p - eps), math.atan(p + eps)))
    edges = [-half]
    for lo, hi in cuts:
        edges.extend([lo, hi])
    edges.append(half)
    total = 0.0
    err = 0.0
    for a, b in zip(edges[::2], edges[1::2]):
        v, e = _theta_quad(f, a, b, marks)
        total += v
        err += e
    return total, err


def coulson_energy(graph: SignedDigraph, levels: int = 3) -> EnergyReport:
    """Energy as the principal value ``(1/pi) PV int (n - ix p'(ix)/p(ix)) dx``.

    Eigenvalues on the imaginary axis are simple poles of the integrand on
    the real line.  Symmetric intervals of half-width ``eps`` are cut out
    around each pole; the excised integral has an expansion in odd powers of
    ``eps``, which Richardson extrapolation over ``eps, eps/2, eps/4``
    removes.
    """
    p = charpoly(graph)
    spec = roots(p)
    f = _coulson_integrand(p)
    poles = imaginary_axis_eigenvalues(p)
    marks = sorted({math.atan(z.imag) for z, _ in spec.values})
    if not poles:
        value, err = _excised_integral(f, [], 0.0, marks)
        extrap_err = 0.0
    else:
        # keep the cut well inside the region where the pole dominates
        others = [z for z, _ in spec.values if z != 0]
        dist = [abs(z - 1j * y) for y in poles for z in others if abs(z - 1j * y) > 1e-6]
        eps = 0.05 * min(dist + [1.0])
        table = []
        err = 0.0
        for lvl in range(levels):
            v, e = _excised_integral(f, poles, eps / 2**lvl, marks)
            table.append(v)
            err += e
        # eliminate eps, eps^3, ... successively
        row = table
        extrap_err = math.inf
        for j in range(1, levels):
            factor = 2 ** (2 * j - 1)
            nxt = [(factor * row[i + 1] - row[i]) / (factor - 1) for i in range(len(row) - 1)]
            extrap_err = abs(nxt[-1] - row[-1])
            row = nxt
        value = row[-1]
    result = value / math.pi
    estimate = (err + extrap_err) / math.pi
    algebraic = spec.energy()
    report = EnergyReport(
        max(result, 0.0),
        "coulson",
        {
            "raw_integral": result,
            "integral_error_estimate": estimate,
            "poles": poles,
            "algebraic_energy": algebraic,
            "root_residual_max": spec.residual,
        },
    )
    if estimate > QUADRATURE_TOL:
        raise QuadratureError(f"Coulson quadrature error estimate {estimate:.3g} exceeds {QUADRATURE_TOL}")
    return report


def coulson_log_energy(graph: SignedDigraph) -> EnergyReport:
    """Energy as ``(1/pi) int log|x**n p(i/x)| / x**2 dx``."""
    p = charpoly(graph)
    poles = imaginary_axis_eigenvalues(p)
    if poles:
        raise ImaginaryAxisError(f"eigenvalues on the imaginary axis at {poles}")
    spec = roots(p)
    f = _log_integrand(p)
    # log|1 - w x| is singular where x = 1/w for real x; mark those points
    marks = sorted({math.atan(1.0 / z.imag) for z, _ in spec.values if abs(z.imag) > 1e-12})
    marks.append(0.0)
    value, err = _excised_integral(f, [], 0.0, marks)
    estimate = err / math.pi
    report = EnergyReport(
        max(value / math.pi, 0.0),
        "coulson-log",
        {
            "raw_integral": value / math.pi,
            "integral_error_estimate": estimate,
            "algebraic_energy": spec.energy(),
            "root_residual_max": spec.residual,
        },
    )
    if estimate > QUADRATURE_TOL:
        raise QuadratureError(f"log-form quadrature error estimate {estimate:.3g} exceeds {QUADRATURE_TOL}")
    return report
