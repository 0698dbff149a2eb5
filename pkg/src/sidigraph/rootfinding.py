"""Roots of integer polynomials.

Zero roots are split off exactly from the trailing zero coefficients and the
remaining factor is decomposed into square-free parts over the integers, so
every multiplicity is exact.  Each square-free part is solved with
Aberth-Ehrlich simultaneous iteration followed by a Newton polish.
"""

from __future__ import annotations

import math

import numpy as np

from .polynomial import squarefree_decomposition

__all__ = ["RootFindingError", "aberth", "integer_poly_roots", "scaled_residual"]

GOLDEN_ANGLE = math.pi * (3.0 - math.sqrt(5.0))
MAX_ITERATIONS = 500
RESIDUAL_TOL = 1e-10


class RootFindingError(ArithmeticError):
    pass


def _root_radius(coeffs: np.ndarray) -> float:
    """Fujiwara bound on root moduli for a monic polynomial (descending coefficients)."""
    n = len(coeffs) - 1
    terms = [abs(coeffs[k]) ** (1.0 / k) for k in range(1, n + 1) if coeffs[k] != 0]
    if not terms:
        return 1.0
    # the constant term enters with an extra factor 1/2 in Fujiwara's bound
    if coeffs[n] != 0:
        terms[-1] = (abs(coeffs[n]) / 2.0) ** (1.0 / n)
    return 2.0 * max(terms)


def scaled_residual(coeffs: np.ndarray, z: np.ndarray) -> np.ndarray:
    """``|p(z)| / sum |c_k| |z|**k``: the relative backward error of each root."""
    num = np.abs(np.polyval(coeffs, z))
    den = np.polyval(np.abs(coeffs), np.abs(z))
    return num / den


def aberth(coeffs, max_iterations: int = MAX_ITERATIONS, tol: float = 4 * np.finfo(float).eps) -> np.ndarray:
    """All roots of a monic polynomial given by descending coefficients.

    Starting points lie on a circle enclosing every root, spaced by the golden
    angle so results are deterministic.
    """
    c = np.asarray(coeffs, dtype=complex)
    c = c / c[0]
    n = len(c) - 1
    if n < 1:
        return np.empty(0, dtype=complex)
    if n == 1:
        return np.array([-c[1]])
    dc = np.polyder(c)
    radius = _root_radius(c)
    k = np.arange(n)
    z = radius * np.exp(1j * (GOLDEN_ANGLE * k + 0.25))
    active = np.ones(n, dtype=bool)
    for _ in range(max_iterations):
        p = np.polyval(c, z)
        dp = np.polyval(dc, z)
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = np.where(p == 0, 0, p / dp)
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, np.inf)
            repulsion = (1.0 / diff).sum(axis=1)
            step = ratio / (1.0 - ratio * repulsion)
        step = np.where(np.isfinite(step), step, 0)
        step[~active] = 0
        # a root is done once its step is negligible or p(z) is at the level of
        # rounding error in evaluating p; the step test alone can stall when
        # large coefficients make that noise exceed the step tolerance
        noise = 4 * n * np.finfo(float).eps * np.polyval(np.abs(c), np.abs(z))
        active &= (np.abs(step) > tol * (1.0 + np.abs(z))) & (np.abs(p) > noise)
        z = z - step
        if not active.any():
            break
    else:
        raise RootFindingError(f"Aberth iteration did not converge in {max_iterations} steps (degree {n})")
    # Newton polish on the simple roots
    for _ in range(2):
        p = np.polyval(c, z)
        dp = np.polyval(dc, z)
        with np.errstate(divide="ignore", invalid="ignore"):
            step = np.where(dp != 0, p / dp, 0)
        z = z - np.where(np.isfinite(step), step, 0)
    return z


def integer_poly_roots(coeffs: list[int]) -> tuple[list[tuple[complex, int]], float]:
    """Roots with multiplicities of an integer polynomial (constant term first).

    Returns ``(roots, max_residual)`` where ``max_residual`` is the largest
    scaled residual over the square-free factors.
    """
    k = 0
    while k < len(coeffs) and coeffs[k] == 0:
        k += 1
    rest = list(coeffs[k:])
    roots: list[tuple[complex, int]] = []
    if k:
        roots.append((0j, k))
    worst = 0.0
    if len(rest) > 1:
        for factor, mult in squarefree_decomposition(rest):
            desc = np.array([float(x) for x in reversed(factor)])
            z = aberth(desc)
            res = scaled_residual(desc / desc[0], z)
            if res.size:
                worst = max(worst, float(res.max()))
            if np.any(res > RESIDUAL_TOL):
                raise RootFindingError(
                    f"root residual {float(res.max()):.3g} exceeds {RESIDUAL_TOL} (factor degree {len(factor) - 1})"
                )
            z = _snap_real(z)
            roots.extend((complex(r), mult) for r in z)
    return roots, worst


def _snap_real(z: np.ndarray) -> np.ndarray:
    """Make conjugate pairs exact and zero the imaginary part of real roots.

    Each root is paired with the nearest unpaired conjugate candidate; a root
    closer to its own conjugate than to any candidate is taken as real.
    """
    z = z.copy()
    n = len(z)
    used = np.zeros(n, dtype=bool)
    order = np.argsort(-np.abs(z.imag))
    for i in order:
        if used[i]:
            continue
        used[i] = True
        if z[i].imag == 0:
            continue
        cand = np.where(~used)[0]
        if cand.size:
            j = cand[np.argmin(np.abs(z[cand] - np.conj(z[i])))]
            gap = abs(z[j] - np.conj(z[i]))
            self_gap = abs(z[i].imag)
            if gap < self_gap:
                used[j] = True
                mid = 0.5 * (z[i] + np.conj(z[j]))
                z[i], z[j] = mid, np.conj(mid)
                continue
        z[i] = z[i].real
    return z
