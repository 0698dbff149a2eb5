"""Classification of zero-energy signed digraphs."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from ..charpoly import charpoly, has_cycle
from ..graph import SignedDigraph
from ..polynomial import IntPolynomial, imaginary_axis_parts, primitive_part
from ..rootfinding import integer_poly_roots

__all__ = ["ZeroEnergyTag", "ZeroEnergyClass", "zero_energy_class", "spectrum_on_imaginary_axis"]


class ZeroEnergyTag(str, Enum):
    ACYCLIC = "Acyclic"
    SKEW_SPECTRUM = "SkewSpectrum"
    TYPE_BALANCED = "TypeBalanced"
    NONZERO = "NonZero"


@dataclass(frozen=True)
class ZeroEnergyClass:
    tag: ZeroEnergyTag
    detail: str = ""

    @property
    def zero_energy(self) -> bool:
        return self.tag is not ZeroEnergyTag.NONZERO

    def to_json(self) -> dict:
        return {"tag": self.tag.value, "detail": self.detail}


def _star_polynomial(n: int) -> IntPolynomial:
    # x^(n-2) (x^2 + n - 1)
    return IntPolynomial((0,) * (n - 2) + (n - 1, 0, 1))


def spectrum_on_imaginary_axis(p: IntPolynomial) -> bool:
    """True when every eigenvalue is purely imaginary (zero included).

    With zero roots removed, this holds iff ``q(iy) = c r(y)`` for a real
    polynomial ``r`` with only real roots.  Proportionality of the real and
    imaginary parts is checked exactly; real-rootedness of ``r`` numerically.
    """
    q = list(p.coeffs[p.trailing_zeros():])
    if len(q) == 1:
        return True
    re, im = imaginary_axis_parts(q)
    if re and im:
        if len(re) != len(im):
            return False
        # re * im_lead == im * re_lead as exact integer polynomials
        if any(a * im[-1] != b * re[-1] for a, b in zip(re, im)):
            return False
        r = re
    else:
        r = re or im
    roots, _ = integer_poly_roots(primitive_part(r))
    return all(z.imag == 0 for z, _ in roots)


def zero_energy_class(graph: SignedDigraph) -> ZeroEnergyClass:
    """Tag a graph by the reason its energy vanishes, or ``NonZero``.

    ``SkewSpectrum`` covers a skew-symmetric adjacency matrix, the spectrum
    ``{0^(n-2), +-i sqrt(n-1)}``, and more generally any spectrum on the
    imaginary axis that is not nilpotent (for example a skew digon with a
    pendant arc).
    """
    if not has_cycle(graph):
        return ZeroEnergyClass(ZeroEnergyTag.ACYCLIC, "no directed cycles")
    p = charpoly(graph)
    if p == IntPolynomial.monomial(graph.n):
        return ZeroEnergyClass(ZeroEnergyTag.TYPE_BALANCED, "nilpotent: signed linear subdigraph counts cancel")
    if graph.is_skew_symmetric():
        return ZeroEnergyClass(ZeroEnergyTag.SKEW_SPECTRUM, "skew-symmetric adjacency")
    if graph.n >= 2 and p == _star_polynomial(graph.n):
        return ZeroEnergyClass(ZeroEnergyTag.SKEW_SPECTRUM, "spectrum {0^(n-2), +-i sqrt(n-1)}")
    if spectrum_on_imaginary_axis(p):
        return ZeroEnergyClass(ZeroEnergyTag.SKEW_SPECTRUM, "purely imaginary spectrum")
    return ZeroEnergyClass(ZeroEnergyTag.NONZERO, "")
