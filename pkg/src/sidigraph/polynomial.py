"""Exact integer polynomials.

Coefficients are stored constant term first.  Helper functions operating on
plain coefficient lists (also constant term first) cover the rational
arithmetic needed for gcds and square-free decomposition.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

__all__ = [
    "IntPolynomial",
    "poly_trim",
    "poly_mul",
    "poly_derivative",
    "poly_divmod",
    "poly_gcd",
    "primitive_part",
    "squarefree_decomposition",
    "imaginary_axis_parts",
]


def poly_trim(p: Sequence) -> list:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_mul(p: Sequence, q: Sequence) -> list:
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def poly_derivative(p: Sequence) -> list:
    return [k * p[k] for k in range(1, len(p))]


def poly_divmod(p: Sequence, q: Sequence) -> tuple[list, list]:
    """Quotient and remainder over the rationals."""
    p = [Fraction(c) for c in poly_trim(p)]
    q = [Fraction(c) for c in poly_trim(q)]
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    if len(p) < len(q):
        return [], p
    quot = [Fraction(0)] * (len(p) - len(q) + 1)
    lead = q[-1]
    for k in range(len(p) - len(q), -1, -1):
        coef = p[k + len(q) - 1] / lead
        quot[k] = coef
        if coef:
            for j, c in enumerate(q):
                p[k + j] -= coef * c
    return poly_trim(quot), poly_trim(p[: len(q) - 1])


def primitive_part(p: Sequence) -> list[int]:
    """Scale a rational polynomial to coprime integers with positive leading coefficient."""
    p = [Fraction(c) for c in poly_trim(p)]
    if not p:
        return []
    den = 1
    for c in p:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in p]
    g = 0
    for c in ints:
        g = gcd(g, c)
    ints = [c // g for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return ints


def poly_gcd(p: Sequence, q: Sequence) -> list[int]:
    """Primitive integer gcd (positive leading coefficient); ``[1]`` for coprime inputs."""
    a, b = primitive_part(p), primitive_part(q)
    while b:
        _, r = poly_divmod(a, b)
        a, b = b, primitive_part(r)
    return a if a else [1]


def squarefree_decomposition(p: Sequence[int]) -> list[tuple[list[int], int]]:
    """Yun's algorithm: ``p = prod f_i ** i`` with square-free, pairwise coprime ``f_i``.

    Returns ``(f_i, i)`` for every non-constant factor, each ``f_i`` primitive.
    """
    p = primitive_part(p)
    if len(p) <= 1:
        return []
    dp = poly_derivative(p)
    a = poly_gcd(p, dp)
    # b, c, d stay exact rationals: rescaling them independently breaks d = c - b'
    b = poly_divmod(p, a)[0]
    c = poly_divmod(dp, a)[0]
    d = poly_trim([x - y for x, y in _zip_pad(c, poly_derivative(b))])
    out = []
    i = 1
    while len(b) > 1:
        f = poly_gcd(b, d)
        if len(f) > 1:
            out.append((f, i))
        b_next = poly_divmod(b, f)[0]
        c = poly_divmod(d, f)[0]
        d = poly_trim([x - y for x, y in _zip_pad(c, poly_derivative(b_next))])
        b = b_next
        i += 1
    return out


def _zip_pad(p: Sequence, q: Sequence):
    m = max(len(p), len(q))
    p = list(p) + [0] * (m - len(p))
    q = list(q) + [0] * (m - len(q))
    return zip(p, q)


def imaginary_axis_parts(p: Sequence[int]) -> tuple[list[int], list[int]]:
    """Integer polynomials ``R, I`` in ``y`` with ``p(iy) = R(y) + i I(y)``."""
    re = [0] * len(p)
    im = [0] * len(p)
    for k, c in enumerate(p):
        # i**k cycles 1, i, -1, -i
        r = k % 4
        if r == 0:
            re[k] = c
        elif r == 1:
            im[k] = c
        elif r == 2:
            re[k] = -c
        else:
            im[k] = -c
    return poly_trim(re), poly_trim(im)


@dataclass(frozen=True)
class IntPolynomial:
    """Monic polynomial with arbitrary-precision integer coefficients.

    ``coeffs[k]`` is the coefficient of ``x**k``.  The characteristic
    polynomial convention ``x^n + c_1 x^(n-1) + ... + c_n`` is available via
    :meth:`c`.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(int(c) for c in self.coeffs)
        if not coeffs or coeffs[-1] != 1:
            raise ValueError(f"polynomial must be monic, got {coeffs!r}")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def monomial(cls, n: int) -> IntPolynomial:
        return cls((0,) * n + (1,))

    @classmethod
    def from_char_coefficients(cls, c: Sequence[int]) -> IntPolynomial:
        """Build from ``[1, c_1, ..., c_n]`` (leading coefficient first)."""
        return cls(tuple(reversed([int(x) for x in c])))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def c(self, i: int) -> int:
        """Coefficient of ``x**(n - i)``; ``c(0) == 1``."""
        return self.coeffs[self.degree - i]

    def char_coefficients(self) -> list[int]:
        return [self.c(i) for i in range(self.degree + 1)]

    def trailing_zeros(self) -> int:
        k = 0
        while self.coeffs[k] == 0:
            k += 1
        return k

    def __mul__(self, other: IntPolynomial) -> IntPolynomial:
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return IntPolynomial(tuple(poly_mul(self.coeffs, other.coeffs)))

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def to_json(self) -> list[int]:
        """Integer coefficients, constant term first."""
        return list(self.coeffs)

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, data: str | list) -> IntPolynomial:
        if isinstance(data, str):
            data = json.loads(data)
        if not all(isinstance(c, int) and not isinstance(c, bool) for c in data):
            raise ValueError("coefficients must be integers")
        return cls(tuple(data))

    def __str__(self) -> str:
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{mono}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out
