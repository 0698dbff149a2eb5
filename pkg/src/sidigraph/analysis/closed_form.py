"""Closed-form energies of positive and negative directed cycles."""

from __future__ import annotations

import math

from ..graph import GraphError
from ..spectra import EnergyReport

__all__ = ["cycle_energy_closed_form", "cycle_energy_sum", "closed_form_report"]


def cycle_energy_closed_form(n: int, sign: int) -> float:
    """Energy of the directed ``n``-cycle with cycle sign ``sign``.

    ======== ============== ==============
    n mod 4  positive       negative
    ======== ============== ==============
    0        2 cot(pi/n)    2 csc(pi/n)
    odd      csc(pi/2n)     csc(pi/2n)
    2        2 csc(pi/n)    2 cot(pi/n)
    ======== ============== ==============
    """
    if n < 2:
        raise GraphError(f"cycle needs n >= 2, got {n}")
    if sign not in (1, -1):
        raise GraphError(f"sign must be +1 or -1, got {sign}")
    if n % 2:
        return 1.0 / math.sin(math.pi / (2 * n))
    cot = 2.0 / math.tan(math.pi / n)
    csc = 2.0 / math.sin(math.pi / n)
    if n % 4 == 0:
        return cot if sign > 0 else csc
    return csc if sign > 0 else cot


def cycle_energy_sum(n: int, sign: int) -> float:
    """Direct sum of ``|cos|`` over the eigenvalue arguments of the cycle."""
    if sign > 0:
        return math.fsum(abs(math.cos(2 * j * math.pi / n)) for j in range(n))
    return math.fsum(abs(math.cos((2 * j + 1) * math.pi / n)) for j in range(n))


def closed_form_report(n: int, sign: int) -> EnergyReport:
    value = cycle_energy_closed_form(n, sign)
    return EnergyReport(value, "closed-form", {"direct_sum_difference": abs(value - cycle_energy_sum(n, sign))})
