"""Closed forms, balance, zero-energy classification, walks, bounds and equienergetic families."""

from .balance import BalanceWitness, TheoremViolation, is_cycle_balanced, neps_balance_check
from .closed_form import closed_form_report, cycle_energy_closed_form, cycle_energy_sum
from .equienergetic import KINDS, EquienergeticReport, equienergetic_pair
from .quasi_order import (
    QuasiOrderMembershipError,
    QuasiOrderResult,
    Relation,
    cstar_vector,
    quasi_order_compare,
)
from .walks import (
    arc_bound_check,
    brute_force_walks,
    closed_walk_balance,
    is_k2_union,
    mcclelland_bound,
    signed_walk_matrix,
)
from .zero_energy import ZeroEnergyClass, ZeroEnergyTag, zero_energy_class

__all__ = [
    "BalanceWitness",
    "TheoremViolation",
    "is_cycle_balanced",
    "neps_balance_check",
    "closed_form_report",
    "cycle_energy_closed_form",
    "cycle_energy_sum",
    "KINDS",
    "EquienergeticReport",
    "equienergetic_pair",
    "QuasiOrderMembershipError",
    "QuasiOrderResult",
    "Relation",
    "cstar_vector",
    "quasi_order_compare",
    "arc_bound_check",
    "brute_force_walks",
    "closed_walk_balance",
    "is_k2_union",
    "mcclelland_bound",
    "signed_walk_matrix",
    "ZeroEnergyClass",
    "ZeroEnergyTag",
    "zero_energy_class",
]
