"""
Energy of signed directed cycles
================================

A directed n-cycle has eigenvalues on the unit circle; its sign decides
whether they are the n-th roots of 1 or of -1.  Energy only sees real
parts, so the two signs give different energies depending on n mod 4.
"""

# %%
import numpy as np

from sidigraph import build_cycle, charpoly, energy_value, spectrum
from sidigraph.analysis import cycle_energy_closed_form

# %% [markdown]
# The negative 4-cycle has characteristic polynomial x^4 + 1 and its four
# eigenvalues sit at the odd multiples of pi/4.

# %%
c4 = build_cycle(4, -1)
print(c4)
print("charpoly:", charpoly(c4))
for z, m in spectrum(c4).values:
    print(f"  {z.real:+.6f} {z.imag:+.6f}i  x{m}")
print("energy:", energy_value(c4), " 2*sqrt(2) =", 2 * np.sqrt(2))

# %% [markdown]
# Closed forms against the root finder, both signs, up to n = 50.

# %%
rows = []
for n in range(2, 51):
    for sign in (1, -1):
        closed = cycle_energy_closed_form(n, sign)
        rows.append((n, sign, closed, abs(closed - energy_value(build_cycle(n, sign)))))
print("worst |closed - numeric|:", max(r[3] for r in rows))

print(f"{'n':>3} {'E(+)':>10} {'E(-)':>10}  relation")
for n in range(2, 13):
    pos, neg = cycle_energy_closed_form(n, 1), cycle_energy_closed_form(n, -1)
    rel = "=" if abs(pos - neg) < 1e-12 else ("<" if pos < neg else ">")
    print(f"{n:>3} {pos:10.6f} {neg:10.6f}  E(+) {rel} E(-)")

# %% [markdown]
# The negative cycles grow strictly with n; the positive ones do not (the
# even positive cycles pick up the real eigenvalues +-1).

# %%
neg = np.array([energy_value(build_cycle(n, -1)) for n in range(2, 51)])
pos = np.array([energy_value(build_cycle(n, 1)) for n in range(2, 51)])
print("negative strictly increasing:", bool(np.all(np.diff(neg) > 0)))
print("positive strictly increasing:", bool(np.all(np.diff(pos) > 0)))
