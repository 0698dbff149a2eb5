"""
NEPS products, spectra and balance
==================================

A NEPS product is fixed by a set of binary tuples; each tuple says which
factors move along an arc.  Its eigenvalues are composed from the factor
eigenvalues, and its balance is inherited from balanced factors.
"""

# %%
import itertools

import numpy as np

from sidigraph import NepsBasis, build_cycle, build_k2_double, neps, spectrum
from sidigraph.analysis import is_cycle_balanced, neps_balance_check
from sidigraph.graph import kronecker_product, negated
from sidigraph.spectra import match_multisets, neps_spectrum

# %%
a, b = build_cycle(3, -1), build_cycle(2, 1)
for tuples in [((1, 0), (0, 1)), ((1, 1),), ((1, 0), (0, 1), (1, 1))]:
    basis = NepsBasis(2, tuples)
    g = neps([a, b], basis)
    d = match_multisets(spectrum(g).expanded(), neps_spectrum([a, b], basis))
    print(f"basis {tuples}: {g.n} vertices, {g.num_arcs} arcs, spectrum mismatch {d:.1e}")

# %% [markdown]
# Every basis on three factors, with random small factors.

# %%
rng = np.random.default_rng(1)
from sidigraph.corpus import random_sidigraph

tuples = [t for t in itertools.product((0, 1), repeat=3) if any(t)]
worst = 0.0
tested = 0
for r in range(1, len(tuples) + 1):
    for pick in itertools.combinations(tuples, r):
        if not all(any(t[i] for t in pick) for i in range(3)):
            continue
        factors = [random_sidigraph(rng, 2, 0.7, 0.5) for _ in range(3)]
        basis = NepsBasis(3, pick)
        worst = max(worst, match_multisets(spectrum(neps(factors, basis)).expanded(), neps_spectrum(factors, basis)))
        tested += 1
print(f"{tested} bases, worst mismatch {worst:.1e}")

# %% [markdown]
# Balance: an unbalanced factor can still give a balanced Kronecker product.

# %%
factor = negated(build_cycle(3, 1))
digon = build_k2_double(1, -1)
print("factor:", is_cycle_balanced(factor).to_json())
print("product:", is_cycle_balanced(kronecker_product(factor, digon)).balanced)
print("Cartesian with the same factors:", neps_balance_check([factor, digon], NepsBasis.cartesian(2)))
