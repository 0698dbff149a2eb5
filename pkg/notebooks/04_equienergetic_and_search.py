"""
Equienergetic pairs and graphs with energy n
============================================

Pairs of graphs with equal order and energy but different spectra, and a
seeded search for graphs whose energy equals their order.
"""

# %%
from sidigraph import spectrum
from sidigraph.analysis import equienergetic_pair
from sidigraph.corpus import CorpusConfig, run_corpus

# %%
for kind, orders in [("odd-cycles", [3, 5, 7]), ("cycle-k2", [2, 3, 4, 6]), ("pln-k2", [5, 6, 7])]:
    for n in orders:
        a, b, rep = equienergetic_pair(n, kind)
        print(f"{kind:10s} n={n}: order {rep.order}, energies {rep.energies[0]:.9f} / {rep.energies[1]:.9f}, "
              f"cospectral {rep.cospectral}, balanced {rep.balanced}, verified {rep.verified}")

# %% [markdown]
# The pendant-path pair differs in how often 1 is an eigenvalue.

# %%
a, b, _ = equienergetic_pair(7, "pln-k2")
print(spectrum(a).multiplicity(1.0), spectrum(b).multiplicity(1.0))

# %% [markdown]
# Skew-star Kronecker construction against a union of positive digons.

# %%
for n in (3, 4, 5):
    _, _, rep = equienergetic_pair(n, "kron-skew", m=2)
    print(n, rep.order, rep.energies, rep.verified)

# %% [markdown]
# Search for energy equal to the order.  Disjoint digons hit it for every
# even order; random graphs do so rarely.

# %%
for family in ("k2-doubles", "symmetric", "random"):
    summary = run_corpus(CorpusConfig(seed=42, count=200, n_min=2, n_max=8, family=family), ["bounds"],
                         search="energy-equals-n")
    hits = summary["search"]["hits"]
    print(f"{family:10s} violations {summary['total_violations']}, hits {len(hits)}, "
          f"orders {sorted({h['n'] for h in hits})}")
