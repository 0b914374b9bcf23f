# %% [markdown]
# # An Eulerian subgraph with large minimum degree
#
# Peel short cycles off greedily. Then discard vertices that lie on too few
# of them. The cycles that remain form an Eulerian subgraph in which every
# non-isolated vertex has out-degree at least `m^2/24n^3`.

# %%
from euler_extremal import (
    BlowupSpec, blowup, gadget_hst, min_degree_eulerian_subgraph,
    min_positive_out_degree, peel_short_cycles, random_eulerian,
)

# %%
g = random_eulerian(30, 300, seed=1)
peeled, residual = peel_short_cycles(g)
h, kept = min_degree_eulerian_subgraph(g, peeled)
print(len(peeled.cycles), len(kept.cycles), h.m, min_positive_out_degree(h))
print(g.m ** 2 / (24 * g.n ** 3))

# %% [markdown]
# Blowups of the gadget graph keep the minimum degree small while the
# graph stays dense.

# %%
for delta in (1, 2, 3):
    b = blowup(BlowupSpec(gadget_hst(2, 4), delta))
    h, _ = min_degree_eulerian_subgraph(b)
    print(delta, b.n, b.m, min_positive_out_degree(h)[0])
