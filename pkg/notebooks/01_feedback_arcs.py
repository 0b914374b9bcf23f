# %% [markdown]
# # Feedback arc sets of Eulerian digraphs
#
# Every Eulerian digraph with `n` vertices and `m` arcs needs at least
# `m^2/2n^2 + m/2n` arcs removed before it becomes acyclic. Circulants
# meet that bound exactly.

# %%
from euler_extremal import (
    VertexOrder, beta_lower_bound, cayley_circulant, exact_beta,
    f_min, order_diagnostics, random_eulerian,
)

# %% [markdown]
# The circulant on 10 vertices where each vertex points at the next 3.

# %%
g = cayley_circulant(10, 3)
res = exact_beta(g)
print(g.n, g.m, res.beta, beta_lower_bound(g.n, g.m), res.witness)

# %% [markdown]
# Random Eulerian graphs sit above the bound, usually by a comfortable margin.

# %%
for seed in range(5):
    h = random_eulerian(10, 40, seed=seed)
    print(seed, h.m, exact_beta(h).beta, float(beta_lower_bound(h.n, h.m)))

# %% [markdown]
# Any single order already gives a certificate. Its short and long arcs
# give the quantities behind the bound.

# %%
d = order_diagnostics(g, VertexOrder.identity(g.n))
print(d.backward_count, d.per_order_bound, d.w_short, d.w_long, d.short_count, d.long_count)
print("f_min(10, 30) =", f_min(10, 30))
