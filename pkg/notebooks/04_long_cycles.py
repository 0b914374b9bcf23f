# %% [markdown]
# # Long cycles
#
# Two routes to a long cycle. A maximal path closes into a cycle longer
# than the minimum out-degree. Repeatedly routing a cycle through one
# vertex reaches length `1 + floor(sqrt(m/n))`.

# %%
from math import isqrt

from euler_extremal import (
    cayley_circulant, long_cycle, long_cycle_combined, long_cycle_guarantee,
    maximal_path_cycle, random_eulerian,
)

# %%
for g in (cayley_circulant(20, 4), random_eulerian(20, 120, seed=7)):
    print(g.n, g.m, 1 + isqrt(g.m // g.n),
          long_cycle(g).length, maximal_path_cycle(g).length,
          long_cycle_combined(g).length, float(long_cycle_guarantee(g.n, g.m)))
