# %% [markdown]
# # Short cycles
#
# A dense Eulerian digraph has a cycle of length at most `6n^2/m`.
# Circulants show the order of magnitude is right.

# %%
from euler_extremal import cayley_circulant, girth, girth_bound_check, random_eulerian

# %%
for n, t in [(10, 2), (20, 3), (30, 5)]:
    length, cycle = girth(cayley_circulant(n, t))
    print(n, t, length, cycle.vertices)

# %%
g = random_eulerian(25, 150, seed=3)
print(girth_bound_check(g).to_json())
