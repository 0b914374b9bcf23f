# %% [markdown]
# # A dense Eulerian digraph with a shallow DFS tree
#
# Depth-first search on an Eulerian digraph can stay shallow even when the
# average degree grows like the square root of `n`. A suitable
# neighbour priority keeps every root-to-leaf path at four vertices.

# %%
from euler_extremal import dfs_counterexample, dfs_tree, prop9_priority

# %%
for t in (2, 3, 4):
    g, labels = dfs_counterexample(t)
    tree = dfs_tree(g, 0, prop9_priority(g, labels))
    plain = dfs_tree(g, 0)
    print(t, g.n, g.m, round(g.m / g.n, 2), tree.depth, plain.depth)
