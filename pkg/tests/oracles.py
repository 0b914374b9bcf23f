"""Brute-force references, kept independent of the package's algorithms."""

from itertools import permutations

import numpy as np


def brute_beta(g):
    """Fewest backward arcs over all n! vertex orders."""
    if g.m == 0:
        return 0
    perms = np.array(list(permutations(range(g.n))), dtype=np.int8)
    pos = np.argsort(perms, axis=1)
    src = np.array([u for u, _ in g.arcs])
    dst = np.array([v for _, v in g.arcs])
    back = (pos[:, src] > pos[:, dst]).sum(axis=1)
    return int(back.min())


def has_cycle(n, arcs):
    out = {v: [] for v in range(n)}
    for u, v in arcs:
        out[u].append(v)
    colour = [0] * n

    def visit(u):
        colour[u] = 1
        for w in out[u]:
            if colour[w] == 1 or (colour[w] == 0 and visit(w)):
                return True
        colour[u] = 2
        return False

    return any(colour[v] == 0 and visit(v) for v in range(n))


def simple_cycles(g):
    """Every simple cycle once, rooted at its smallest vertex."""
    found = []

    def extend(start, path, on):
        for w in g.out_adj[path[-1]]:
            if w == start:
                found.append(tuple(path))
            elif w > start and w not in on:
                on.add(w)
                path.append(w)
                extend(start, path, on)
                path.pop()
                on.discard(w)

    for s in range(g.n):
        extend(s, [s], {s})
    return found


def brute_girth(g):
    lengths = [len(c) for c in simple_cycles(g)]
    return min(lengths) if lengths else None


def direct_cut(arcs, subset):
    inside = set(subset)
    fwd = sum(1 for u, v in arcs if u in inside and v not in inside)
    bwd = sum(1 for u, v in arcs if v in inside and u not in inside)
    return fwd, bwd
