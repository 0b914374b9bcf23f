"""Extremal Eulerian families and a seeded random Eulerian source."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Digraph, GraphError


@dataclass(frozen=True)
class BlowupSpec:
    base: Digraph
    delta: int

    def __post_init__(self):
        if self.delta < 1:
            raise GraphError(f"blowup factor must be >= 1, got {self.delta}")


def cayley_circulant(n: int, t: int) -> Digraph:
    """Vertices ``0..n-1`` with arcs ``(i, i+j mod n)`` for ``1 <= j <= t``.

    For ``t < n/2`` the graph has no 2-cycle; its minimum feedback arc set
    has exactly ``t(t+1)/2`` arcs and its girth is ``ceil(n/t)``.
    """
    if not 1 <= t < n:
        raise GraphError(f"circulant needs 1 <= t < n, got n={n}, t={t}")
    return Digraph(n, ((i, (i + j) % n) for i in range(n) for j in range(1, t + 1)))


def complete_symmetric(n: int) -> Digraph:
    return Digraph(n, ((u, v) for u in range(n) for v in range(n) if u != v))


def directed_cycle(n: int) -> Digraph:
    if n < 2:
        raise GraphError("a directed cycle needs at least 2 vertices")
    return Digraph(n, ((i, (i + 1) % n) for i in range(n)))


def hst_layout(s: int, t: int) -> tuple[list[list[int]], list[list[int]]]:
    """Vertex ids of the gadget's groups: ``(U_1..U_s, V_1..V_t)``, each of size s.

    The U groups come first, then the V layers, consecutive ids within a group.
    """
    us = [[i * s + k for k in range(s)] for i in range(s)]
    base = s * s
    vs = [[base + j * s + k for k in range(s)] for j in range(t)]
    return us, vs


def gadget_hst(s: int, t: int) -> Digraph:
    """The gadget ``H(s, t)``: ``(s+t)s`` vertices and ``s^2 (t+1)`` arcs.

    Every vertex of ``U_i`` sends one arc to the i'th vertex of ``V_1`` and
    receives one from the i'th vertex of ``V_t``; consecutive V layers are
    joined by complete bipartite arcs.  So each U vertex has degree 1 and
    every cycle passes through one.
    """
    if s < 1 or t < 1:
        raise GraphError(f"gadget needs s, t >= 1, got s={s}, t={t}")
    us, vs = hst_layout(s, t)
    arcs = []
    for j in range(t - 1):
        arcs.extend((a, b) for a in vs[j] for b in vs[j + 1])
    for i, group in enumerate(us):
        for u in group:
            arcs.append((u, vs[0][i]))
            arcs.append((vs[-1][i], u))
    return Digraph((s + t) * s, arcs)


def blowup(spec: BlowupSpec) -> Digraph:
    """Replace each vertex by ``delta`` independent copies (copy c of i is
    ``i*delta + c``) and each arc by a complete bipartite bundle."""
    d = spec.delta
    arcs = [
        (i * d + a, j * d + b)
        for i, j in spec.base.sorted_arcs()
        for a in range(d)
        for b in range(d)
    ]
    return Digraph(spec.base.n * d, arcs)


def dfs_counterexample(t: int) -> tuple[Digraph, dict[int, str]]:
    """Eulerian graph on ``6t^2 + 1`` vertices with a depth-4 DFS tree.

    Layout: ``r = 0``; level ``V_k`` (k = 1..2t) holds ids
    ``1 + (k-1)t .. k t``; then for level vertex ``v`` the pair
    ``v_in = 2t^2 + 2(v-1) + 1`` and ``v_out = v_in + 1``.

    Iteration j (1..t) threads t vertex-disjoint paths
    ``r -> V_j -> V_{j+1} -> ... -> V_{2t-j+1} -> r``, using the matching
    ``p -> (p + j - 1) mod t`` between consecutive levels, so matchings of
    different iterations never share an arc.  Each level vertex then gets
    the 4-cycle ``r -> v_in -> v -> v_out -> r``.

    Labels map each id to ``"r"``, ``"V<k>:<p>"``, ``"in:<v>"`` or ``"out:<v>"``.
    """
    if t < 1:
        raise GraphError(f"t must be >= 1, got {t}")
    r = 0

    def level(k, p):  # k in 1..2t, p in 0..t-1
        return 1 + (k - 1) * t + p

    n_core = 2 * t * t + 1
    arcs = []
    for j in range(1, t + 1):
        shift = j - 1
        arcs.extend((r, level(j, p)) for p in range(t))
        for k in range(j, 2 * t - j + 1):
            arcs.extend((level(k, p), level(k + 1, (p + shift) % t)) for p in range(t))
        arcs.extend((level(2 * t - j + 1, p), r) for p in range(t))

    labels = {r: "r"}
    for k in range(1, 2 * t + 1):
        for p in range(t):
            v = level(k, p)
            v_in = n_core + 2 * (v - 1)
            v_out = v_in + 1
            arcs += [(r, v_in), (v_in, v), (v, v_out), (v_out, r)]
            labels[v] = f"V{k}:{p}"
            labels[v_in] = f"in:{v}"
            labels[v_out] = f"out:{v}"
    return Digraph(6 * t * t + 1, arcs), labels


def random_eulerian(n: int, target_m: int, seed: int, max_rejections: int = 200) -> Digraph:
    """Superpose random simple cycles whose arcs are all new.

    Stops at ``target_m`` arcs or after ``max_rejections`` colliding
    candidates in a row, so the result may have fewer arcs than asked.
    Deterministic for a given seed (numpy PCG64).
    """
    if n < 2:
        raise GraphError("need at least 2 vertices for a cycle")
    if target_m > n * (n - 1):
        raise GraphError(f"target_m={target_m} exceeds n(n-1)={n * (n - 1)}")
    rng = np.random.default_rng(seed)
    arcs: set[tuple[int, int]] = set()
    misses = 0
    while target_m - len(arcs) >= 2 and misses < max_rejections:
        k = int(rng.integers(2, min(n, target_m - len(arcs)) + 1))
        cyc = [int(x) for x in rng.choice(n, size=k, replace=False)]
        new = [(cyc[i], cyc[(i + 1) % k]) for i in range(k)]
        if any(a in arcs for a in new):
            misses += 1
            continue
        misses = 0
        arcs.update(new)
    return Digraph(n, arcs)
