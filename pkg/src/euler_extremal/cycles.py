"""Short cycles, long cycles, dense Eulerian subgraphs and ordered DFS.

Every extraction routine is deterministic: ties go to the lowest vertex id,
then to discovery order.
"""

from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import Mapping, Sequence

from .graph import Arc, Digraph, GraphError, is_eulerian
from .reports import BoundReport


class NotEulerian(GraphError):
    pass


class BoundViolation(RuntimeError):
    """A proven bound failed on a concrete graph.  Always an implementation bug."""


@dataclass(frozen=True)
class Cycle:
    vertices: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        if len(self.vertices) < 2:
            raise GraphError("a cycle has at least 2 vertices")
        if len(set(self.vertices)) != len(self.vertices):
            raise GraphError(f"repeated vertex in cycle {self.vertices}")

    @property
    def length(self) -> int:
        return len(self.vertices)

    def arcs(self) -> list[Arc]:
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def __len__(self):
        return len(self.vertices)

    def __contains__(self, v):
        return v in self.vertices


def is_cycle_of(g: Digraph, cycle: Cycle) -> bool:
    return all(g.has_arc(u, v) for u, v in cycle.arcs())


@dataclass(frozen=True)
class CycleCollection:
    cycles: tuple[Cycle, ...]
    arc_disjoint: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "cycles", tuple(self.cycles))
        seen: set[Arc] = set()
        disjoint = True
        for c in self.cycles:
            for a in c.arcs():
                if a in seen:
                    disjoint = False
                seen.add(a)
        object.__setattr__(self, "arc_disjoint", disjoint)

    def __len__(self):
        return len(self.cycles)

    def __iter__(self):
        return iter(self.cycles)

    def arcs(self) -> list[Arc]:
        return [a for c in self.cycles for a in c.arcs()]

    def union(self, n: int) -> Digraph:
        return Digraph(n, set(self.arcs()))


def _require_eulerian(g: Digraph) -> None:
    if not is_eulerian(g):
        raise NotEulerian("graph is not Eulerian (some vertex has in-degree != out-degree)")


# -- girth -----------------------------------------------------------------

def _shortest_cycle(n: int, out: Sequence[Sequence[int]]) -> list[int] | None:
    best: list[int] | None = None
    for s in range(n):
        if not out[s]:
            continue
        # only a strictly shorter cycle can replace the current best
        limit = len(best) if best is not None else n + 1
        parent: dict[int, int | None] = {s: None}
        dist = {s: 0}
        queue = deque([s])
        closer = None
        while queue and closer is None:
            u = queue.popleft()
            if dist[u] + 1 >= limit:
                break
            for w in out[u]:
                if w == s:
                    closer = u
                    break
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
        if closer is None:
            continue
        path = []
        x: int | None = closer
        while x is not None:
            path.append(x)
            x = parent[x]
        path.reverse()
        best = path
        if len(best) == 2:
            break
    return best


def girth(g: Digraph) -> tuple[int, Cycle] | None:
    """Length of a shortest directed cycle and one such cycle.

    One BFS per source ``s``; the first arc back into ``s`` closes the
    shortest cycle through ``s``.  The witness starts at the smallest source
    achieving the minimum.  ``None`` for an acyclic graph.
    """
    path = _shortest_cycle(g.n, g.out_adj)
    if path is None:
        return None
    return len(path), Cycle(path)


def girth_bound_check(g: Digraph) -> BoundReport:
    """Compare the girth against ``6 n^2 / m``."""
    _require_eulerian(g)
    if g.m < 1:
        raise GraphError("girth bound needs at least one arc")
    start = time.perf_counter_ns()
    length, cyc = girth(g)
    elapsed = Fraction(time.perf_counter_ns() - start, 1_000_000)
    return BoundReport.judge("girth", length, "<=", Fraction(6 * g.n * g.n, g.m),
                             witness=cyc.vertices, timing_ms=elapsed, check="cor3")


# -- short-cycle peeling and the dense Eulerian subgraph ----------------------

def peel_short_cycles(g: Digraph) -> tuple[CycleCollection, Digraph]:
    """Strip shortest cycles while at least half of the arcs remain.

    Each cycle taken has length at most ``12 n^2 / m``, so at least
    ``m^2 / (24 n^2)`` arc-disjoint cycles are collected.
    """
    _require_eulerian(g)
    n, m = g.n, g.m
    if m < 2:
        raise GraphError("peeling needs at least 2 arcs")
    out = [set(a) for a in g.out_adj]
    left = m
    taken = []
    while 2 * left >= m:
        path = _shortest_cycle(n, [sorted(a) for a in out])
        if path is None:
            raise BoundViolation("Eulerian remainder with arcs but no cycle")
        if len(path) * m > 12 * n * n:
            raise BoundViolation(
                f"shortest cycle has length {len(path)} > 12n^2/m = {Fraction(12 * n * n, m)}")
        cyc = Cycle(path)
        for u, v in cyc.arcs():
            out[u].remove(v)
        left -= len(path)
        taken.append(cyc)
    residual = Digraph(n, ((u, v) for u in range(n) for v in out[u]))
    return CycleCollection(taken), residual


def min_degree_eulerian_subgraph(
    g: Digraph, peeled: CycleCollection | None = None
) -> tuple[Digraph, CycleCollection]:
    """Eulerian subgraph whose non-isolated vertices all have out-degree
    at least ``ceil(t/n)``, where ``t`` is the number of peeled cycles.

    Starting from the union of the peeled cycles, any vertex lying on fewer
    than ``ceil(t/n)`` surviving cycles is removed together with those
    cycles (lowest id first).  At most ``t - 1`` cycles can go, so the
    result is never empty.
    """
    if peeled is None:
        peeled, _ = peel_short_cycles(g)
    n = g.n
    t = len(peeled)
    need = -(-t // n)
    alive = list(peeled.cycles)
    through: list[set[int]] = [set() for _ in range(n)]
    for k, c in enumerate(alive):
        for v in c.vertices:
            through[v].add(k)
    dead: set[int] = set()
    while True:
        weak = next((v for v in range(n) if 0 < len(through[v]) < need), None)
        if weak is None:
            break
        for k in sorted(through[weak]):
            dead.add(k)
            for v in alive[k].vertices:
                through[v].discard(k)
    kept = CycleCollection(c for k, c in enumerate(alive) if k not in dead)
    if not kept.cycles:
        raise BoundViolation("pruning removed every cycle")
    return kept.union(n), kept


# -- long cycles ------------------------------------------------------------

def _prune_sinks(g: Digraph) -> list[set[int]]:
    """Out-adjacency after repeatedly deleting vertices of out-degree 0."""
    out = [set(a) for a in g.out_adj]
    ins = [set(a) for a in g.in_adj]
    stack = [v for v in range(g.n) if not out[v] and ins[v]]
    while stack:
        v = stack.pop()
        for u in list(ins[v]):
            out[u].discard(v)
            if not out[u]:
                stack.append(u)
        ins[v].clear()
    return out


def maximal_path_cycle(g: Digraph) -> Cycle | None:
    """Cycle closed from the tail of a maximal greedy path.

    Sinks are stripped first (they lie on no cycle).  The path starts at
    the lowest-id remaining vertex and always steps to the lowest-id
    out-neighbour not yet on it.  Once every out-neighbour of the tail is
    on the path, the earliest of them closes a cycle of length at least
    ``outdeg(tail) + 1``.
    """
    out = _prune_sinks(g)
    start = next((v for v in range(g.n) if out[v]), None)
    if start is None:
        return None
    path = [start]
    on_path = {start: 0}
    while True:
        tail = path[-1]
        step = min((w for w in out[tail] if w not in on_path), default=None)
        if step is None:
            break
        on_path[step] = len(path)
        path.append(step)
    first = min(on_path[w] for w in out[path[-1]])
    return Cycle(path[first:])


def cycles_through_vertex(g: Digraph, v: int) -> CycleCollection:
    """``outdeg(v)`` arc-disjoint cycles through ``v`` in an Eulerian graph.

    Each cycle starts on a fresh out-arc of ``v`` and follows unused arcs
    (lowest head first).  Because the unused arcs stay balanced except at
    ``v`` and the walk's tail, the walk can only stop at ``v``.  When it
    revisits one of its own vertices, the closed loop is cut out and set
    aside; those arcs go back into the pool once the cycle through ``v`` closes.
    """
    _require_eulerian(g)
    if not g.out_adj[v]:
        raise GraphError(f"vertex {v} is isolated")
    pool = [set(a) for a in g.out_adj]
    found = []
    for first in g.out_adj[v]:
        if first not in pool[v]:
            continue
        pool[v].remove(first)
        path = [v]
        index = {v: 0}
        aside: list[Arc] = []
        x = first
        while x != v:
            if x in index:
                cut = index[x]
                loop = path[cut:] + [x]
                aside.extend(zip(loop, loop[1:]))
                for w in path[cut + 1:]:
                    del index[w]
                del path[cut + 1:]
            else:
                index[x] = len(path)
                path.append(x)
            y = min(pool[x])
            pool[x].remove(y)
            x = y
        found.append(Cycle(path))
        for a, b in aside:
            pool[a].add(b)
    return CycleCollection(found)


def long_cycle(g: Digraph) -> Cycle:
    """A cycle of length at least ``1 + floor(sqrt(m/n))``.

    The threshold ``L`` is fixed from the input's ``n`` and ``m``.  While
    some non-isolated vertex has out-degree below ``L``, take the lowest-id
    one, pull ``outdeg(v)`` arc-disjoint cycles through it, and either
    return one of length ``> L`` or delete those cycles (which isolates
    ``v``).  Once every remaining vertex has out-degree ``>= L`` the
    maximal-path cycle is long enough.
    """
    _require_eulerian(g)
    if g.m < 2:
        raise GraphError("need at least 2 arcs")
    target = isqrt(g.m // g.n)
    cur = g
    while True:
        if cur.m == 0:
            raise BoundViolation("ran out of arcs before finding a long cycle")
        low = next((v for v in range(cur.n) if 0 < cur.out_degree(v) < target), None)
        if low is None:
            cyc = maximal_path_cycle(cur)
            if cyc is None or cyc.length < target + 1:
                raise BoundViolation("maximal path cycle shorter than guaranteed")
            return cyc
        coll = cycles_through_vertex(cur, low)
        longest = max(coll.cycles, key=len)
        if longest.length >= target + 1:
            return longest
        gone = set(coll.arcs())
        cur = Digraph(cur.n, (a for a in cur.arcs if a not in gone))


def long_cycle_combined(g: Digraph) -> Cycle:
    """The longer of :func:`long_cycle` and a maximal-path cycle inside the
    dense Eulerian subgraph; at least ``1 + max(m^2/(24n^3), floor(sqrt(m/n)))``."""
    a = long_cycle(g)
    h, _ = min_degree_eulerian_subgraph(g)
    b = maximal_path_cycle(h)
    return b if b is not None and b.length > a.length else a


def long_cycle_guarantee(n: int, m: int) -> Fraction:
    return 1 + max(Fraction(m * m, 24 * n ** 3), Fraction(isqrt(m // n)))


# -- depth-first search -----------------------------------------------------

@dataclass(frozen=True)
class DfsTree:
    root: int
    parent: dict[int, int | None]
    order: tuple[int, ...]
    depth: int
    depths: dict[int, int]
    steps_checked: int

    def tree_arcs(self) -> list[Arc]:
        return sorted((p, v) for v, p in self.parent.items() if p is not None)


def dfs_tree(
    g: Digraph,
    root: int,
    priority: Mapping[int, Sequence[int]] | None = None,
) -> DfsTree:
    """Depth-first search that explores out-neighbours in ``priority`` order.

    ``priority[v]`` lists ``v``'s out-neighbours, most preferred first;
    vertices missing from it use ascending id.  After ``root``'s tree is
    done the search restarts at the lowest unvisited id.  ``depth`` counts
    vertices on the longest root-to-leaf path of ``root``'s tree;
    ``depths`` holds the same per restart root.

    Whenever a vertex is finished the search confirms that none of its
    out-neighbours is still unvisited.  Finishing vertices is the only way
    an arc from finished to unvisited could appear, so this check covers
    every step.
    """
    if not 0 <= root < g.n:
        raise GraphError(f"root {root} not in graph")
    prio = {}
    for v in range(g.n):
        if priority is not None and v in priority:
            seq = tuple(priority[v])
            if sorted(seq) != list(g.out_adj[v]):
                raise GraphError(f"priority for {v} is not an ordering of its out-neighbours")
            prio[v] = seq
        else:
            prio[v] = g.out_adj[v]

    UNSEEN, OPEN, DONE = 0, 1, 2
    state = [UNSEEN] * g.n
    parent: dict[int, int | None] = {}
    level = [0] * g.n
    order: list[int] = []
    depths: dict[int, int] = {}
    checks = 0

    starts = [root] + [v for v in range(g.n) if v != root]
    for s in starts:
        if state[s] != UNSEEN:
            continue
        state[s] = OPEN
        parent[s] = None
        level[s] = 1
        order.append(s)
        deepest = 1
        stack = [(s, 0)]
        while stack:
            v, i = stack[-1]
            nbrs = prio[v]
            while i < len(nbrs) and state[nbrs[i]] != UNSEEN:
                i += 1
            if i < len(nbrs):
                w = nbrs[i]
                stack[-1] = (v, i + 1)
                state[w] = OPEN
                parent[w] = v
                level[w] = level[v] + 1
                deepest = max(deepest, level[w])
                order.append(w)
                stack.append((w, 0))
            else:
                stack.pop()
                if any(state[w] == UNSEEN for w in g.out_adj[v]):
                    raise BoundViolation(f"finished vertex {v} still points at an unvisited vertex")
                state[v] = DONE
                checks += 1
        depths[s] = deepest
    return DfsTree(root, parent, tuple(order), depths[root], depths, checks)


def prop9_priority(g: Digraph, labels: Mapping[int, str]) -> dict[int, list[int]]:
    """Exploration order under which the counterexample's DFS tree has depth 4.

    From ``r``: the in-copies of ``V_2t`` first, then of ``V_{2t-1}``, and so
    on down to ``V_1``, with the remaining arcs after them.  From a level
    vertex ``v``: its out-copy first.  Processing the levels from the top
    means each level vertex's other out-neighbours are already visited when
    it is reached.
    """
    by_label = {lab: v for v, lab in labels.items()}
    root = by_label["r"]
    levels: dict[int, list[int]] = {}
    for v, lab in labels.items():
        if lab.startswith("V"):
            k, p = lab[1:].split(":")
            levels.setdefault(int(k), []).append((int(p), v))
    pri: dict[int, list[int]] = {}
    first = []
    for k in sorted(levels, reverse=True):
        for _, v in sorted(levels[k]):
            first.append(by_label[f"in:{v}"])
    taken = set(first)
    rest = [w for w in g.out_adj[root] if w not in taken]
    pri[root] = first + rest
    for k in levels:
        for _, v in levels[k]:
            out_copy = by_label[f"out:{v}"]
            pri[v] = [out_copy] + [w for w in g.out_adj[v] if w != out_copy]
    return pri
