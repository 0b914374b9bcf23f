"""Simple digraphs and the degree, cut and arc-deletion primitives.

Vertices are the dense integers ``0..n-1``.  Loops and parallel arcs are
rejected; an antiparallel pair ``(u, v), (v, u)`` is a legal 2-cycle.
A :class:`Digraph` never changes after construction, every operation
below returns a new graph.
"""

from __future__ import annotations

from typing import Iterable, Sequence

Arc = tuple[int, int]


class GraphError(ValueError):
    """Malformed graph input (loop, duplicate arc, bad vertex id)."""


class Digraph:
    """A simple directed graph on the vertices ``0..n-1``.

    ``out_adj[v]`` and ``in_adj[v]`` are sorted tuples, so every traversal
    that walks them in stored order visits neighbours by ascending id.
    """

    __slots__ = ("n", "arcs", "out_adj", "in_adj")

    def __init__(self, n: int, arcs: Iterable[Arc]):
        if n < 1:
            raise GraphError(f"vertex count must be positive, got {n}")
        seen: set[Arc] = set()
        outs: list[list[int]] = [[] for _ in range(n)]
        ins: list[list[int]] = [[] for _ in range(n)]
        for u, v in arcs:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"arc ({u}, {v}) has a vertex id outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if (u, v) in seen:
                raise GraphError(f"duplicate arc ({u}, {v})")
            seen.add((u, v))
            outs[u].append(v)
            ins[v].append(u)
        self.n = n
        self.arcs = frozenset(seen)
        self.out_adj = tuple(tuple(sorted(a)) for a in outs)
        self.in_adj = tuple(tuple(sorted(a)) for a in ins)

    @property
    def m(self) -> int:
        return len(self.arcs)

    def out_degree(self, v: int) -> int:
        return len(self.out_adj[v])

    def in_degree(self, v: int) -> int:
        return len(self.in_adj[v])

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    def sorted_arcs(self) -> list[Arc]:
        return sorted(self.arcs)

    def __eq__(self, other):
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self.arcs == other.arcs

    def __hash__(self):
        return hash((self.n, self.arcs))

    def __repr__(self):
        return f"Digraph(n={self.n}, m={self.m})"


def new_digraph(n: int, arcs: Iterable[Arc]) -> Digraph:
    return Digraph(n, arcs)


def is_eulerian(g: Digraph) -> bool:
    """Degree balance at every vertex; connectivity is not required."""
    return all(len(g.out_adj[v]) == len(g.in_adj[v]) for v in range(g.n))


def cut_balance(g: Digraph, subset: Iterable[int]) -> tuple[int, int]:
    """Return ``(forward, backward)``: arcs leaving and entering ``subset``."""
    inside = set(subset)
    forward = backward = 0
    for u, v in g.arcs:
        a, b = u in inside, v in inside
        if a and not b:
            forward += 1
        elif b and not a:
            backward += 1
    return forward, backward


def two_cycles(g: Digraph) -> list[Arc]:
    """The antiparallel pairs of ``g``, each reported once as ``(u, v)`` with ``u < v``."""
    return sorted((u, v) for u, v in g.arcs if u < v and (v, u) in g.arcs)


def remove_two_cycles(g: Digraph) -> tuple[Digraph, int]:
    pairs = two_cycles(g)
    doomed = set(pairs) | {(v, u) for u, v in pairs}
    return Digraph(g.n, (a for a in g.arcs if a not in doomed)), len(pairs)


def delete_arcs(g: Digraph, arcs: Iterable[Arc]) -> Digraph:
    doomed = set()
    for a in arcs:
        a = (int(a[0]), int(a[1]))
        if a not in g.arcs:
            raise GraphError(f"arc {a} is not in the graph")
        doomed.add(a)
    return Digraph(g.n, (a for a in g.arcs if a not in doomed))


def delete_vertex(g: Digraph, v: int) -> Digraph:
    """Remove ``v`` and its arcs; ids above ``v`` shift down by one."""
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} not in graph")
    if g.n == 1:
        raise GraphError("cannot delete the only vertex")

    def shift(x):
        return x - 1 if x > v else x

    return Digraph(g.n - 1, ((shift(a), shift(b)) for a, b in g.arcs if v not in (a, b)))


def compact(g: Digraph) -> tuple[Digraph, list[int]]:
    """Drop isolated vertices.  Returns the graph and ``old_ids[new_id]``.

    A graph with no arcs compacts to a single vertex (the lowest id), since
    a digraph needs at least one vertex.
    """
    keep = [v for v in range(g.n) if g.out_adj[v] or g.in_adj[v]] or [0]
    new_id = {old: i for i, old in enumerate(keep)}
    return Digraph(len(keep), ((new_id[u], new_id[v]) for u, v in g.arcs)), keep


def relabel(g: Digraph, perm: Sequence[int]) -> Digraph:
    """Copy of ``g`` with vertex ``v`` renamed ``perm[v]``."""
    if sorted(perm) != list(range(g.n)):
        raise GraphError("relabelling must be a permutation of the vertex ids")
    return Digraph(g.n, ((perm[u], perm[v]) for u, v in g.arcs))


def min_out_degree(g: Digraph) -> tuple[int, int]:
    """Minimum out-degree over all vertices (isolated ones included), with
    the lowest-id vertex attaining it."""
    best = min(range(g.n), key=lambda v: (len(g.out_adj[v]), v))
    return len(g.out_adj[best]), best


def min_positive_out_degree(g: Digraph) -> tuple[int, int] | None:
    """Like :func:`min_out_degree` but over vertices that touch an arc.

    A non-isolated sink counts (with out-degree 0).  ``None`` for an arcless graph.
    """
    live = [v for v in range(g.n) if g.out_adj[v] or g.in_adj[v]]
    if not live:
        return None
    best = min(live, key=lambda v: (len(g.out_adj[v]), v))
    return len(g.out_adj[best]), best


def is_acyclic(g: Digraph) -> bool:
    indeg = [len(g.in_adj[v]) for v in range(g.n)]
    stack = [v for v in range(g.n) if indeg[v] == 0]
    seen = 0
    while stack:
        u = stack.pop()
        seen += 1
        for w in g.out_adj[u]:
            indeg[w] -= 1
            if indeg[w] == 0:
                stack.append(w)
    return seen == g.n


# -- arc-list text format ---------------------------------------------------

def dumps(g: Digraph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_arcs())
    return "\n".join(lines) + "\n"


def loads(text: str) -> Digraph:
    rows = text.split("\n")
    if rows and rows[-1] == "":
        rows.pop()
    if not rows:
        raise GraphError("empty arc-list input")
    try:
        header = [int(x) for x in rows[0].split()]
        if len(header) != 2:
            raise ValueError
        n, m = header
        arcs = []
        for lineno, row in enumerate(rows[1:], start=2):
            parts = row.split()
            if len(parts) != 2:
                raise GraphError(f"line {lineno}: expected 'u v', got {row!r}")
            arcs.append((int(parts[0]), int(parts[1])))
    except ValueError as exc:
        if isinstance(exc, GraphError):
            raise
        raise GraphError(f"malformed arc-list input: {exc}") from None
    if len(arcs) != m:
        raise GraphError(f"header promises {m} arcs but {len(arcs)} follow")
    return Digraph(n, arcs)


def read_arc_list(path) -> Digraph:
    with open(path, encoding="ascii") as fh:
        return loads(fh.read())


def write_arc_list(g: Digraph, path) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(dumps(g))
