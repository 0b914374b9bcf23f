"""Minimum feedback arc sets through linear orders.

For any vertex order the backward arcs form a feedback arc set, and the
minimum over orders is the minimum feedback arc set size ``beta``.
:func:`exact_beta` finds that minimum with a subset dynamic program;
the rest of the module evaluates the lower bound
``beta >= m^2/(2n^2) + m/(2n)`` for Eulerian digraphs and the per-order
quantities its argument is built from.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

import numpy as np

from .graph import Arc, Digraph, GraphError

DEFAULT_CAP = 20
HARD_CAP = 64
CAP_ENV = "EULER_EXTREMAL_CAP"


class CapExceeded(ValueError):
    """The exact solver was asked for more vertices than allowed."""


def default_cap() -> int:
    raw = os.environ.get(CAP_ENV)
    if raw is None:
        return DEFAULT_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise CapExceeded(f"{CAP_ENV}={raw!r} is not an integer") from None
    return min(cap, HARD_CAP)


class VertexOrder:
    """A linear order of ``0..n-1``; ``seq[i]`` is the i'th vertex."""

    __slots__ = ("seq", "pos")

    def __init__(self, seq: Sequence[int]):
        seq = tuple(int(v) for v in seq)
        if sorted(seq) != list(range(len(seq))):
            raise GraphError(f"not a permutation of 0..{len(seq) - 1}: {seq}")
        pos = [0] * len(seq)
        for i, v in enumerate(seq):
            pos[v] = i
        self.seq = seq
        self.pos = tuple(pos)

    @classmethod
    def identity(cls, n: int) -> "VertexOrder":
        return cls(range(n))

    def position(self, v: int) -> int:
        return self.pos[v]

    def __len__(self):
        return len(self.seq)

    def __eq__(self, other):
        return isinstance(other, VertexOrder) and self.seq == other.seq

    def __hash__(self):
        return hash(self.seq)

    def __repr__(self):
        return f"VertexOrder({list(self.seq)})"


@dataclass(frozen=True)
class FasResult:
    beta: int
    witness: VertexOrder


def _check_order(g: Digraph, order: VertexOrder) -> None:
    if len(order) != g.n:
        raise GraphError(f"order covers {len(order)} vertices, graph has {g.n}")


def backward_arcs(g: Digraph, order: VertexOrder) -> set[Arc]:
    _check_order(g, order)
    pos = order.pos
    return {(u, v) for u, v in g.arcs if pos[u] > pos[v]}


def exact_beta(g: Digraph, cap: int | None = None) -> FasResult:
    """Minimum feedback arc set size by dynamic programming over prefixes.

    ``best[P]`` is the fewest backward arcs among arcs with their head in the
    prefix ``P``.  Putting ``v`` last in ``P`` turns every arc into ``v``
    from outside ``P`` backward, so
    ``best[P] = min_v best[P - v] + |in(v) - P|``.
    Layers of equal ``|P|`` are evaluated as whole numpy arrays.  The
    witness order is read back from the full set, choosing the lowest vertex
    id whenever several vertices can go last.
    """
    if cap is None:
        cap = default_cap()
    cap = min(cap, HARD_CAP)
    n = g.n
    if n > cap:
        raise CapExceeded(f"exact solver cap is {cap} vertices, graph has {n}")

    size = 1 << n
    idx = np.arange(size, dtype=np.int64)
    popcount = np.zeros(size, dtype=np.uint8)
    for b in range(n):
        popcount += ((idx >> b) & 1).astype(np.uint8)
    del idx

    in_mask = [sum(1 << u for u in g.in_adj[v]) for v in range(n)]
    indeg = [len(g.in_adj[v]) for v in range(n)]

    big = np.iinfo(np.int32).max // 2
    best = np.full(size, big, dtype=np.int32)
    best[0] = 0
    layers = [np.flatnonzero(popcount == k) for k in range(n + 1)]
    for k in range(1, n + 1):
        layer = layers[k]
        cand = np.full(layer.shape, big, dtype=np.int32)
        for v in range(n):
            bit = 1 << v
            has = (layer & bit) != 0
            sel = layer[has]
            cost = indeg[v] - popcount[sel & in_mask[v]].astype(np.int32)
            cand[has] = np.minimum(cand[has], best[sel ^ bit] + cost)
        best[layer] = cand

    seq = [0] * n
    prefix = size - 1
    for slot in range(n - 1, -1, -1):
        target = int(best[prefix])
        for v in range(n):
            bit = 1 << v
            if not prefix & bit:
                continue
            cost = indeg[v] - bin(in_mask[v] & prefix).count("1")
            if int(best[prefix ^ bit]) + cost == target:
                seq[slot] = v
                prefix ^= bit
                break
    return FasResult(int(best[size - 1]), VertexOrder(seq))


def beta_lower_bound(n: int, m: int) -> Fraction:
    return Fraction(m * m, 2 * n * n) + Fraction(m, 2 * n)


def f_objective(s: Sequence[int], t: Sequence[int], n: int) -> int:
    """``sum_i C(s_i + 1, 2) + (n - i) t_i`` with 1-based ``i`` (``s[0]`` is ``s_1``)."""
    if len(s) != n or len(t) != n:
        raise ValueError("s and t must both have length n")
    return sum(comb(s[i] + 1, 2) + (n - i - 1) * t[i] for i in range(n))


def _check_feasible(n: int, m: int) -> None:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if not 0 <= m <= n * (n - 1):
        raise ValueError(f"m={m} is outside the feasible range 0..{n * (n - 1)}")


def f_min(n: int, m: int) -> int:
    """Closed-form minimum of :func:`f_objective` subject to
    ``s_i, t_i <= n - i`` and ``sum s + sum t = m``: ``tm - (t^2 - t)n/2``
    with ``t = ceil(m/n)``."""
    _check_feasible(n, m)
    t = -(-m // n)
    return t * m - (t * t - t) * n // 2


F_ORACLE_MAX_N = 7


def f_min_oracle(n: int, m: int) -> int:
    """Brute-force minimum of :func:`f_objective` over every feasible ``(s, t)``.

    Position ``i`` (1-based) contributes a pair ``(s_i, t_i)`` from
    ``(n-i+1)^2`` choices.  All combinations of positions 2..n are laid out
    as one numpy grid, and the ``n^2`` choices at position 1 are looped over.
    """
    if n > F_ORACLE_MAX_N:
        raise ValueError(f"oracle enumerates all vectors; n <= {F_ORACLE_MAX_N} only")
    _check_feasible(n, m)
    return _oracle_table(n)[m]


_ORACLE_CACHE: dict[int, list[int]] = {}


def _position_choices(n: int, i: int) -> tuple[np.ndarray, np.ndarray]:
    cap = n - i
    s, t = np.meshgrid(np.arange(cap + 1), np.arange(cap + 1), indexing="ij")
    s, t = s.ravel(), t.ravel()
    return (s + t).astype(np.int64), (s * (s + 1) // 2 + (n - i) * t).astype(np.int64)


def _oracle_table(n: int) -> list[int]:
    if n in _ORACLE_CACHE:
        return _ORACLE_CACHE[n]
    total = np.zeros(1, dtype=np.int64)
    cost = np.zeros(1, dtype=np.int64)
    for i in range(2, n + 1):
        a, c = _position_choices(n, i)
        total = np.add.outer(total, a).ravel()
        cost = np.add.outer(cost, c).ravel()
    top = n * (n - 1)
    big = np.iinfo(np.int64).max
    table = np.full(top + 1, big, dtype=np.int64)
    a1, c1 = _position_choices(n, 1)
    for a, c in zip(a1.tolist(), c1.tolist()):
        np.minimum.at(table, total + a, cost + c)
    result = [int(x) for x in table]
    _ORACLE_CACHE[n] = result
    return result


@dataclass(frozen=True)
class OrderDiagnostics:
    """Per-order quantities behind the ``beta`` lower bound.

    Lists are 0-indexed: ``short_counts[p]`` belongs to position ``p``,
    ``long_length_counts[x - 1]`` counts long arcs of length ``x`` and
    ``cut_crossings[i - 1]`` counts arcs across the cut after the first
    ``i`` vertices.
    """

    n: int
    m: int
    short_counts: tuple[int, ...]
    long_length_counts: tuple[int, ...]
    cut_crossings: tuple[int, ...]
    w_short: int
    w_long: int
    short_count: int
    long_count: int
    backward_count: int
    per_order_bound: Fraction


def order_diagnostics(g: Digraph, order: VertexOrder) -> OrderDiagnostics:
    _check_order(g, order)
    n = g.n
    pos = order.pos
    s = [0] * n
    t = [0] * n
    # difference array: an arc between positions a < b crosses cuts a+1..b
    diff = [0] * (n + 1)
    w_short = w_long = n_short = n_long = backward = 0
    for u, v in g.arcs:
        a, b = pos[u], pos[v]
        if a > b:
            backward += 1
            a, b = b, a
        length = b - a
        diff[a] += 1
        diff[b] -= 1
        if 2 * length <= n:
            s[a] += 1
            w_short += length
            n_short += 1
        else:
            t[length - 1] += 1
            w_long += length
            n_long += 1
    cuts = list(itertools.accumulate(diff[:n]))
    bound = Fraction(w_short - w_long, n) + n_long
    return OrderDiagnostics(
        n=n,
        m=g.m,
        short_counts=tuple(s),
        long_length_counts=tuple(t),
        cut_crossings=tuple(cuts),
        w_short=w_short,
        w_long=w_long,
        short_count=n_short,
        long_count=n_long,
        backward_count=backward,
        per_order_bound=bound,
    )
