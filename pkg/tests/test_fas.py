import random
from fractions import Fraction
from itertools import product

import pytest

from euler_extremal.fas import (
    CAP_ENV,
    CapExceeded,
    VertexOrder,
    backward_arcs,
    beta_lower_bound,
    default_cap,
    exact_beta,
    f_min,
    f_min_oracle,
    f_objective,
    order_diagnostics,
)
from euler_extremal.generators import cayley_circulant, directed_cycle, random_eulerian
from euler_extremal.graph import Digraph, GraphError, delete_arcs, is_acyclic, relabel

from conftest import TWO_CYCLE
from oracles import brute_beta, has_cycle

PATH3 = Digraph(3, [(0, 1), (1, 2)])
TRANSITIVE4 = Digraph(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])


def test_vertex_order():
    o = VertexOrder([2, 0, 1])
    assert o.position(2) == 0 and o.position(1) == 2
    with pytest.raises(GraphError):
        VertexOrder([0, 0, 1])


def test_backward_arcs_examples():
    assert backward_arcs(TWO_CYCLE, VertexOrder([0, 1])) == {(1, 0)}
    assert backward_arcs(cayley_circulant(4, 2), VertexOrder.identity(4)) == {(2, 0), (3, 0), (3, 1)}
    assert backward_arcs(PATH3, VertexOrder.identity(3)) == set()


@pytest.mark.parametrize("g, beta", [
    (TWO_CYCLE, 1),
    (cayley_circulant(4, 2), 3),
    (TRANSITIVE4, 0),
    (PATH3, 0),
    (directed_cycle(7), 1),
])
def test_exact_beta_examples(g, beta):
    res = exact_beta(g)
    assert res.beta == beta == brute_beta(g)
    assert len(backward_arcs(g, res.witness)) == beta


def test_exact_beta_witness_tie_break():
    # both orders of the 2-cycle cost 1; vertex 0 goes last
    assert exact_beta(TWO_CYCLE).witness.seq == (1, 0)


def test_exact_beta_cap(monkeypatch):
    g = directed_cycle(9)
    with pytest.raises(CapExceeded):
        exact_beta(g, cap=8)
    monkeypatch.setenv(CAP_ENV, "5")
    assert default_cap() == 5
    with pytest.raises(CapExceeded):
        exact_beta(g)
    monkeypatch.setenv(CAP_ENV, "1000")
    assert default_cap() == 64


def test_exact_beta_relabel_invariant():
    rng = random.Random(5)
    for seed in range(15):
        g = random_eulerian(9, 30, seed)
        perm = list(range(g.n))
        rng.shuffle(perm)
        h = relabel(g, perm)
        res = exact_beta(h)
        assert res.beta == exact_beta(g).beta
        assert is_acyclic(delete_arcs(h, backward_arcs(h, res.witness)))


@pytest.mark.parametrize("n, m, expected", [(2, 2, 1), (4, 8, 3), (10, 20, 3)])
def test_beta_lower_bound(n, m, expected):
    assert beta_lower_bound(n, m) == expected


def test_beta_lower_bound_is_exact_rational():
    assert beta_lower_bound(3, 4) == Fraction(16, 18) + Fraction(4, 6)


def test_f_objective_examples():
    assert f_objective([0] * 5, [0] * 5, 5) == 0
    assert f_objective([1, 0], [0, 0], 2) == 1
    assert f_objective([2, 2, 1, 0], [0, 0, 0, 0], 4) == 7
    # the long-arc weight is (n - i) for 1-based i
    assert f_objective([0, 0, 0], [2, 1, 0], 3) == 2 * 2 + 1 * 1


@pytest.mark.parametrize("n", range(1, 8))
def test_f_min_with_m_equal_n(n):
    if n * (n - 1) >= n:
        assert f_min(n, n) == n


@pytest.mark.parametrize("n, m, expected", [(4, 8, 12), (5, 7, 9), (2, 2, 2), (3, 0, 0)])
def test_f_min_examples(n, m, expected):
    assert f_min(n, m) == expected
    assert f_min_oracle(n, m) == expected


def test_f_min_oracle_by_plain_enumeration():
    # n = 4 by itertools, without the vectorised grid
    n = 4
    best = {}
    ranges = [range(n - i + 1) for i in range(1, n + 1)]
    for s in product(*ranges):
        for t in product(*ranges):
            m = sum(s) + sum(t)
            val = f_objective(s, t, n)
            best[m] = min(best.get(m, val), val)
    for m in range(n * (n - 1) + 1):
        assert f_min_oracle(n, m) == best[m] == f_min(n, m)


def test_f_min_rejects_infeasible():
    with pytest.raises(ValueError):
        f_min(3, 7)
    with pytest.raises(ValueError):
        f_min_oracle(8, 1)


def test_diagnostics_circulant():
    d = order_diagnostics(cayley_circulant(4, 2), VertexOrder.identity(4))
    assert (d.short_count, d.long_count, d.w_short, d.w_long) == (7, 1, 11, 3)
    assert d.backward_count == 3
    assert d.per_order_bound == 3
    assert d.short_counts == (3, 3, 1, 0)
    assert d.long_length_counts == (0, 0, 1, 0)
    assert d.cut_crossings == (4, 6, 4, 0)


def test_diagnostics_two_cycle():
    d = order_diagnostics(TWO_CYCLE, VertexOrder.identity(2))
    assert (d.short_count, d.long_count, d.w_short, d.backward_count) == (2, 0, 2, 1)


def test_diagnostics_six_cycle():
    d = order_diagnostics(directed_cycle(6), VertexOrder.identity(6))
    assert d.short_counts == (1, 1, 1, 1, 1, 0)
    assert d.long_length_counts == (0, 0, 0, 0, 1, 0)
    assert d.cut_crossings == (2, 2, 2, 2, 2, 0)
    assert sum(d.cut_crossings) == 10 == d.w_short + d.w_long
    assert (d.w_short, d.w_long) == (5, 5)


def test_length_half_n_is_short():
    # n = 4, arc between positions 0 and 2 has length exactly n/2
    d = order_diagnostics(Digraph(4, [(0, 2)]), VertexOrder.identity(4))
    assert (d.short_count, d.long_count) == (1, 0)


def test_witness_acyclic_against_independent_check():
    for seed in range(20):
        g = random_eulerian(8, 30, seed)
        res = exact_beta(g)
        kept = g.arcs - backward_arcs(g, res.witness)
        assert not has_cycle(g.n, kept)
