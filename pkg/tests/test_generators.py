import pytest

from euler_extremal.generators import (
    BlowupSpec,
    blowup,
    cayley_circulant,
    dfs_counterexample,
    gadget_hst,
    hst_layout,
    random_eulerian,
)
from euler_extremal.graph import Digraph, GraphError, is_eulerian, two_cycles

from conftest import TWO_CYCLE


def test_cayley_small():
    assert cayley_circulant(6, 1).arcs == {(i, (i + 1) % 6) for i in range(6)}
    assert cayley_circulant(4, 2).arcs == {(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (2, 0),
                                           (3, 0), (3, 1)}
    g = cayley_circulant(10, 2)
    assert is_eulerian(g) and g.m == 20
    with pytest.raises(GraphError):
        cayley_circulant(4, 4)


@pytest.mark.parametrize("n", range(2, 12))
def test_cayley_regular(n):
    for t in range(1, n):
        g = cayley_circulant(n, t)
        assert g.m == t * n
        assert all(len(g.out_adj[v]) == t == len(g.in_adj[v]) for v in range(n))
        if 2 * t < n:
            assert not two_cycles(g)


def test_gadget_counts():
    g = gadget_hst(3, 2)
    assert (g.n, g.m) == (15, 27)
    assert gadget_hst(1, 1) == TWO_CYCLE
    g = gadget_hst(2, 3)
    us, _ = hst_layout(2, 3)
    for u in us[0] + us[1]:
        assert g.out_degree(u) == 1 == g.in_degree(u)


@pytest.mark.parametrize("s", range(1, 7))
@pytest.mark.parametrize("t", range(1, 7))
def test_gadget_and_blowup_closed_forms(s, t):
    h = gadget_hst(s, t)
    assert (h.n, h.m) == ((s + t) * s, s * s * (t + 1))
    assert is_eulerian(h)
    for d in range(1, 7):
        b = blowup(BlowupSpec(h, d))
        assert (b.n, b.m) == (s * (s + t) * d, s * s * (t + 1) * d * d)
        assert is_eulerian(b)


def test_blowup_examples():
    h = gadget_hst(2, 2)
    assert blowup(BlowupSpec(h, 1)) == h
    b = blowup(BlowupSpec(gadget_hst(3, 6), 2))
    assert (b.n, b.m) == (54, 252)
    b = blowup(BlowupSpec(TWO_CYCLE, 2))
    assert b.arcs == {(0, 2), (0, 3), (1, 2), (1, 3), (2, 0), (2, 1), (3, 0), (3, 1)}
    assert is_eulerian(b)
    with pytest.raises(GraphError):
        BlowupSpec(h, 0)


def _core_arc_count(t):
    return sum(t * (2 * t - 2 * j + 3) for j in range(1, t + 1))


@pytest.mark.parametrize("t", range(1, 7))
def test_dfs_counterexample_shape(t):
    g, labels = dfs_counterexample(t)
    assert g.n == 6 * t * t + 1
    assert is_eulerian(g)
    assert _core_arc_count(t) >= t ** 3
    assert g.m == _core_arc_count(t) + 8 * t * t
    assert len(labels) == g.n
    level = [v for v, lab in labels.items() if lab.startswith("V")]
    assert len(level) == 2 * t * t
    for v in level:
        # each level vertex: its 4-cycle arc plus its core arcs, balanced
        core_out = [w for w in g.out_adj[v] if not labels[w].startswith("out:")]
        assert g.out_degree(v) == len(core_out) + 1


def test_dfs_counterexample_examples():
    g, _ = dfs_counterexample(3)
    assert (g.n, g.m) == (55, 117)
    # m/n >= sqrt(n)/20  <=>  400 m^2 >= n^3
    assert 400 * g.m ** 2 >= g.n ** 3
    g, labels = dfs_counterexample(1)
    assert (g.n, g.m) == (7, 11)
    core = {a for a in g.arcs if all(labels[x][0] in "rV" for x in a)}
    assert core == {(0, 1), (1, 2), (2, 0)}


def test_random_eulerian():
    assert random_eulerian(2, 2, seed=123) == TWO_CYCLE
    g = random_eulerian(8, 24, seed=1)
    assert is_eulerian(g) and 2 <= g.m <= 24
    for seed in range(30):
        a = random_eulerian(9, 40, seed)
        assert a == random_eulerian(9, 40, seed)
        assert is_eulerian(a) and a.m <= 40
    with pytest.raises(GraphError):
        random_eulerian(3, 7, seed=0)
