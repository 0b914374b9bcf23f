import sys

import pytest

from euler_extremal.generators import (
    BlowupSpec,
    blowup,
    cayley_circulant,
    complete_symmetric,
    dfs_counterexample,
    directed_cycle,
    gadget_hst,
    random_eulerian,
)
from euler_extremal.graph import Digraph

_acceptance_lines: list[str] = []


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(label): acceptance criterion")


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    label = dict(report.user_properties).get("acceptance")
    if label:
        verdict = "PASS" if report.passed else "FAIL"
        _acceptance_lines.append(f"[{verdict}] {label} ({report.duration:.1f}s)")


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)


@pytest.fixture(autouse=True)
def _tag_acceptance(request):
    marker = request.node.get_closest_marker("acceptance")
    if marker:
        request.node.user_properties.append(("acceptance", marker.args[0]))


def generator_instances(max_n):
    """Every deterministic family member with at most ``max_n`` vertices."""
    out = []
    for n in range(2, max_n + 1):
        out.append((f"cycle{n}", directed_cycle(n)))
        out.append((f"K*{n}", complete_symmetric(n)))
        for t in range(1, n):
            out.append((f"cayley({n},{t})", cayley_circulant(n, t)))
    for s in range(1, max_n + 1):
        for t in range(1, max_n + 1):
            if (s + t) * s > max_n:
                continue
            h = gadget_hst(s, t)
            out.append((f"H({s},{t})", h))
            for d in range(2, max_n + 1):
                if h.n * d <= max_n:
                    out.append((f"H({s},{t},{d})", blowup(BlowupSpec(h, d))))
    for t in range(1, 5):
        g, _ = dfs_counterexample(t)
        if g.n <= max_n:
            out.append((f"dfs-cx({t})", g))
    return out


def random_instances(count, min_n, max_n, seed0=0):
    out = []
    k = 0
    while len(out) < count:
        n = min_n + k % (max_n - min_n + 1)
        frac = (k * 7 % 10 + 1) / 10
        target = max(2, int(frac * n * (n - 1)))
        g = random_eulerian(n, target, seed=seed0 + k)
        k += 1
        if g.m >= 2:
            out.append((f"rand(n={n},m={g.m},seed={seed0 + k - 1})", g))
    return out


TWO_CYCLE = Digraph(2, [(0, 1), (1, 0)])


def eulerian_suite():
    """Eulerian instances up to 60 vertices: every small family member, a
    spread of larger circulants, gadgets and blowups, and random graphs."""
    out = generator_instances(14)
    for n in range(15, 61, 5):
        for t in sorted({1, 2, 3, n // 4, n // 2 - 1, n - 1}):
            out.append((f"cayley({n},{t})", cayley_circulant(n, t)))
    for n in (15, 20, 30):
        out.append((f"K*{n}", complete_symmetric(n)))
    for s in range(1, 8):
        for t in range(1, 16):
            h = gadget_hst(s, t)
            for d in range(1, 5):
                if 14 < h.n * d <= 60:
                    out.append((f"H({s},{t},{d})", blowup(BlowupSpec(h, d))))
    for t in (2, 3):
        out.append((f"dfs-cx({t})", dfs_counterexample(t)[0]))
    out.extend(random_instances(60, 13, 60, seed0=10_000))
    return [(name, g) for name, g in out if g.m >= 2]
