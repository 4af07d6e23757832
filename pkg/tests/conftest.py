"""Shared helpers and hypothesis strategies."""

from __future__ import annotations

import random

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from shannon_coloring.coloring import PartialColoring
from shannon_coloring.multigraph import Multigraph, random_multigraph

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


def random_partial(graph, rng, r=None, keep=1.0):
    """Greedy proper partial coloring with random valid colors.

    Each edge is colored with probability ``keep`` when some color fits.
    """
    phi = PartialColoring(graph, r or max(1, graph.shannon_bound))
    order = list(range(graph.m))
    rng.shuffle(order)
    for e in order:
        if rng.random() >= keep:
            continue
        u, v = graph.eu[e], graph.ev[e]
        ok = [c for c in range(phi.r) if phi.is_missing(u, c) and phi.is_missing(v, c)]
        if ok:
            phi.assign(e, rng.choice(ok))
    return phi


def random_instance(seed, sizes=(12, 30, 80), deltas=(2, 3, 4, 5, 6)):
    rng = random.Random(seed)
    d = rng.choice(deltas)
    g = random_multigraph(rng.choice(sizes), d, rng.randint(1, d), seed)
    return g, rng


@st.composite
def multigraphs(draw, max_n=8, max_m=16, min_m=1):
    n = draw(st.integers(2, max_n))
    pair = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda p: p[0] != p[1])
    edges = draw(st.lists(pair, min_size=min_m, max_size=max_m))
    return Multigraph.from_edges(n, edges)


# independent fan/edge classifier: BFS over the two-colored subgraph of a
# shifted copy, no use of the package's own path or component helpers

def shifted(phi, edges):
    colors = list(phi.color)
    for i in range(len(edges) - 1):
        colors[edges[i]] = phi.color[edges[i + 1]]
    colors[edges[-1]] = -1
    return colors


def _proper(graph, colors, edges):
    # only endpoints of shifted edges can have changed
    for x in {v for f in edges for v in (graph.eu[f], graph.ev[f])}:
        seen = [colors[e] for e in graph.incidence[x] if colors[e] >= 0]
        if len(seen) != len(set(seen)):
            return False
    return True


def _ab_deg(graph, colors, x, a, b):
    return sum(1 for e in graph.incidence[x] if colors[e] in (a, b))


def _same_component(graph, colors, x, y, a, b):
    seen, todo = {x}, [x]
    while todo:
        v = todo.pop()
        for e in graph.incidence[v]:
            if colors[e] in (a, b):
                w = graph.other(e, v)
                if w not in seen:
                    seen.add(w)
                    todo.append(w)
    return y in seen


def classify(phi, fan, a, b):
    """'happy', 'successful', 'disappointed', 'unhopeful' or 'unshiftable'."""
    g = phi.graph
    if phi.color[fan.edges[0]] >= 0:
        return "unshiftable"
    colors = shifted(phi, fan.edges)
    if not _proper(g, colors, fan.edges):
        return "unshiftable"
    x, y = fan.pivot, fan.v_end
    used = {colors[f] for f in g.incidence[x] + g.incidence[y] if colors[f] >= 0}
    if len(used) < phi.r:
        return "happy"
    if _ab_deg(g, colors, x, a, b) >= 2 or _ab_deg(g, colors, y, a, b) >= 2:
        return "unhopeful"
    return "disappointed" if _same_component(g, colors, x, y, a, b) else "successful"


def happy_after_shift(phi, edges):
    g = phi.graph
    if phi.color[edges[0]] >= 0:
        return False
    colors = shifted(phi, edges)
    if not _proper(g, colors, edges):
        return False
    last = edges[-1]
    used = {colors[f] for f in g.incidence[g.eu[last]] + g.incidence[g.ev[last]] if colors[f] >= 0}
    return len(used) < phi.r


def is_successful(phi, fan, a, b):
    """Shiftable, both ends of a/b-degree < 2 and in different components; happiness ignored."""
    g = phi.graph
    colors = shifted(phi, fan.edges)
    if not _proper(g, colors, fan.edges):
        return False
    x, y = fan.pivot, fan.v_end
    if _ab_deg(g, colors, x, a, b) >= 2 or _ab_deg(g, colors, y, a, b) >= 2:
        return False
    return not _same_component(g, colors, x, y, a, b)


# one summary line per acceptance criterion, echoed after the run
ACCEPTANCE_LINES = {}


def report_criterion(number, ok, text):
    line = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {text}"
    ACCEPTANCE_LINES[number] = line
    print(line)
    return ok


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for number in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[number])
