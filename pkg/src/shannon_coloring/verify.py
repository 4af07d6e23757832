"""Independent checks: properness rescans, exact chromatic index, chain validators.

The properness checks never read the occupancy index of a coloring under
test; they rebuild what they need from the per-edge colors.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement

from .chains import bicolored_path, is_chain, shift_unchecked
from .coloring import BLANK, PartialColoring, from_colors
from .errors import ImproperColoring, PreconditionError
from .multigraph import Multigraph


@dataclass
class VerificationReport:
    proper: bool
    colors_used: int
    bound: int
    uncolored: int
    violations: list = field(default_factory=list)
    out_of_range: list = field(default_factory=list)

    @property
    def complete(self):
        return self.uncolored == 0

    @property
    def within_bound(self):
        return not self.out_of_range and self.colors_used <= self.bound

    @property
    def ok(self):
        return self.proper and self.complete and self.within_bound

    def as_dict(self):
        return {
            "proper": self.proper,
            "complete": self.complete,
            "within_bound": self.within_bound,
            "colors_used": self.colors_used,
            "bound": self.bound,
            "uncolored": self.uncolored,
            "violations": [list(v) for v in self.violations[:20]],
        }


def verify(graph, colors, bound):
    """Rescan every vertex; lists each pair of same-colored adjacent edges."""
    if isinstance(colors, PartialColoring):
        colors = colors.color
    violations = []
    for x in range(graph.n):
        seen = {}
        for e in graph.incidence[x]:
            c = colors[e]
            if c == BLANK:
                continue
            if c in seen:
                pair = (seen[c], e, c)
                if pair not in violations:
                    violations.append(pair)
            else:
                seen[c] = e
    used = {c for c in colors if c != BLANK}
    return VerificationReport(
        proper=not violations,
        colors_used=len(used),
        bound=bound,
        uncolored=sum(1 for c in colors if c == BLANK),
        violations=violations,
        out_of_range=sorted(c for c in used if not 0 <= c < bound),
    )


def _colorable(n, edge_list, k):
    used = [0] * n
    m = len(edge_list)
    assignment = [0] * m

    def place(i, top):
        if i == m:
            return True
        u, v = edge_list[i]
        busy = used[u] | used[v]
        for c in range(min(k, top + 2)):
            bit = 1 << c
            if busy & bit:
                continue
            used[u] |= bit
            used[v] |= bit
            assignment[i] = c
            if place(i + 1, max(top, c)):
                return True
            used[u] ^= bit
            used[v] ^= bit
        return False

    return place(0, -1)


def brute_force_chromatic_index(graph, limit=12):
    """Exact chromatic index by backtracking, for graphs with at most ``limit`` edges.

    Edges are tried in degree-descending order and each edge may open at
    most one new color, which removes color-permutation symmetry.
    """
    if graph.m > limit:
        raise PreconditionError(f"brute force limited to {limit} edges, graph has {graph.m}")
    if graph.m == 0:
        return 0
    deg = [graph.degree(x) for x in range(graph.n)]
    order = sorted(range(graph.m), key=lambda e: (-(deg[graph.eu[e]] + deg[graph.ev[e]]), e))
    edge_list = [(graph.eu[e], graph.ev[e]) for e in order]
    k = graph.delta
    while not _colorable(graph.n, edge_list, k):
        k += 1
    return k


def tiny_multigraphs(max_n=5, max_m=8):
    """Every loopless multigraph with ``2 <= n <= max_n`` and ``1 <= m <= max_m``.

    Graphs are raw edge multisets over the vertex pairs; isomorphic copies
    are not merged.
    """
    for n in range(2, max_n + 1):
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        for m in range(1, max_m + 1):
            for combo in combinations_with_replacement(pairs, m):
                yield Multigraph.from_edges(n, combo)


@dataclass
class ChainVerdict:
    ok: bool
    reason: str = ""
    step: int = -1

    def __bool__(self):
        return self.ok


def _fail(reason, step=-1):
    return ChainVerdict(False, reason, step)


def chain_edges(steps):
    if len(steps) == 1:
        return steps[0].fan.edges + steps[0].path.edges[1:]
    edges = list(steps[0].fan.edges) + list(steps[0].path.edges[1:])
    for s in steps[1:]:
        edges.extend(s.fan.edges[1:])
        edges.extend(s.path.edges[1:])
    return edges


def check_non_intersecting(steps):
    """Earlier steps' internal path edges and fan vertices avoid every later step."""
    for j in range(1, len(steps)):
        later = steps[j]
        later_edges = set(later.fan.edges) | set(later.path.edges)
        later_vertices = set(later.fan.vertices()) | set(later.path.vertices)
        for i in range(j):
            earlier = steps[i]
            if set(earlier.path.internal_edges()) & later_edges:
                return _fail(f"internal path edge of step {i} reused by step {j}", j)
            if set(earlier.fan.vertices()) & later_vertices:
                return _fail(f"fan vertex of step {i} revisited by step {j}", j)
    return ChainVerdict(True)


def _step_colors(step):
    return step.alpha, step.beta


def validate_multistep_chain(phi, steps):
    """Structural audit of a multi-step Shannon chain against coloring ``phi``.

    ``steps`` is a sequence of objects with ``fan``, ``path``, ``alpha`` and
    ``beta`` attributes. Checks gluing, non-intersection, that each step is a
    Shannon chain in the coloring shifted by its predecessors, and that the
    whole chain is happy. ``phi`` is not modified.
    """
    if not steps:
        return _fail("empty chain")
    g = phi.graph
    for i, s in enumerate(steps):
        fan, path = s.fan, s.path
        if not fan.edges or len(fan.edges) > 2:
            return _fail(f"fan length {len(fan.edges)}", i)
        for f, y in zip(fan.edges, fan.ends):
            if {g.eu[f], g.ev[f]} != {fan.pivot, y}:
                return _fail(f"fan edge {f} does not join pivot {fan.pivot} and {y}", i)
        if path.edges[0] != fan.edges[-1]:
            return _fail("path does not start at the fan's last edge", i)
        if path.vertices[0] != fan.pivot or path.vertices[1] != fan.v_end:
            return _fail("path does not leave from the fan's end vertex", i)
        for k, f in enumerate(path.edges):
            if {g.eu[f], g.ev[f]} != {path.vertices[k], path.vertices[k + 1]}:
                return _fail(f"path edge {f} does not join its listed vertices", i)
        if len(set(path.vertices[1:])) != len(path.vertices) - 1:
            return _fail("path revisits a vertex", i)
        if i:
            prev = steps[i - 1].path
            if fan.edges[0] != prev.edges[-1] or fan.v_start != prev.v_end:
                return _fail("step is not glued to the previous path end", i)
    edges = chain_edges(steps)
    if not is_chain(g, edges):
        return _fail("concatenation is not a chain")
    verdict = check_non_intersecting(steps)
    if not verdict:
        return verdict

    work = phi.copy()
    if work.color[edges[0]] != BLANK:
        return _fail("chain starts at a colored edge", 0)
    for i, s in enumerate(steps):
        fan, path = s.fan, s.path
        a, b = _step_colors(s)
        try:
            shift_unchecked(work, fan.edges)
        except ImproperColoring:
            return _fail("fan is not shiftable", i)
        if len(path) == 1:
            if i != len(steps) - 1:
                return _fail("single-edge path before the last step", i)
            continue
        first = work.color[path.edges[1]]
        if first not in (a, b) or a == b:
            return _fail("path colors do not match the step colors", i)
        second = b if first == a else a
        if not work.is_missing(fan.v_end, second):
            return _fail("second path color present at the fan's end vertex", i)
        if not work.is_missing(fan.pivot, first):
            return _fail("first path color present at the pivot", i)
        expected = bicolored_path(work, path.edges[0], fan.pivot, first, second, len(path))
        if expected.edges != path.edges:
            return _fail("path is not an initial segment of the alternating path", i)
        try:
            shift_unchecked(work, path.edges)
        except ImproperColoring:
            return _fail("path is not shiftable", i)
    last = edges[-1]
    if work.common_missing(g.eu[last], g.ev[last]) is None:
        return _fail("last edge is not happy after shifting", len(steps) - 1)
    return ChainVerdict(True)


def rebuild_coloring(graph, r, colors):
    """Fresh :class:`PartialColoring` for an externally produced color list."""
    return from_colors(graph, r, colors)
