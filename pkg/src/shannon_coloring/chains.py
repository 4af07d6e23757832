"""Chains, fans, bicolored paths and the shift/augment operations on them.

A chain is a plain list of edge ids. Fans and path chains are small records
that also carry the vertices needed to glue chains together.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import BLANK
from .errors import ImproperColoring, NotHappy, PreconditionError


@dataclass
class Fan:
    edges: list
    pivot: int
    ends: list  # non-pivot endpoint of each edge; repeats allowed

    @property
    def v_start(self):
        return self.ends[0]

    @property
    def v_end(self):
        return self.ends[-1]

    def prefix(self, j):
        return Fan(self.edges[:j], self.pivot, self.ends[:j])

    def vertices(self):
        return [self.pivot, *self.ends]

    def __len__(self):
        return len(self.edges)


@dataclass
class PathChain:
    """``edges[i]`` joins ``vertices[i]`` and ``vertices[i + 1]``."""

    edges: list
    vertices: list

    @property
    def v_start(self):
        return self.vertices[0]

    @property
    def v_end(self):
        return self.vertices[-1]

    def prefix(self, j):
        return PathChain(self.edges[:j], self.vertices[: j + 1])

    def internal_edges(self):
        return self.edges[1:-1]

    def __len__(self):
        return len(self.edges)


def single_fan(graph, e, x):
    return Fan([e], x, [graph.other(e, x)])


def is_chain(graph, edges):
    if not edges or len(set(edges)) != len(edges):
        return False
    for f, g in zip(edges, edges[1:]):
        if len({graph.eu[f], graph.ev[f]} & {graph.eu[g], graph.ev[g]}) != 1:
            return False
    return True


def _recolor(phi, edges, new_colors):
    """Replace the colors of ``edges`` atomically; rolls back on conflict."""
    color = phi.color
    old = [color[f] for f in edges]
    for f, c in zip(edges, old):
        if c != BLANK:
            phi.unassign(f)
    done = []
    try:
        for f, c in zip(edges, new_colors):
            if c != BLANK:
                phi.assign(f, c)
                done.append(f)
    except ImproperColoring:
        for f in done:
            phi.unassign(f)
        for f, c in zip(edges, old):
            if c != BLANK:
                phi.assign(f, c)
        raise


def shift_unchecked(phi, edges):
    """Shift without validating the chain shape; properness is still enforced."""
    color = phi.color
    _recolor(phi, edges, [color[f] for f in edges[1:]] + [BLANK])


def unshift(phi, edges):
    """Inverse of :func:`shift_unchecked`: shift along the reversed chain."""
    shift_unchecked(phi, edges[::-1])


def shift(phi, edges):
    """Move each edge's color to its predecessor and blank the last edge.

    The first edge must be uncolored and the result must be proper;
    otherwise the coloring is left untouched and an error is raised.
    """
    if not is_chain(phi.graph, edges):
        raise PreconditionError(f"not a chain: {edges}")
    if phi.color[edges[0]] != BLANK:
        raise PreconditionError(f"chain starts at colored edge {edges[0]}")
    shift_unchecked(phi, edges)


def is_shiftable(phi, edges):
    if not is_chain(phi.graph, edges) or phi.color[edges[0]] != BLANK:
        return False
    try:
        shift_unchecked(phi, edges)
    except ImproperColoring:
        return False
    unshift(phi, edges)
    return True


def end_color(phi, edge, colors=None):
    """Smallest admissible color for the uncolored ``edge``, or None.

    With ``colors`` given, only those are considered.
    """
    g = phi.graph
    u, v = g.eu[edge], g.ev[edge]
    if colors is None:
        return phi.common_missing(u, v)
    occ, r = phi.occ, phi.r
    ok = [c for c in colors if occ[u * r + c] < 0 and occ[v * r + c] < 0]
    return min(ok) if ok else None


def augment(phi, edges, colors=None):
    """Shift along a happy chain and color its last edge.

    The last edge gets the smallest valid color (restricted to ``colors``
    when given). Returns that color. If no color fits, the shift is undone
    and :class:`NotHappy` is raised.
    """
    shift(phi, edges)
    c = end_color(phi, edges[-1], colors)
    if c is None:
        unshift(phi, edges)
        raise NotHappy(f"chain ending at edge {edges[-1]} is not happy")
    phi.assign(edges[-1], c)
    return c


def augment_unchecked(phi, edges, colors=None):
    shift_unchecked(phi, edges)
    c = end_color(phi, edges[-1], colors)
    if c is None:
        unshift(phi, edges)
        raise NotHappy(f"chain ending at edge {edges[-1]} is not happy")
    phi.assign(edges[-1], c)
    return c


def is_happy_chain(phi, edges):
    if not is_shiftable(phi, edges):
        return False
    shift_unchecked(phi, edges)
    ok = end_color(phi, edges[-1]) is not None
    unshift(phi, edges)
    return ok


def bicolored_path(phi, e, v_start, a, b, cap=None):
    """Path chain ``e`` followed by the maximal alternating a/b walk.

    The walk leaves from the endpoint of ``e`` other than ``v_start`` along
    the edge colored ``a``. With ``cap`` the result holds at most ``cap``
    edges and the walk stops as soon as the cap is reached.
    """
    if phi.color[e] != BLANK:
        raise PreconditionError(f"edge {e} is colored")
    g = phi.graph
    y = g.other(e, v_start)
    edges = [e]
    vertices = [v_start, y]
    if a == b:
        return PathChain(edges, vertices)
    if cap is None:
        cap = g.m + 1
    occ, r = phi.occ, phi.r
    eu, ev = g.eu, g.ev
    cur, col, other = y, a, b
    while len(edges) < cap:
        f = occ[cur * r + col]
        if f < 0:
            break
        nxt = ev[f] if eu[f] == cur else eu[f]
        edges.append(f)
        vertices.append(nxt)
        if nxt == y:
            break  # closed an alternating cycle; only reachable when y had a/b degree 2
        cur = nxt
        col, other = other, col
    return PathChain(edges, vertices)


def ab_degree(phi, x, a, b):
    occ, r = phi.occ, phi.r
    d = occ[x * r + a] >= 0
    if b != a:
        d += occ[x * r + b] >= 0
    return int(d)


def component(phi, x, a, b):
    """Vertices of the a/b-component containing ``x``."""
    g = phi.graph
    occ, r = phi.occ, phi.r
    seen = {x}
    for first in (a, b):
        cur, col = x, first
        while True:
            f = occ[cur * r + col]
            if f < 0:
                break
            cur = g.other(f, cur)
            if cur in seen:
                break
            seen.add(cur)
            col = b if col == a else a
    return seen


def related(phi, x, y, a, b):
    """Whether ``x`` and ``y`` lie in the same a/b-component."""
    if x == y:
        return True
    return y in component(phi, x, a, b)


def edge_hopeful(phi, e, a, b):
    g = phi.graph
    return ab_degree(phi, g.eu[e], a, b) < 2 and ab_degree(phi, g.ev[e], a, b) < 2


def edge_successful(phi, e, a, b):
    g = phi.graph
    return edge_hopeful(phi, e, a, b) and not related(phi, g.eu[e], g.ev[e], a, b)


def fan_status(phi, fan, a, b):
    """Classify a shiftable fan as happy, successful, disappointed or neither.

    Returns one of ``"happy"``, ``"successful"``, ``"disappointed"``,
    ``"unhopeful"``, ``"unshiftable"``.
    """
    if not is_shiftable(phi, fan.edges):
        return "unshiftable"
    if is_happy_chain(phi, fan.edges):
        return "happy"
    x, y = fan.pivot, fan.v_end
    if ab_degree(phi, x, a, b) >= 2 or ab_degree(phi, y, a, b) >= 2:
        return "unhopeful"
    shift_unchecked(phi, fan.edges)
    rel = related(phi, x, y, a, b)
    unshift(phi, fan.edges)
    return "disappointed" if rel else "successful"


def fan_hopeful(phi, fan, a, b):
    return fan_status(phi, fan, a, b) in ("successful", "disappointed")


def fan_successful(phi, fan, a, b):
    return fan_status(phi, fan, a, b) == "successful"
