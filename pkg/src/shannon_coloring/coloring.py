"""Partial edge colorings with an O(1) "edge at x colored c" index.

Colors are ``0..r-1``; ``BLANK`` (-1) marks an uncolored edge. The
occupancy index is a flat list: ``occ[x * r + c]`` is the id of the edge at
``x`` colored ``c``, or ``BLANK``. Hot loops elsewhere in the package read
``color`` and ``occ`` directly, so both must only be mutated through
:meth:`PartialColoring.assign` and :meth:`PartialColoring.unassign`.
"""

from __future__ import annotations

from .errors import GraphFormatError, ImproperColoring, PreconditionError

BLANK = -1


class PartialColoring:
    __slots__ = ("graph", "r", "color", "occ", "colored")

    def __init__(self, graph, r):
        if r < 1:
            raise PreconditionError(f"color count must be >= 1, got {r}")
        self.graph = graph
        self.r = r
        self.color = [BLANK] * graph.m
        self.occ = [BLANK] * (graph.n * r)
        self.colored = 0

    def copy(self):
        new = PartialColoring.__new__(PartialColoring)
        new.graph = self.graph
        new.r = self.r
        new.color = list(self.color)
        new.occ = list(self.occ)
        new.colored = self.colored
        return new

    def edge_at(self, x, c):
        return self.occ[x * self.r + c]

    def is_missing(self, x, c):
        return self.occ[x * self.r + c] < 0

    def missing(self, x):
        """Colors absent at ``x``, ascending."""
        base = x * self.r
        occ = self.occ
        return [c for c in range(self.r) if occ[base + c] < 0]

    def common_missing(self, x, y):
        """Smallest color missing at both ``x`` and ``y``, or None."""
        r = self.r
        occ = self.occ
        bx, by = x * r, y * r
        for c in range(r):
            if occ[bx + c] < 0 and occ[by + c] < 0:
                return c
        return None

    def assign(self, e, c):
        g = self.graph
        u, v = g.eu[e], g.ev[e]
        r = self.r
        if not 0 <= c < r:
            raise PreconditionError(f"color {c} outside 0..{r - 1}")
        if self.color[e] != BLANK:
            raise PreconditionError(f"edge {e} already colored {self.color[e]}")
        occ = self.occ
        if occ[u * r + c] >= 0 or occ[v * r + c] >= 0:
            raise ImproperColoring(f"color {c} already used at an endpoint of edge {e}")
        self.color[e] = c
        occ[u * r + c] = e
        occ[v * r + c] = e
        self.colored += 1

    def unassign(self, e):
        c = self.color[e]
        if c == BLANK:
            raise PreconditionError(f"edge {e} is not colored")
        g = self.graph
        r = self.r
        self.occ[g.eu[e] * r + c] = BLANK
        self.occ[g.ev[e] * r + c] = BLANK
        self.color[e] = BLANK
        self.colored -= 1

    @property
    def uncolored(self):
        return self.graph.m - self.colored

    def domain(self):
        return [e for e, c in enumerate(self.color) if c != BLANK]

    def uncolored_edges(self):
        return [e for e, c in enumerate(self.color) if c == BLANK]

    def colors_used(self):
        return len({c for c in self.color if c != BLANK})

    def fingerprint(self):
        return hash(tuple(self.color))

    def rebuild_occupancy(self):
        """Occupancy recomputed from scratch; used to audit the incremental index."""
        g = self.graph
        r = self.r
        occ = [BLANK] * (g.n * r)
        for e, c in enumerate(self.color):
            if c != BLANK:
                occ[g.eu[e] * r + c] = e
                occ[g.ev[e] * r + c] = e
        return occ

    def __repr__(self):
        return f"PartialColoring(r={self.r}, colored={self.colored}/{self.graph.m})"


def blank_coloring(graph, r):
    return PartialColoring(graph, r)


def from_colors(graph, r, colors):
    """Build a coloring from a per-edge list; raises on improper input."""
    phi = PartialColoring(graph, r)
    if len(colors) != graph.m:
        raise PreconditionError(f"expected {graph.m} colors, got {len(colors)}")
    for e, c in enumerate(colors):
        if c != BLANK:
            phi.assign(e, c)
    return phi


def missing_set(phi, x):
    return phi.missing(x)


def is_happy(phi, e):
    """Smallest color free at both ends of the uncolored edge ``e``, else None."""
    if phi.color[e] != BLANK:
        raise PreconditionError(f"edge {e} is colored")
    g = phi.graph
    return phi.common_missing(g.eu[e], g.ev[e])


def is_proper(graph, colors):
    """Full rescan: no vertex sees the same color twice.

    Accepts a :class:`PartialColoring` or a plain per-edge color list and
    never consults the occupancy index.
    """
    if isinstance(colors, PartialColoring):
        colors = colors.color
    for x in range(graph.n):
        seen = set()
        for e in graph.incidence[x]:
            c = colors[e]
            if c == BLANK:
                continue
            if c in seen:
                return False
            seen.add(c)
    return True


def format_coloring(graph, colors):
    if isinstance(colors, PartialColoring):
        colors = colors.color
    lines = [f"{e} {u} {v} {c}" for e, (u, v, c) in enumerate(zip(graph.eu, graph.ev, colors))]
    used = len({c for c in colors if c != BLANK})
    lines.append(f"# colors_used {used}")
    return "\n".join(lines) + "\n"


def parse_coloring(text, graph):
    """Per-edge color list from the coloring file format."""
    colors = [None] * graph.m
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 4:
            raise GraphFormatError(f"line {lineno}: expected 'edge_id u v color'")
        try:
            e, u, v, c = (int(p) for p in parts)
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer field") from None
        if not 0 <= e < graph.m:
            raise GraphFormatError(f"line {lineno}: unknown edge id {e}")
        if {u, v} != {graph.eu[e], graph.ev[e]}:
            raise GraphFormatError(f"line {lineno}: endpoints do not match edge {e}")
        if c < BLANK:
            raise GraphFormatError(f"line {lineno}: invalid color {c}")
        if colors[e] is not None:
            raise GraphFormatError(f"line {lineno}: edge {e} listed twice")
        colors[e] = c
    missing = [e for e, c in enumerate(colors) if c is None]
    if missing:
        raise GraphFormatError(f"coloring omits {len(missing)} edges (first: {missing[0]})")
    return colors
