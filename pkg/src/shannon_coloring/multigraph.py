"""Immutable loopless multigraphs with dense integer vertices and edges."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .errors import GraphFormatError, InfeasibleParameters
from .rng import stream


@dataclass(frozen=True, eq=False)
class Multigraph:
    """Loopless multigraph on vertices ``0..n-1``.

    Edge ``i`` joins ``eu[i]`` and ``ev[i]``; repeated pairs are parallel
    edges. ``incidence[x]`` lists the ids of edges at ``x`` in id order.
    """

    n: int
    eu: tuple
    ev: tuple
    incidence: tuple = field(repr=False)
    delta: int
    mu: int

    @classmethod
    def from_edges(cls, n, edges):
        n = int(n)
        if n < 0:
            raise GraphFormatError(f"negative vertex count {n}")
        eu, ev = [], []
        incidence = [[] for _ in range(n)]
        pairs = Counter()
        for i, (u, v) in enumerate(edges):
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"edge {i} ({u}, {v}) has a vertex outside 0..{n - 1}")
            if u == v:
                raise GraphFormatError(f"edge {i} is a loop at vertex {u}")
            eu.append(u)
            ev.append(v)
            incidence[u].append(i)
            incidence[v].append(i)
            pairs[(min(u, v), max(u, v))] += 1
        delta = max((len(inc) for inc in incidence), default=0)
        mu = max(pairs.values(), default=0)
        return cls(n, tuple(eu), tuple(ev), tuple(tuple(inc) for inc in incidence), delta, mu)

    @property
    def m(self):
        return len(self.eu)

    def edges(self):
        return list(zip(self.eu, self.ev))

    def endpoints(self, e):
        return self.eu[e], self.ev[e]

    def other(self, e, x):
        """The endpoint of ``e`` that is not ``x``."""
        u = self.eu[e]
        return self.ev[e] if u == x else u

    def degree(self, x):
        return len(self.incidence[x])

    def multiplicity(self, x, y):
        return sum(1 for e in self.incidence[x] if self.other(e, x) == y)

    def neighbors(self, x):
        return sorted({self.other(e, x) for e in self.incidence[x]})

    @property
    def shannon_bound(self):
        return 3 * self.delta // 2

    @property
    def vizing_bound(self):
        return self.delta + self.mu

    def __eq__(self, other):
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self.n == other.n and self.eu == other.eu and self.ev == other.ev

    def __hash__(self):
        return hash((self.n, self.eu, self.ev))


def parse_graph(text):
    """Parse the text multigraph format.

    Lines starting with ``#`` and blank lines are ignored. The first data
    line is ``n m``; exactly ``m`` lines ``u v`` follow.
    """
    data = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        data.append((lineno, line))
    if not data:
        raise GraphFormatError("empty graph file")
    lineno, header = data[0]
    n, m = _two_ints(header, lineno)
    if n < 0 or m < 0:
        raise GraphFormatError(f"line {lineno}: negative header values")
    body = data[1:]
    if len(body) != m:
        raise GraphFormatError(f"header declares {m} edges but file has {len(body)}")
    return Multigraph.from_edges(n, [_two_ints(line, ln) for ln, line in body])


def _two_ints(line, lineno):
    parts = line.split()
    if len(parts) != 2:
        raise GraphFormatError(f"line {lineno}: expected two integers, got {line!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise GraphFormatError(f"line {lineno}: expected two integers, got {line!r}") from None


def serialize_graph(graph, comment=None):
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"{graph.n} {graph.m}")
    lines.extend(f"{u} {v}" for u, v in zip(graph.eu, graph.ev))
    return "\n".join(lines) + "\n"


def random_multigraph(n, delta, mu, seed):
    """Random loopless multigraph with max degree <= delta and multiplicity <= mu.

    Endpoints are drawn from the vertices that still have spare degree; a
    draw is rejected when it would exceed the multiplicity cap. Generation
    stops at ``n*delta//2`` edges, when fewer than two vertices have spare
    degree, or after a long run of consecutive rejections.
    """
    if n < 2:
        raise InfeasibleParameters(f"need n >= 2, got n={n}")
    if delta < 1:
        raise InfeasibleParameters(f"need delta >= 1, got {delta}")
    if not 1 <= mu <= delta:
        raise InfeasibleParameters(f"need 1 <= mu <= delta, got mu={mu}, delta={delta}")
    rng = stream(seed, "random_multigraph", n, delta, mu)
    target = n * delta // 2
    deg = [0] * n
    mult = Counter()
    open_vertices = list(range(n))
    where = list(range(n))
    edges = []
    max_rejections = 64 + 8 * n

    def close(x):
        i = where[x]
        last = open_vertices[-1]
        open_vertices[i] = last
        where[last] = i
        open_vertices.pop()

    rejections = 0
    while len(edges) < target and len(open_vertices) >= 2 and rejections < max_rejections:
        u = open_vertices[rng.randrange(len(open_vertices))]
        v = open_vertices[rng.randrange(len(open_vertices))]
        key = (u, v) if u < v else (v, u)
        if u == v or mult[key] >= mu:
            rejections += 1
            continue
        rejections = 0
        mult[key] += 1
        edges.append((u, v))
        for x in (u, v):
            deg[x] += 1
            if deg[x] == delta:
                close(x)
    return Multigraph.from_edges(n, edges)


def shannon_extremal(delta):
    """Three vertices with ``delta/2`` parallel edges between each pair."""
    if delta < 2 or delta % 2:
        raise InfeasibleParameters(f"extremal graph needs an even delta >= 2, got {delta}")
    half = delta // 2
    edges = [(0, 1)] * half + [(1, 2)] * half + [(0, 2)] * half
    return Multigraph.from_edges(3, edges)
