"""(Delta+mu)-edge-coloring with arbitrary-length fans over multigraphs."""

from __future__ import annotations

from dataclasses import dataclass

from .chains import Fan, augment_unchecked, bicolored_path, shift_unchecked, unshift
from .coloring import BLANK, PartialColoring
from .deterministic import color_trivial
from .errors import InvariantError, PreconditionError


@dataclass
class VizingFanResult:
    """``color`` is missing at ``vEnd(fan)`` and at ``vEnd(fan.prefix(j))``."""

    fan: Fan
    color: int
    j: int
    iterations: int = 0

    @property
    def prefix(self):
        return self.fan.prefix(self.j)

    @property
    def wrapped(self):
        return self.j < len(self.fan)


def _grow_fan(phi, e, x, skip=None):
    g = phi.graph
    if phi.color[e] != BLANK:
        raise PreconditionError(f"edge {e} is colored")
    occ, r = phi.occ, phi.r
    bx = x * r
    y = g.other(e, x)
    candidates = {}

    def pool(z):
        lst = candidates.get(z)
        if lst is None:
            lst = phi.missing(z)
            if z == y and skip is not None and skip in lst:
                lst.remove(skip)
            candidates[z] = lst
        return lst

    pool(y)
    index = {e: 0}
    edges = [e]
    ends = [y]
    k = 0
    deg = g.degree(x)
    it = 0
    while k < deg:
        it += 1
        lst = pool(ends[k])
        if not lst:
            raise InvariantError(f"candidate colors at {ends[k]} exhausted", {"edge": e, "pivot": x})
        eta = lst.pop(0)
        if occ[bx + eta] < 0 or eta == skip:
            return VizingFanResult(Fan(edges, x, ends), eta, k + 1, it)
        k += 1
        f = occ[bx + eta]
        if f in index:
            return VizingFanResult(Fan(edges, x, ends), eta, index[f], it)
        index[f] = k
        edges.append(f)
        ends.append(g.other(f, x))
    raise InvariantError("fan loop ran past the pivot degree", {"edge": e, "pivot": x, "fan": edges})


def first_vizing_fan(phi, e, x):
    return _grow_fan(phi, e, x)


def next_vizing_fan(phi, e, x, beta):
    g = phi.graph
    y = g.other(e, x)
    if not phi.is_missing(y, beta):
        raise PreconditionError(f"color {beta} is not missing at {y}")
    if not any(phi.is_missing(x, c) and not phi.is_missing(y, c) for c in range(phi.r)):
        raise PreconditionError(f"every color missing at {x} is also missing at {y}")
    return _grow_fan(phi, e, x, skip=beta)


def _path_end(phi, fan, a, b):
    """``P(End(fan); Shift(phi, fan), ab)`` and whether it avoids the pivot."""
    shift_unchecked(phi, fan.edges)
    try:
        path = bicolored_path(phi, fan.edges[-1], fan.pivot, a, b)
    finally:
        unshift(phi, fan.edges)
    return path


def vizing_chain(phi, e, x):
    """A happy single-step chain for a (Delta+mu)-coloring.

    Returns the chain's edge list; the happy fan itself when possible,
    otherwise the fan (or its prefix) followed by its alpha/beta path.
    """
    res = first_vizing_fan(phi, e, x)
    fan, beta = res.fan, res.color
    if phi.is_missing(x, beta):
        return fan.edges
    alpha = phi.missing(x)[0]
    for cand in (fan, res.prefix):
        path = _path_end(phi, cand, alpha, beta)
        if path.v_end != x:
            return cand.edges + path.edges[1:]
    raise InvariantError(
        "neither the fan nor its prefix is successful",
        {"edge": e, "pivot": x, "fan": fan.edges, "j": res.j, "alpha": alpha, "beta": beta},
    )


def color_vizing(graph):
    """Complete proper (Delta+mu)-edge-coloring, edges in id order, pivot min V(e)."""
    if graph.delta < 2:
        return color_trivial(graph, max(1, graph.vizing_bound))
    phi = PartialColoring(graph, graph.vizing_bound)
    for e in range(graph.m):
        u, v = graph.eu[e], graph.ev[e]
        augment_unchecked(phi, vizing_chain(phi, e, u if u < v else v))
    return phi
