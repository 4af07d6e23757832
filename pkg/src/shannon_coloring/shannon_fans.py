"""Length-at-most-two fans for floor(3*Delta/2)-colorings.

Both constructors take every "min" literally: ties go to the smallest
color index.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chains import Fan
from .coloring import BLANK
from .errors import InvariantError, PreconditionError


@dataclass
class FanResult:
    fan: Fan
    alpha: int
    beta: int


def _min_common(occ, r, bx, by, skip=-2):
    for c in range(r):
        if c != skip and occ[bx + c] < 0 and occ[by + c] < 0:
            return c
    return None


def _min_missing(occ, r, b, skip=-2):
    for c in range(r):
        if c != skip and occ[b + c] < 0:
            return c
    return None


def _second_edge(phi, x, eta):
    """The edge at ``x`` colored ``eta`` and its far endpoint."""
    f = phi.occ[x * phi.r + eta]
    if f < 0:
        raise InvariantError(f"color {eta} is missing at pivot {x}", {"pivot": x, "color": eta})
    return f, phi.graph.other(f, x)


def first_shannon_fan(phi, e, x):
    g = phi.graph
    if phi.color[e] != BLANK:
        raise PreconditionError(f"edge {e} is colored")
    y = g.other(e, x)
    occ, r = phi.occ, phi.r
    bx, by = x * r, y * r
    beta = _min_common(occ, r, bx, by)
    if beta is not None:
        return FanResult(Fan([e], x, [y]), beta, beta)
    eta = _min_missing(occ, r, by)
    f, z = _second_edge(phi, x, eta)
    fan = Fan([e, f], x, [y, z])
    bz = z * r
    beta = _min_common(occ, r, bx, bz)
    if beta is not None:
        return FanResult(fan, beta, beta)
    beta = _min_common(occ, r, by, bz)
    if beta is None:
        # three pairwise disjoint missing sets would need more than r colors
        raise InvariantError(
            "missing sets at x, y, z are pairwise disjoint",
            {"edge": e, "x": x, "y": y, "z": z, "r": r},
        )
    alpha = _min_missing(occ, r, bx)
    return FanResult(fan, alpha, beta)


def next_shannon_fan(phi, e, x, alpha, beta):
    g = phi.graph
    if phi.color[e] != BLANK:
        raise PreconditionError(f"edge {e} is colored")
    y = g.other(e, x)
    occ, r = phi.occ, phi.r
    bx, by = x * r, y * r
    if not (occ[bx + alpha] < 0 and occ[by + alpha] >= 0 and occ[by + beta] < 0):
        raise PreconditionError(
            f"need alpha={alpha} missing at {x} but not at {y}, and beta={beta} missing at {y}"
        )
    delta = _min_common(occ, r, bx, by)
    if delta is not None:
        return FanResult(Fan([e], x, [y]), delta, delta)
    eta = _min_missing(occ, r, by, skip=beta)
    if eta is None:
        raise InvariantError(f"no color other than beta missing at {y}", {"edge": e, "y": y})
    f, z = _second_edge(phi, x, eta)
    fan = Fan([e, f], x, [y, z])
    bz = z * r
    delta = _min_common(occ, r, bx, bz)
    if delta is not None:
        return FanResult(fan, delta, delta)
    delta = _min_common(occ, r, by, bz)
    if delta is None:
        raise InvariantError(
            "missing sets at x, y, z are pairwise disjoint",
            {"edge": e, "x": x, "y": y, "z": z, "r": r},
        )
    if delta == beta:
        return FanResult(fan, alpha, beta)
    gamma = _min_missing(occ, r, bx, skip=alpha)
    return FanResult(fan, gamma, delta)
