"""Fan-plus-path Shannon chains, complete or truncated to a length cap."""

from __future__ import annotations

from dataclasses import dataclass

from .chains import Fan, PathChain, bicolored_path, shift_unchecked, single_fan, unshift
from .shannon_fans import first_shannon_fan, next_shannon_fan


@dataclass
class ShannonChain:
    """``fan + path`` where ``path`` starts at the fan's last edge.

    ``alpha``/``beta`` are the path colors, ``alpha`` on the first colored
    path edge. For a happy fan the path is the single edge ``End(fan)`` and
    ``alpha == beta`` is the color that will finish it.
    """

    fan: Fan
    path: PathChain
    alpha: int
    beta: int

    @property
    def edges(self):
        return self.fan.edges + self.path.edges[1:]

    @property
    def happy_fan(self):
        return len(self.path) == 1 and self.alpha == self.beta

    def __len__(self):
        return len(self.fan) + len(self.path) - 1


def _end_path(fan):
    return PathChain([fan.edges[-1]], [fan.pivot, fan.v_end])


def path_after_fan(phi, fan, a, b, cap=None):
    """``P(End(fan); Shift(phi, fan), ab)`` with ``vStart`` at the pivot."""
    if len(fan) > 1:
        shift_unchecked(phi, fan.edges)
    try:
        return bicolored_path(phi, fan.edges[-1], fan.pivot, a, b, cap)
    finally:
        if len(fan) > 1:
            unshift(phi, fan.edges)


def shannon_chain(phi, e, x, fan_result=None):
    """A happy Shannon chain starting at the uncolored edge ``e``, pivot ``x``.

    ``fan_result`` may carry the first fan already computed for ``(phi, e, x)``.
    """
    res = fan_result or first_shannon_fan(phi, e, x)
    fan, a, b = res.fan, res.alpha, res.beta
    if phi.is_missing(x, b):
        return ShannonChain(fan, _end_path(fan), b, b)
    path = path_after_fan(phi, fan, a, b)
    if path.v_end != x:
        return ShannonChain(fan, path, a, b)
    return ShannonChain(single_fan(phi.graph, e, x), bicolored_path(phi, e, x, a, b), a, b)


def first_chain(phi, e, x, ell):
    """First step of a multi-step chain; paths are capped at ``2*ell`` edges."""
    cap = 2 * ell
    res = first_shannon_fan(phi, e, x)
    fan, a, b = res.fan, res.alpha, res.beta
    if phi.is_missing(x, b):
        return ShannonChain(fan, _end_path(fan), b, b)
    path = path_after_fan(phi, fan, a, b, cap + 1)
    if len(path) > cap or path.v_end != x:
        return ShannonChain(fan, path.prefix(cap), a, b)
    return ShannonChain(single_fan(phi.graph, e, x), bicolored_path(phi, e, x, a, b, cap), a, b)


def next_chain(phi, e, x, alpha, beta, ell):
    """Subsequent step; ``alpha``/``beta`` are the previous step's path colors."""
    cap = 2 * ell
    res = next_shannon_fan(phi, e, x, alpha, beta)
    fan, g, d = res.fan, res.alpha, res.beta
    if phi.is_missing(x, d):
        return ShannonChain(fan, _end_path(fan), d, d)
    if d == beta:
        return ShannonChain(fan, path_after_fan(phi, fan, alpha, beta, cap), alpha, beta)
    path = path_after_fan(phi, fan, g, d, cap + 1)
    if len(path) > cap or path.v_end != x:
        return ShannonChain(fan, path.prefix(cap), g, d)
    return ShannonChain(single_fan(phi.graph, e, x), bicolored_path(phi, e, x, g, d, cap), g, d)
