"""Randomized multi-step Shannon chains and the sequential solver built on them."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field

from .chain_builders import first_chain, next_chain
from .chains import (
    ab_degree,
    augment_unchecked,
    fan_status,
    shift_unchecked,
    unshift,
)
from .coloring import PartialColoring
from .deterministic import color_trivial
from .errors import InvariantError, PreconditionError
from .rng import edge_stream, stream
from .verify import check_non_intersecting, chain_edges

DEBUG_ENV = "SHANNON_DEBUG_INVARIANTS"


def debug_enabled(debug=None):
    if debug is not None:
        return bool(debug)
    return os.environ.get(DEBUG_ENV, "") not in ("", "0")


def default_ell(delta):
    return max(16, 4 * delta * delta)


@dataclass
class Step:
    """One committed step ``F_i + P_i``; ``full`` is the 2*ell path ``P_i`` was cut from."""

    fan: object
    path: object
    full: object
    alpha: int
    beta: int

    @property
    def edges(self):
        return self.fan.edges + self.path.edges[1:]


@dataclass
class ExecutionRecord:
    edge: int
    pivot: int
    d: list = field(default_factory=list)
    iterations: int = 0
    outcome: str = "success"
    terminus: tuple = ()
    chain_length: int = 0
    # (j, k, kind, element) for every backward iteration
    intersections: list = field(default_factory=list)

    def as_dict(self):
        return {
            "v": 1,
            "kind": "mssa",
            "edge": self.edge,
            "pivot": self.pivot,
            "d": list(self.d),
            "iterations": self.iterations,
            "chain_length": self.chain_length,
            "outcome": self.outcome,
        }

    def to_json(self):
        return json.dumps(self.as_dict(), sort_keys=True)


@dataclass
class MssaResult:
    success: bool
    steps: list
    record: ExecutionRecord

    @property
    def edges(self):
        return chain_edges(self.steps) if self.steps else []


def _candidate_step(ch):
    return Step(ch.fan, ch.path, ch.path, ch.alpha, ch.beta)


def _first_hit(ch, vmark, emark):
    """First marked element of the candidate in chain order, as ``(owner, kind, element)``."""
    fan, path = ch.fan, ch.path
    for v in (fan.v_start, fan.pivot):
        if v in vmark:
            return vmark[v], "vertex", v
    if fan.edges[0] in emark:
        return emark[fan.edges[0]], "edge", fan.edges[0]
    for f, y in zip(fan.edges[1:], fan.ends[1:]):
        if y in vmark:
            return vmark[y], "vertex", y
        if f in emark:
            return emark[f], "edge", f
    verts = path.vertices
    for i in range(1, len(path.edges)):
        v = verts[i + 1]
        if v in vmark:
            return vmark[v], "vertex", v
        f = path.edges[i]
        if f in emark:
            return emark[f], "edge", f
    return None


class _Audit:
    """Debug-mode rescans of the loop invariants and of Chain1/Chain2."""

    def __init__(self, phi, ell):
        self.orig = phi.copy()
        self.ell = ell

    def check(self, psi, steps, cand, vmark, emark, e, x):
        g = psi.graph
        # Inv1
        if steps:
            last = steps[-1].path
            if cand.fan.edges[0] != last.edges[-1] or cand.fan.v_start != last.v_end:
                raise InvariantError("Inv1: candidate not glued to chain end", self._state(steps, cand))
        elif cand.fan.edges[0] != e or cand.fan.pivot != x:
            raise InvariantError("Inv1: first candidate does not start at e", self._state(steps, cand))
        # Inv2
        verdict = check_non_intersecting(steps + [_candidate_step(cand)])
        if not verdict:
            raise InvariantError("Inv2: " + verdict.reason, self._state(steps, cand))
        try:
            shift_unchecked(psi, cand.edges)
        except Exception as exc:
            raise InvariantError("Inv2: candidate not shiftable", self._state(steps, cand)) from exc
        unshift(psi, cand.edges)
        # Inv3
        status = fan_status(psi, cand.fan, cand.alpha, cand.beta)
        if status in ("unhopeful", "unshiftable") and not cand.happy_fan:
            raise InvariantError(f"Inv3: candidate fan is {status}", self._state(steps, cand))
        if status == "disappointed" and len(cand.path) != 2 * self.ell:
            raise InvariantError("Inv3: disappointed fan with short path", self._state(steps, cand))
        # visited maps mirror the stack
        want_v, want_e = {}, {}
        for i, s in enumerate(steps):
            for v in s.fan.vertices():
                want_v[v] = i
            for f in s.path.internal_edges():
                want_e[f] = i
        if want_v != vmark or want_e != emark:
            raise InvariantError("visited maps disagree with the step stack", self._state(steps, cand))
        self.check_chain_facts(steps)

    def check_chain_facts(self, steps):
        phi = self.orig
        for j, s in enumerate(steps):
            a, b = s.alpha, s.beta
            if ab_degree(phi, s.fan.v_end, a, b) != 1:
                raise InvariantError(f"Chain1 fails at step {j}", {"step": j})
            for f in s.path.edges[1:]:
                if phi.color[f] not in (a, b):
                    raise InvariantError(f"Chain2 fails at step {j}, edge {f}", {"step": j, "edge": f})

    @staticmethod
    def _state(steps, cand):
        return {
            "steps": [(s.fan.edges, s.path.edges, s.alpha, s.beta) for s in steps],
            "candidate": (cand.fan.edges, cand.path.edges, cand.alpha, cand.beta),
        }


def mssa(phi, e, x, ell, rng, max_iters=None, debug=None):
    """Build a happy multi-step Shannon chain from the uncolored edge ``e``.

    ``phi`` is shifted in place while the search runs and is restored exactly
    before returning, whatever the outcome. On success the caller augments
    ``result.edges``. ``max_iters`` bounds the number of non-final loop
    iterations; when it is exceeded the result has ``success=False``.
    """
    if ell < 3:
        raise PreconditionError("ell must be at least 3")
    g = phi.graph
    audit = _Audit(phi, ell) if debug_enabled(debug) else None
    record = ExecutionRecord(edge=e, pivot=x)
    cand = first_chain(phi, e, x, ell)
    if audit is None and len(cand.path) < 2 * ell:
        record.terminus = (e, g.other(e, x))
        record.chain_length = len(cand)
        return MssaResult(True, [_candidate_step(cand)], record)
    steps = []
    sources = []  # candidate each committed step was cut from
    vmark = {}
    emark = {}
    two_ell = 2 * ell
    success = False
    try:
        while True:
            if audit is not None:
                audit.check(phi, steps, cand, vmark, emark, e, x)
            if len(cand.path) < two_ell:
                success = True
                break
            if max_iters is not None and record.iterations >= max_iters:
                break
            record.iterations += 1
            k = len(steps)
            path = cand.path.prefix(rng.randint(ell, two_ell - 1))
            beta = phi.color[path.edges[-1]]
            alpha = phi.color[path.edges[-2]]
            step = Step(cand.fan, path, cand.path, alpha, beta)
            shift_unchecked(phi, step.edges)
            steps.append(step)
            sources.append(cand)
            for v in step.fan.vertices():
                vmark[v] = k
            for f in path.internal_edges():
                emark[f] = k
            e2 = path.edges[-1]
            w = path.v_end
            u = g.other(e2, w)
            nxt = next_chain(phi, e2, u, alpha, beta, ell)
            hit = _first_hit(nxt, vmark, emark)
            if hit is not None:
                j, kind, elem = hit
                while len(steps) > j:
                    s = steps.pop()
                    cand = sources.pop()
                    unshift(phi, s.edges)
                    for v in s.fan.vertices():
                        del vmark[v]
                    for f in s.path.internal_edges():
                        del emark[f]
                record.d.append(-(k - j))
                record.intersections.append((j, k, kind, elem))
            elif 2 <= len(nxt.path) < two_ell and nxt.path.v_end == nxt.fan.pivot:
                raise InvariantError(
                    "short candidate path returns to its pivot",
                    {"edge": e, "pivot": x, "steps": [s.edges for s in steps], "next": nxt.edges},
                )
            else:
                record.d.append(1)
                cand = nxt
    finally:
        for s in reversed(steps):
            unshift(phi, s.edges)
    if steps:
        last = steps[-1].path
        record.terminus = (last.edges[-1], last.v_end)
    else:
        record.terminus = (e, g.other(e, x))
    if success:
        record.outcome = "success"
        steps.append(_candidate_step(cand))
    else:
        record.outcome = "budget-exhausted"
    record.chain_length = len(chain_edges(steps)) if steps else 1
    return MssaResult(success, steps, record)


@dataclass
class SequentialRun:
    coloring: PartialColoring
    ell: int
    iterations: list  # T_i in coloring order
    records: list

    @property
    def total_iterations(self):
        return sum(self.iterations)


def color_sequential_random(graph, ell=None, seed=0, debug=None, on_record=None):
    """Complete floor(3*Delta/2)-edge-coloring, one multi-step chain per edge.

    Edges and pivots are drawn uniformly at random from streams derived from
    ``seed``; no iteration budget is imposed.
    """
    if graph.delta < 2:
        return SequentialRun(color_trivial(graph, max(1, graph.shannon_bound)), ell or 0, [], [])
    if ell is None:
        ell = default_ell(graph.delta)
    debug = debug_enabled(debug)
    phi = PartialColoring(graph, graph.shannon_bound)
    order_rng = stream(seed, "seq")
    pending = list(range(graph.m))
    iterations = []
    records = []
    while pending:
        i = order_rng.randrange(len(pending))
        e = pending[i]
        pending[i] = pending[-1]
        pending.pop()
        bit, rng = edge_stream(seed, "seq", e)
        x = graph.ev[e] if bit else graph.eu[e]
        res = mssa(phi, e, x, ell, rng, debug=debug)
        augment_unchecked(phi, res.edges)
        iterations.append(res.record.iterations)
        records.append(res.record)
        if on_record is not None:
            on_record(res.record)
    return SequentialRun(phi, ell, iterations, records)
