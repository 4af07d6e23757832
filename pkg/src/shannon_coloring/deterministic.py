"""Deterministic floor(3*Delta/2)-edge-coloring by batches of disjoint Shannon chains."""

from __future__ import annotations

from dataclasses import dataclass, field

from .chain_builders import shannon_chain
from .chains import augment_unchecked
from .coloring import PartialColoring
from .errors import InvariantError
from .shannon_fans import first_shannon_fan


def gamma_partition(phi, uncolored, fans=None):
    """Bucket uncolored edges by the unordered color pair their first fan picks.

    The pivot of edge ``e`` is its smaller endpoint. Returns a dict mapping
    ``(min, max)`` color pairs to edge-id lists in input order. If ``fans``
    is a dict, each edge's fan result is stored in it.
    """
    g = phi.graph
    buckets = {}
    for e in uncolored:
        u, v = g.eu[e], g.ev[e]
        res = first_shannon_fan(phi, e, u if u < v else v)
        if fans is not None:
            fans[e] = res
        a, b = res.alpha, res.beta
        key = (a, b) if a <= b else (b, a)
        bucket = buckets.get(key)
        if bucket is None:
            buckets[key] = [e]
        else:
            bucket.append(e)
    return buckets


def largest_bucket(buckets):
    """Largest bucket; ties go to the lexicographically smallest pair."""
    return min(buckets.items(), key=lambda kv: (-len(kv[1]), kv[0]))


@dataclass
class BatchResult:
    chains: dict
    augmented: list
    progress: int
    required: float
    vertex_sets: dict = field(default_factory=dict)


def augment_chain_set(phi, batch, required_progress=True, fans=None):
    """Augment a vertex-disjoint subfamily of the chains of one bucket.

    All chains are computed against the incoming coloring first; they are
    then taken in increasing edge-id order and augmented when none of the
    vertices ``V(F) | {vEnd(P)}`` were claimed by an earlier chain.
    ``phi`` is updated in place. ``fans`` optionally maps edges to first-fan
    results already computed against ``phi``.
    """
    g = phi.graph
    batch = sorted(batch)
    chains = {}
    for e in batch:
        u, v = g.eu[e], g.ev[e]
        chains[e] = shannon_chain(phi, e, u if u < v else v, fans.get(e) if fans else None)
    before = phi.colored
    claimed = set()
    augmented = []
    vertex_sets = {}
    for e in batch:
        ch = chains[e]
        guard = set(ch.fan.vertices())
        guard.add(ch.path.v_end)
        vertex_sets[e] = guard
        if guard & claimed:
            continue
        # the end edge must reuse a path color, otherwise a neighbouring
        # chain's fan could lose a missing color
        augment_unchecked(phi, ch.edges, (ch.alpha, ch.beta))
        claimed |= guard
        augmented.append(e)
    progress = phi.colored - before
    delta = g.delta
    required = len(batch) / (20 * delta * delta)
    if required_progress and progress < required:
        raise InvariantError(
            f"batch colored {progress} edges, expected at least {required:.3f}",
            {"batch": batch, "augmented": augmented},
        )
    return BatchResult(chains, augmented, progress, required, vertex_sets)


def color_trivial(graph, r=None):
    """Color a graph of maximum degree <= 1 with a single color."""
    if graph.delta > 1:
        raise ValueError("only matchings are trivially colorable")
    phi = PartialColoring(graph, max(1, r or 1))
    for e in range(graph.m):
        phi.assign(e, 0)
    return phi


@dataclass
class DeterministicRun:
    coloring: PartialColoring
    iterations: int
    batches: list


def color_deterministic(graph, on_batch=None):
    """Complete proper floor(3*Delta/2)-edge-coloring; no randomness.

    ``on_batch`` (if given) receives one stats dict per batch.
    """
    if graph.delta < 2:
        return DeterministicRun(color_trivial(graph, max(1, graph.shannon_bound)), 0, [])
    phi = PartialColoring(graph, graph.shannon_bound)
    uncolored = list(range(graph.m))
    batches = []
    it = 0
    while uncolored:
        it += 1
        fans = {}
        buckets = gamma_partition(phi, uncolored, fans)
        pair, batch = largest_bucket(buckets)
        res = augment_chain_set(phi, batch, fans=fans)
        uncolored = [e for e in uncolored if phi.color[e] < 0]
        stats = {
            "v": 1,
            "kind": "det_batch",
            "batch": it,
            "uncolored_before": len(uncolored) + res.progress,
            "buckets": len(buckets),
            "bucket_sizes": sorted((len(b) for b in buckets.values()), reverse=True),
            "pair": list(pair),
            "chains_computed": len(res.chains),
            "chains_augmented": len(res.augmented),
            "progress": res.progress,
            "required_progress": res.required,
            "dom": phi.colored,
        }
        batches.append(stats)
        if on_batch is not None:
            on_batch(stats)
    return DeterministicRun(phi, it, batches)
