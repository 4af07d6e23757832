"""Round-synchronous simulation of the randomized LOCAL coloring algorithm.

Each stage runs a budgeted multi-step chain search from every uncolored
edge against the same frozen coloring, links edges whose chains share a
vertex, keeps a random independent set of that conflict graph and augments
its chains. Per-edge searches run one after another in edge-id order. Each
search shifts the shared coloring and restores it exactly before the next
begins, which is observationally the same as giving every search a private
overlay of the frozen base.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .chains import augment_unchecked
from .coloring import PartialColoring
from .deterministic import color_trivial
from .errors import InvariantError, StageStarvation
from .mssa import debug_enabled, default_ell, mssa
from .rng import edge_stream, stream

# rounds charged per (ell * t): one iteration gathers a ball of radius at
# most 2*ell + 2 <= 3*ell around the current chain end
ROUND_CONSTANT = 3


def default_budget(n):
    return max(1, math.ceil(4 * math.log2(max(n, 2))))


def conflict_graph(vertex_sets):
    """Adjacency sets on the keys of ``vertex_sets``; two keys conflict if their sets meet."""
    owners = {}
    for key, verts in vertex_sets.items():
        for v in verts:
            owners.setdefault(v, []).append(key)
    adj = {key: set() for key in vertex_sets}
    for group in owners.values():
        if len(group) > 1:
            for a in group:
                adj[a].update(group)
    for key, nbrs in adj.items():
        nbrs.discard(key)
    return adj


def random_independent_set(adjacency, rng):
    """Vertices whose uniform draw strictly beats every neighbour's draw.

    Draws are taken in sorted vertex order so the result depends only on
    ``rng`` and the graph.
    """
    keys = sorted(adjacency)
    draw = {v: rng.random() for v in keys}
    return [v for v in keys if all(draw[v] > draw[u] for u in adjacency[v])]


@dataclass
class StageResult:
    stage: int
    uncolored: list
    survivors: list
    chains: dict
    vertex_sets: dict
    conflicts: dict
    independent: list
    colored: int
    rounds_charged: int
    base_colors: list = field(repr=False, default_factory=list)
    records: dict = field(repr=False, default_factory=dict)

    @property
    def conflict_edges(self):
        return sum(len(nb) for nb in self.conflicts.values()) // 2

    def stats(self):
        s = len(self.survivors)
        return {
            "v": 1,
            "kind": "dist_stage",
            "stage": self.stage,
            "U": len(self.uncolored),
            "S": s,
            "gamma_edges": self.conflict_edges,
            "mean_deg_gamma": (2 * self.conflict_edges / s) if s else 0.0,
            "W": len(self.independent),
            "colored": self.colored,
            "rounds_charged": self.rounds_charged,
            "round_constant": ROUND_CONSTANT,
        }


def chain_vertices(graph, edges):
    verts = set()
    for f in edges:
        verts.add(graph.eu[f])
        verts.add(graph.ev[f])
    return verts


def stage(phi, uncolored, ell, t, seed, index, debug=None):
    """One stage; augments the independent set's chains into ``phi`` in place."""
    g = phi.graph
    debug = debug_enabled(debug)
    base = list(phi.color)
    chains = {}
    records = {}
    for e in sorted(uncolored):
        bit, rng = edge_stream(seed, "dist", index, e)
        x = g.ev[e] if bit else g.eu[e]
        res = mssa(phi, e, x, ell, rng, max_iters=t, debug=debug)
        records[e] = res.record
        if res.success:
            chains[e] = res.edges
    if phi.color != base:
        raise InvariantError("a chain search leaked shifts into the base coloring", {"stage": index})
    limit = (2 * ell + 2) * (t + 1)
    for e, edges in chains.items():
        if len(edges) > limit:
            raise InvariantError(f"chain of edge {e} has {len(edges)} edges, limit {limit}")
    vertex_sets = {e: chain_vertices(g, edges) for e, edges in chains.items()}
    adj = conflict_graph(vertex_sets)
    chosen = random_independent_set(adj, stream(seed, "dist", index, "independent-set"))
    before = phi.colored
    for e in chosen:
        augment_unchecked(phi, chains[e])
    return StageResult(
        stage=index,
        uncolored=sorted(uncolored),
        survivors=sorted(chains),
        chains=chains,
        vertex_sets=vertex_sets,
        conflicts=adj,
        independent=chosen,
        colored=phi.colored - before,
        rounds_charged=ROUND_CONSTANT * ell * t,
        base_colors=base,
        records=records,
    )


@dataclass
class DistributedRun:
    coloring: PartialColoring
    stages: int
    rounds: int
    ell: int
    budget: int
    stage_stats: list


def color_distributed(graph, ell=None, t=None, seed=0, max_idle=50, debug=None, on_stage=None):
    """Complete floor(3*Delta/2)-edge-coloring by simulated LOCAL stages.

    ``on_stage`` receives every :class:`StageResult`. Raises
    :class:`StageStarvation` after ``max_idle`` consecutive stages that
    color nothing.
    """
    ell = default_ell(graph.delta) if ell is None else ell
    t = default_budget(graph.n) if t is None else t
    if graph.delta < 2:
        phi = color_trivial(graph, max(1, graph.shannon_bound))
        stages = 1 if graph.m else 0
        stats = []
        if graph.m:
            stats.append({
                "v": 1, "kind": "dist_stage", "stage": 1, "U": graph.m, "S": graph.m,
                "gamma_edges": 0, "mean_deg_gamma": 0.0, "W": graph.m, "colored": graph.m,
                "rounds_charged": 1, "round_constant": ROUND_CONSTANT,
            })
        return DistributedRun(phi, stages, stages, ell, t, stats)
    phi = PartialColoring(graph, graph.shannon_bound)
    uncolored = list(range(graph.m))
    index = 0
    rounds = 0
    idle = 0
    stats = []
    while uncolored:
        index += 1
        res = stage(phi, uncolored, ell, t, seed, index, debug=debug)
        rounds += res.rounds_charged
        stats.append(res.stats())
        if on_stage is not None:
            on_stage(res)
        if res.colored == 0:
            idle += 1
            if idle >= max_idle:
                raise StageStarvation(
                    f"no progress in {idle} consecutive stages; "
                    f"{len(uncolored)} edges uncolored, last stage S={len(res.survivors)}"
                )
        else:
            idle = 0
        uncolored = [e for e in uncolored if phi.color[e] < 0]
    return DistributedRun(phi, index, rounds, ell, t, stats)
