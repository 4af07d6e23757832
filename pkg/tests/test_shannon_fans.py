import random
from collections import Counter

import pytest

from shannon_coloring.coloring import BLANK, PartialColoring, from_colors
from shannon_coloring.errors import PreconditionError
from shannon_coloring.multigraph import Multigraph, random_multigraph
from shannon_coloring.shannon_fans import first_shannon_fan, next_shannon_fan

from conftest import classify, random_partial


def instances(count, seed=0):
    """``count`` random (phi, e, x) triples with r = floor(3*Delta/2)."""
    rng = random.Random(seed)
    made = 0
    while made < count:
        d = rng.choice([2, 3, 4, 5, 6])
        g = random_multigraph(rng.choice([6, 10, 20]), d, rng.randint(1, d), rng.randrange(10**9))
        if g.delta < 2:
            continue
        phi = random_partial(g, rng, keep=rng.choice([0.8, 1.0]))
        for e in phi.uncolored_edges()[:4]:
            for x in (g.eu[e], g.ev[e]):
                if made == count:
                    return
                yield phi, e, x
                made += 1


def test_blank_coloring_gives_happy_edge():
    g = Multigraph.from_edges(3, [(0, 1), (1, 2)])
    res = first_shannon_fan(PartialColoring(g, 3), 0, 0)
    assert (res.fan.edges, res.alpha, res.beta) == ([0], 0, 0)


def happy_fan_graph():
    # y=0, x=1, z=2; x uses {3,4,5}, y uses {0,1,2}; f=(x,z) colored 3
    edges = [(1, 0), (1, 2), (1, 3), (1, 4), (0, 5), (0, 6), (0, 7)]
    g = Multigraph.from_edges(8, edges)
    return g, from_colors(g, 6, [BLANK, 3, 4, 5, 0, 1, 2])


def test_length_two_happy_fan():
    g, phi = happy_fan_graph()
    res = first_shannon_fan(phi, 0, 1)
    assert res.fan.edges == [0, 1]
    assert res.alpha == res.beta == 0
    assert phi.is_missing(1, res.beta)
    assert classify(phi, res.fan, res.alpha, res.beta) == "happy"


def test_first_fan_cases_cover_every_instance():
    cases = Counter()
    for phi, e, x in instances(10_000):
        res = first_shannon_fan(phi, e, x)
        fan, a, b = res.fan, res.alpha, res.beta
        assert phi.is_missing(x, a)
        assert all(phi.color[f] not in (a, b) for f in fan.edges)
        status = classify(phi, fan, a, b)
        assert status != "unshiftable"
        if phi.is_missing(x, b) and status == "happy":
            cases["happy"] += 1
        elif len(fan) == 2 and status == "successful":
            cases["successful fan"] += 1
        else:
            # only remaining option: the bare edge is successful
            assert classify(phi, fan.prefix(1), a, b) == "successful", (fan, a, b)
            cases["successful edge"] += 1
            if len(fan) == 2:
                assert status == "disappointed"
                cases["disappointed fan"] += 1
    assert sum(cases.values()) - cases["disappointed fan"] == 10_000
    assert all(cases[k] > 0 for k in ("happy", "successful fan", "successful edge", "disappointed fan"))


def next_instances(count):
    for phi, e, x in instances(count * 3, seed=1):
        g = phi.graph
        y = g.other(e, x)
        alphas = [c for c in phi.missing(x) if not phi.is_missing(y, c)]
        if not alphas:
            continue
        yield phi, e, x, alphas[-1], phi.missing(y)[-1]
        count -= 1
        if not count:
            return


def test_next_fan_cases_cover_every_instance():
    cases = Counter()
    n = 0
    for phi, e, x, alpha, beta in next_instances(5_000):
        n += 1
        res = next_shannon_fan(phi, e, x, alpha, beta)
        fan, gamma, delta = res.fan, res.alpha, res.beta
        assert all(phi.color[f] not in (alpha, beta, gamma, delta) for f in fan.edges)
        status = classify(phi, fan, gamma, delta)
        if phi.is_missing(x, delta) and status == "happy":
            cases["happy"] += 1
            continue
        if delta == beta:
            assert len(fan) == 2 and gamma == alpha
            assert classify(phi, fan, alpha, beta) in ("successful", "disappointed")
            cases["same colors"] += 1
            continue
        assert {gamma, delta}.isdisjoint({alpha, beta})
        if len(fan) == 2 and status == "successful":
            cases["successful fan"] += 1
        else:
            assert classify(phi, fan.prefix(1), gamma, delta) == "successful"
            cases["successful edge"] += 1
    assert n == 5_000
    assert all(cases[k] > 0 for k in ("happy", "same colors", "successful fan", "successful edge"))


def test_next_fan_precondition():
    g, phi = happy_fan_graph()
    # color 3 is present at x, so it cannot play alpha
    with pytest.raises(PreconditionError):
        next_shannon_fan(phi, 0, 1, 3, 4)
    with pytest.raises(PreconditionError):
        next_shannon_fan(phi, 1, 1, 0, 3)
