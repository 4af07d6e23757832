"""Counter-style random streams derived from one master seed.

Every consumer asks for ``stream(seed, *key)`` with a key naming what the
randomness is for (stage, edge id, attempt...). Streams for distinct keys are
independent, and the result never depends on the order in which streams are
requested, so sequential and logically parallel runs agree bit for bit.
"""

import hashlib
import random


def derive_seed(seed, *key):
    payload = repr((int(seed),) + tuple(key)).encode()
    return int.from_bytes(hashlib.blake2b(payload, digest_size=8).digest(), "little")


def stream(seed, *key):
    return random.Random(derive_seed(seed, *key))


class LazyStream:
    """A :func:`stream` that only seeds its generator on first use.

    Most chain searches finish without drawing anything, and seeding
    ``random.Random`` dominates their cost.
    """

    __slots__ = ("seed", "_rng")

    def __init__(self, seed):
        self.seed = seed
        self._rng = None

    def __getattr__(self, name):
        rng = self._rng
        if rng is None:
            rng = self._rng = random.Random(self.seed)
        return getattr(rng, name)


def edge_stream(seed, *key):
    """``(pivot_bit, lazy_stream)`` for one chain search.

    The pivot bit is the top bit of the derived seed, so choosing a pivot
    costs nothing beyond the hash.
    """
    h = derive_seed(seed, *key)
    return h >> 63, LazyStream(h)
