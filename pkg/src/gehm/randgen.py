"""Seeded random gehms.

Each colour class is an independent uniform random perfect matching
(shuffle and pair consecutive elements), which covers orientable,
non-orientable and high-genus instances alike.  Plane instances are
obtained by rejection on Euler genus.
"""

from __future__ import annotations

import random

from .core import Gehm, GehmError, stats


def random_matching(rng: random.Random, n: int) -> tuple[int, ...]:
    xs = list(range(n))
    rng.shuffle(xs)
    arr = [0] * n
    for i in range(0, n, 2):
        a, b = xs[i], xs[i + 1]
        arr[a], arr[b] = b, a
    return tuple(arr)


def random_gehm(rng: random.Random, n: int, isolates: int = 0) -> Gehm:
    if n % 2 != 0:
        raise GehmError(f"n must be even, got {n}")
    return Gehm(n, random_matching(rng, n), random_matching(rng, n),
                random_matching(rng, n), isolates)


def random_gehms(seed: int, count: int, max_vertices: int,
                 isolate_chance: float = 0.2):
    """A reproducible stream of ``count`` random gehms with sizes cycling
    up to ``max_vertices``, smallest first."""
    rng = random.Random(seed)
    sizes = sorted(
        rng.randrange(2, max_vertices + 1, 2) if max_vertices >= 2 else 0
        for _ in range(count)
    )
    for n in sizes:
        iso = 1 if rng.random() < isolate_chance else 0
        yield random_gehm(rng, n, iso)


def random_plane_gehm(rng: random.Random, max_vertices: int,
                      max_tries: int = 10000) -> Gehm:
    """Rejection-sample a connected gehm of Euler genus zero."""
    for _ in range(max_tries):
        n = rng.randrange(2, max_vertices + 1, 2)
        g = random_gehm(rng, n)
        st = stats(g)
        if st.euler_genus == 0 and st.k == 1:
            return g
    raise RuntimeError("no plane connected gehm found; widen the search")
