"""Structural operations on gehms.

Recolouring (duality and triality), partial duality on hyperedge sets,
hyperedge deletion and contraction with degree-two suppression,
restriction to a hyperedge subset, disjoint union, and the join along
two g-edges.  All operations are pure: they return new gehms.

Hyperedges are addressed by their index in the deterministic
``cycles(g, "br")`` order of the *current* gehm; after any operation the
surviving hyperedges must be re-enumerated.  Deletion and contraction
never touch b- or r-edges outside the removed cycle, so the remaining
b-r cycles keep their relative order under compaction.
"""

from __future__ import annotations

from .core import COLORS, ColoredCycle, Gehm, GehmError, cycles

# Colour permutations as {old colour: new colour} maps.
IDENTITY = {"b": "b", "g": "g", "r": "r"}
DUAL = {"b": "r", "g": "g", "r": "b"}        # geometric dual: swap b and r
TRIAL = {"b": "g", "g": "r", "r": "b"}       # triality: b -> g -> r -> b


def recolor(gehm: Gehm, mu: dict[str, str]) -> Gehm:
    """Turn every c-coloured edge into a mu[c]-coloured edge."""
    if sorted(mu) != list(COLORS) or sorted(mu.values()) != list(COLORS):
        raise GehmError(f"not a permutation of {COLORS}: {mu!r}")
    new = {mu[c]: gehm.matching(c) for c in COLORS}
    return Gehm(gehm.n, new["b"], new["g"], new["r"], gehm.isolates)


def dual(gehm: Gehm) -> Gehm:
    """Swap b and r everywhere: hypervertices and hyperfaces trade places."""
    return recolor(gehm, DUAL)


def trial(gehm: Gehm) -> Gehm:
    return recolor(gehm, TRIAL)


def _hyperedge_cycle(gehm: Gehm, e: int) -> ColoredCycle:
    hh = cycles(gehm, "br")
    if not 0 <= e < len(hh):
        raise GehmError(f"hyperedge index {e} out of range (e={len(hh)})")
    return hh[e]


def partial_dual(gehm: Gehm, edges) -> Gehm:
    """Swap the colours b and r on the cycles of the named hyperedges.

    Every vertex lies on exactly one b-r cycle, so the swap is a per-
    vertex exchange of b- and r-partners and the result is independent
    of the order of ``edges``.  The b-r cycle partition is unchanged, so
    hyperedge indices remain valid on the result.
    """
    hh = cycles(gehm, "br")
    targets = set(edges)
    for e in targets:
        if not 0 <= e < len(hh):
            raise GehmError(f"hyperedge index {e} out of range (e={len(hh)})")
    b, r = list(gehm.b), list(gehm.r)
    for e in targets:
        for u in hh[e].vertices:
            b[u], r[u] = r[u], b[u]
    return Gehm(gehm.n, tuple(b), gehm.g, tuple(r), gehm.isolates)


def delete(gehm: Gehm, e: int) -> Gehm:
    """Remove hyperedge ``e``: drop its b-edges, contract its r-edges and
    suppress the resulting degree-two vertices.

    Realised in one pass: all cycle vertices disappear and the g-edges
    that entered the cycle are chained together through contracted
    r-edges.  A g-chain that closes on itself without ever leaving the
    cycle becomes one new isolate.  Survivors are renumbered by
    order-preserving compaction.
    """
    cyc = set(_hyperedge_cycle(gehm, e).vertices)
    b, g, r = gehm.b, gehm.g, gehm.r

    new_g_links: list[tuple[int, int]] = []
    consumed: set[int] = set()

    # chains entering from outside the cycle
    for x in range(gehm.n):
        if x in cyc or g[x] not in cyc or x in consumed:
            continue
        u = g[x]
        while True:
            consumed.add(u)
            w = r[u]
            consumed.add(w)
            y = g[w]
            if y not in cyc:
                break
            u = y
        consumed.add(y)
        new_g_links.append((x, y))

    # chains that never leave the cycle: one isolate each
    new_isolates = 0
    for u0 in sorted(cyc - consumed):
        if u0 in consumed:
            continue
        u = u0
        while True:
            consumed.add(u)
            w = r[u]
            consumed.add(w)
            u = g[w]
            if u == u0:
                break
        new_isolates += 1

    survivors = [x for x in range(gehm.n) if x not in cyc]
    index = {x: i for i, x in enumerate(survivors)}
    nb = tuple(index[b[x]] for x in survivors)
    nr = tuple(index[r[x]] for x in survivors)
    ng = [index[g[x]] if g[x] not in cyc else -1 for x in survivors]
    for x, y in new_g_links:
        ng[index[x]] = index[y]
        ng[index[y]] = index[x]
    return Gehm(len(survivors), nb, tuple(ng), nr, gehm.isolates + new_isolates)


def contract(gehm: Gehm, e: int) -> Gehm:
    """Contract hyperedge ``e``: the partial dual at ``e`` followed by
    deletion (equivalently, deletion with the roles of b and r swapped)."""
    return delete(partial_dual(gehm, [e]), e)


def restrict(gehm: Gehm, keep) -> Gehm:
    """Delete every hyperedge not in ``keep`` (order immaterial)."""
    ne = len(cycles(gehm, "br"))
    keep = set(keep)
    for e in keep:
        if not 0 <= e < ne:
            raise GehmError(f"hyperedge index {e} out of range (e={ne})")
    out = gehm
    # largest index first: smaller indices stay valid after each deletion
    for e in sorted(set(range(ne)) - keep, reverse=True):
        out = delete(out, e)
    return out


def disjoint_union(g1: Gehm, g2: Gehm) -> Gehm:
    n1 = g1.n
    arrays = []
    for c in COLORS:
        arrays.append(tuple(g1.matching(c)) + tuple(x + n1 for x in g2.matching(c)))
    return Gehm(n1 + g2.n, arrays[0], arrays[1], arrays[2],
                g1.isolates + g2.isolates)


def join(g1: Gehm, e1: tuple[int, int], g2: Gehm, e2: tuple[int, int]) -> Gehm:
    """Join along the g-edges ``e1 = (x1, y1)`` of g1 and ``e2 = (x2, y2)``
    of g2: form the disjoint union, then replace the two g-edges by
    x1-x2 and y1-y2.  Isolates carry no vertices, so they can never be
    named here."""
    for gg, (x, y), name in ((g1, e1, "first"), (g2, e2, "second")):
        if not (0 <= x < gg.n and 0 <= y < gg.n and gg.g[x] == y):
            raise GehmError(f"{name} join edge {x},{y} is not a g-edge")
    x1, y1 = e1
    x2, y2 = e2[0] + g1.n, e2[1] + g1.n
    u = disjoint_union(g1, g2)
    g = list(u.g)
    g[x1], g[x2] = x2, x1
    g[y1], g[y2] = y2, y1
    return Gehm(u.n, u.b, tuple(g), u.r, u.isolates)
