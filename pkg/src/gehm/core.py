"""Graph-encoded hypermaps.

A hypermap is stored as a *gehm*: a properly edge 3-coloured cubic graph
on vertices ``0..n-1`` whose colour classes ``b``, ``g``, ``r`` are three
fixed-point-free involutions (perfect matchings), plus a count of
*isolates* (free g-coloured circles carrying no vertices).  The coloured
2-factor cycles carry the hypermap structure:

    b-r cycles  = hyperedges      (degree = half the cycle's edge count)
    g-r cycles  = hypervertices
    b-g cycles  = hyperfaces

Isolates count as one hypervertex, one hyperface and one component each.
Euler genus is ``2k - v - e + d - f`` and a gehm is orientable exactly
when the underlying cubic graph is bipartite.

Everything in this module is immutable and side-effect free.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

COLORS = ("b", "g", "r")
PAIRS = ("br", "gr", "bg")


class GehmError(ValueError):
    """Raised for structurally invalid gehm data."""


def _check_involution(arr: tuple[int, ...], n: int, color: str) -> None:
    if len(arr) != n:
        raise GehmError(f"matching {color}: length {len(arr)} does not match n={n}")
    for i, j in enumerate(arr):
        if not isinstance(j, int) or j < 0 or j >= n:
            raise GehmError(f"matching {color}: entry {j} at vertex {i} out of range")
        if j == i:
            raise GehmError(f"fixed point in matching {color} at vertex {i}")
        if arr[j] != i:
            raise GehmError(f"matching {color}: not an involution at vertex {i}")


@dataclass(frozen=True)
class Gehm:
    """A gehm: three perfect matchings on ``0..n-1`` plus an isolate count.

    Each matching is stored as an involution array: ``b[i]`` is the
    b-partner of vertex ``i``.  The three matchings may share pairs
    (parallel edges of different colours are legal) but none may have a
    fixed point, so ``n`` is always even.
    """

    n: int
    b: tuple[int, ...]
    g: tuple[int, ...]
    r: tuple[int, ...]
    isolates: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "b", tuple(self.b))
        object.__setattr__(self, "g", tuple(self.g))
        object.__setattr__(self, "r", tuple(self.r))
        if self.n < 0:
            raise GehmError(f"n must be non-negative, got {self.n}")
        if self.n % 2 != 0:
            raise GehmError(f"n must be even, got {self.n}")
        if self.isolates < 0:
            raise GehmError(f"isolates must be non-negative, got {self.isolates}")
        for color in COLORS:
            _check_involution(self.matching(color), self.n, color)

    def matching(self, color: str) -> tuple[int, ...]:
        if color == "b":
            return self.b
        if color == "g":
            return self.g
        if color == "r":
            return self.r
        raise GehmError(f"unknown color {color!r}")

    # -- JSON contract -------------------------------------------------
    #
    # {"n": <int>, "b": [[i,j],...], "g": [[i,j],...], "r": [[i,j],...],
    #  "isolates": <int>}
    #
    # Each pair list covers 0..n-1 exactly once per colour; pairs may
    # repeat across colours.

    @classmethod
    def from_pairs(cls, n, b, g, r, isolates=0) -> "Gehm":
        arrays = []
        for color, pairs in (("b", b), ("g", g), ("r", r)):
            arr = [-1] * n
            for pair in pairs:
                if len(pair) != 2:
                    raise GehmError(f"matching {color}: {pair!r} is not a pair")
                i, j = pair
                if i == j:
                    raise GehmError(f"fixed point in matching {color} at vertex {i}")
                for u, w in ((i, j), (j, i)):
                    if not 0 <= u < n:
                        raise GehmError(f"matching {color}: vertex {u} out of range")
                    if arr[u] != -1:
                        raise GehmError(f"matching {color}: vertex {u} covered twice")
                    arr[u] = w
            if any(x == -1 for x in arr):
                missing = next(i for i, x in enumerate(arr) if x == -1)
                raise GehmError(f"matching {color}: vertex {missing} not covered")
            arrays.append(tuple(arr))
        return cls(n, arrays[0], arrays[1], arrays[2], isolates)

    def pairs(self, color: str) -> list[list[int]]:
        arr = self.matching(color)
        return [[i, arr[i]] for i in range(self.n) if i < arr[i]]

    def to_obj(self) -> dict:
        return {
            "n": self.n,
            "b": self.pairs("b"),
            "g": self.pairs("g"),
            "r": self.pairs("r"),
            "isolates": self.isolates,
        }

    @classmethod
    def from_obj(cls, obj: dict) -> "Gehm":
        try:
            n = obj["n"]
            b, g, r = obj["b"], obj["g"], obj["r"]
        except (KeyError, TypeError) as exc:
            raise GehmError(f"missing gehm field: {exc}") from None
        return cls.from_pairs(n, b, g, r, obj.get("isolates", 0))


def dumps(gehm: Gehm) -> str:
    return json.dumps(gehm.to_obj())


def loads(text: str) -> Gehm:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GehmError(f"invalid JSON: {exc}") from None
    return Gehm.from_obj(obj)


def triple_edge() -> Gehm:
    """The smallest nonempty gehm: two vertices joined by a b, a g and an
    r edge (one hypervertex, one degree-1 hyperedge, one hyperface)."""
    return Gehm(2, (1, 0), (1, 0), (1, 0))


def isolate(count: int = 1) -> Gehm:
    return Gehm(0, (), (), (), isolates=count)


# ---------------------------------------------------------------------
# Coloured cycles


@dataclass(frozen=True)
class ColoredCycle:
    """One alternating two-coloured cycle, as a cyclic vertex sequence.

    The sequence starts at the cycle's least vertex and steps first along
    the alphabetically-first colour of the pair, which fixes a unique
    representative of the cyclic order.  ``degree`` is half the edge
    count, the hyperedge degree when ``pair == "br"``.
    """

    pair: str
    vertices: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.vertices) // 2

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)


def cycles(gehm: Gehm, pair: str) -> list[ColoredCycle]:
    """Connected components of the two named matchings, one ColoredCycle
    each, sorted by minimum vertex.  Isolates are not reported here."""
    if pair not in PAIRS:
        raise GehmError(f"unknown color pair {pair!r}")
    first = gehm.matching(pair[0])
    second = gehm.matching(pair[1])
    seen = [False] * gehm.n
    out = []
    for start in range(gehm.n):
        if seen[start]:
            continue
        verts = []
        u, use_first = start, True
        while not seen[u]:
            seen[u] = True
            verts.append(u)
            u = first[u] if use_first else second[u]
            use_first = not use_first
        out.append(ColoredCycle(pair, tuple(verts)))
    return out


def hyperedges(gehm: Gehm) -> list[ColoredCycle]:
    return cycles(gehm, "br")


def hyperedge_degrees(gehm: Gehm) -> list[int]:
    return [c.degree for c in hyperedges(gehm)]


# ---------------------------------------------------------------------
# Numeric invariants


@dataclass(frozen=True)
class GehmStats:
    v: int
    e: int
    f: int
    k: int
    d: int
    euler_genus: int
    orientable: bool


def _graph_components(gehm: Gehm) -> list[list[int]]:
    """Components of the cubic graph (isolates excluded), each a sorted
    vertex list; components ordered by minimum vertex."""
    seen = [False] * gehm.n
    comps = []
    for start in range(gehm.n):
        if seen[start]:
            continue
        stack, comp = [start], []
        seen[start] = True
        while stack:
            u = stack.pop()
            comp.append(u)
            for m in (gehm.b, gehm.g, gehm.r):
                w = m[u]
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def bipartition(gehm: Gehm) -> list[int] | None:
    """A proper vertex 2-colouring of the cubic graph (0/1 per vertex),
    or None if the graph is not bipartite.  Parallel edges never
    obstruct bipartiteness; isolates are ignored."""
    color = [-1] * gehm.n
    for start in range(gehm.n):
        if color[start] != -1:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            u = stack.pop()
            for m in (gehm.b, gehm.g, gehm.r):
                w = m[u]
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    stack.append(w)
                elif color[w] == color[u]:
                    return None
    return color


def is_orientable(gehm: Gehm) -> bool:
    """A gehm is orientable exactly when its cubic graph is bipartite;
    an orientation is a choice of one of the two vertex classes."""
    return bipartition(gehm) is not None


def stats(gehm: Gehm) -> GehmStats:
    iso = gehm.isolates
    e = len(cycles(gehm, "br"))
    v = len(cycles(gehm, "gr")) + iso
    f = len(cycles(gehm, "bg")) + iso
    k = len(_graph_components(gehm)) + iso
    d = sum(c.degree for c in cycles(gehm, "br"))
    genus = 2 * k - v - e + d - f
    return GehmStats(v, e, f, k, d, genus, is_orientable(gehm))


def euler_genus(gehm: Gehm) -> int:
    return stats(gehm).euler_genus


# ---------------------------------------------------------------------
# Canonical form and equivalence
#
# Two gehms are equivalent when a colour-preserving isomorphism maps one
# onto the other.  Within one component such an isomorphism is pinned
# down by the image of a single vertex (partners are forced colour by
# colour), so a canonical encoding is the lexicographic minimum over all
# start vertices of a fixed-order traversal.


def _component_code(gehm: Gehm, comp: list[int]) -> tuple:
    best = None
    for start in comp:
        label = {start: 0}
        order = [start]
        i = 0
        while i < len(order):
            u = order[i]
            i += 1
            for m in (gehm.b, gehm.g, gehm.r):
                w = m[u]
                if w not in label:
                    label[w] = len(order)
                    order.append(w)
        code = tuple(
            (label[gehm.b[u]], label[gehm.g[u]], label[gehm.r[u]]) for u in order
        )
        if best is None or code < best:
            best = code
    return best


def canonical_form(gehm: Gehm) -> bytes:
    """A byte string invariant under colour-preserving vertex relabeling;
    equal canonical forms characterise equivalent gehms."""
    codes = sorted(_component_code(gehm, comp) for comp in _graph_components(gehm))
    return repr((gehm.n, gehm.isolates, codes)).encode()


def equivalent(g1: Gehm, g2: Gehm) -> bool:
    return canonical_form(g1) == canonical_form(g2)


def relabel(gehm: Gehm, perm: list[int]) -> Gehm:
    """Apply the vertex permutation ``perm`` (new index of old vertex i
    is perm[i]).  Produces an equivalent gehm."""
    if sorted(perm) != list(range(gehm.n)):
        raise GehmError("relabeling is not a permutation of 0..n-1")
    arrays = []
    for m in (gehm.b, gehm.g, gehm.r):
        arr = [0] * gehm.n
        for i in range(gehm.n):
            arr[perm[i]] = perm[m[i]]
        arrays.append(tuple(arr))
    return Gehm(gehm.n, arrays[0], arrays[1], arrays[2], gehm.isolates)


def _subgehm(gehm: Gehm, verts: list[int]) -> Gehm:
    """Restriction to a union of components, vertices compacted in order."""
    index = {u: i for i, u in enumerate(verts)}
    arrays = []
    for m in (gehm.b, gehm.g, gehm.r):
        arrays.append(tuple(index[m[u]] for u in verts))
    return Gehm(len(verts), arrays[0], arrays[1], arrays[2], 0)


def components(gehm: Gehm) -> list[Gehm]:
    """Split into connected components: non-isolate components first
    (ordered by minimum vertex, indices compacted), then one
    single-isolate gehm per isolate."""
    out = [_subgehm(gehm, comp) for comp in _graph_components(gehm)]
    out.extend(isolate() for _ in range(gehm.isolates))
    return out
