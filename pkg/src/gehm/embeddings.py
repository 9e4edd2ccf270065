"""Building gehms from embedded (hyper)graphs.

An oriented embedding of the bipartite incidence graph of a hypermap is
a rotation system: a cyclic order of incidences around every
hypervertex and around every hyperedge.  Each incidence contributes two
gehm-vertices (its two corner flags), and the three matchings read off
the rotation system directly:

    r pairs the two flags of each incidence,
    g pairs flags across corners at hypervertices,
    b pairs flags across corners at hyperedges.

Gehms built this way are always orientable; their Euler genus is the
genus of the rotation system.

The module also carries a plane multigraph builder (edges are only ever
added across a single face, which preserves genus zero) and the gem
construction for embedded graphs; together they provide plane test
instances whose classical Tutte polynomial is known independently.
"""

from __future__ import annotations

from .core import Gehm, GehmError


def gehm_from_bipartite_rotations(rot_v, rot_e) -> Gehm:
    """Gehm of the hypermap with hypervertex rotations ``rot_v`` and
    hyperedge rotations ``rot_e``.

    Incidences are numbered 0..m-1 and must occur exactly once in each
    rotation family.  Incidence i becomes the gehm-vertices 2i and 2i+1
    (its flag at the hypervertex corner resp. hyperedge corner).
    """
    m = sum(len(c) for c in rot_v)
    if sum(len(c) for c in rot_e) != m:
        raise GehmError("rotation families cover different incidence sets")
    seen_v = sorted(i for c in rot_v for i in c)
    seen_e = sorted(i for c in rot_e for i in c)
    if seen_v != list(range(m)) or seen_e != list(range(m)):
        raise GehmError("incidences must each appear exactly once per family")

    n = 2 * m
    r = [0] * n
    g = [0] * n
    b = [0] * n
    for i in range(m):
        r[2 * i] = 2 * i + 1
        r[2 * i + 1] = 2 * i
    for cyc in rot_v:
        for j, i in enumerate(cyc):
            nxt = cyc[(j + 1) % len(cyc)]
            g[2 * i] = 2 * nxt + 1
            g[2 * nxt + 1] = 2 * i
    for cyc in rot_e:
        for j, i in enumerate(cyc):
            nxt = cyc[(j + 1) % len(cyc)]
            b[2 * i + 1] = 2 * nxt
            b[2 * nxt] = 2 * i + 1
    return Gehm(n, tuple(b), tuple(g), tuple(r))


# ---------------------------------------------------------------------
# Plane multigraphs


class PlaneMap:
    """A connected multigraph with a rotation system kept at genus zero.

    Darts are numbered as allocated; ``rot[v]`` lists the darts at v in
    counterclockwise order and ``theta`` pairs the two darts of each
    edge.  A corner (v, i) is the gap before position i of rot[v]; new
    edges may only connect two corners of a common face, which splits
    that face and keeps the embedding plane.
    """

    def __init__(self):
        self.rot: list[list[int]] = [[]]
        self.theta: list[int] = []
        self.dart_vertex: list[int] = []

    @property
    def n_vertices(self) -> int:
        return len(self.rot)

    @property
    def n_edges(self) -> int:
        return len(self.theta) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edge endpoint pairs (tail of each dart pair), loops included."""
        out = []
        for d in range(0, len(self.theta), 2):
            out.append((self.dart_vertex[d], self.dart_vertex[d + 1]))
        return out

    def corners(self) -> list[tuple[int, int]]:
        out = []
        for v, cyc in enumerate(self.rot):
            out.extend((v, i) for i in range(max(1, len(cyc))))
        return out

    def faces(self) -> list[list[tuple[int, int]]]:
        """Faces as corner lists.  A corner (v, i) lies on the face whose
        boundary turns from rot[v][i-1] to rot[v][i] at v."""
        if not self.theta:
            return [[(0, 0)]]
        next_in_rot = {}
        for v, cyc in enumerate(self.rot):
            for i, d in enumerate(cyc):
                next_in_rot[d] = (v, (i + 1) % len(cyc))
        seen = set()
        faces = []
        for start in range(len(self.theta)):
            if start in seen:
                continue
            face = []
            d = start
            while d not in seen:
                seen.add(d)
                v, i = next_in_rot[self.theta[d]]
                face.append((v, i))
                d = self.rot[v][i]
            faces.append(face)
        return faces

    def _new_dart(self, v: int) -> int:
        self.dart_vertex.append(v)
        self.theta.append(-1)
        return len(self.theta) - 1

    def add_pendant(self, corner: tuple[int, int]) -> int:
        """Attach a new degree-one vertex by an edge at ``corner``;
        returns the new vertex."""
        v, i = corner
        w = len(self.rot)
        self.rot.append([])
        a = self._new_dart(v)
        b = self._new_dart(w)
        self.theta[a], self.theta[b] = b, a
        self.rot[v].insert(i, a)
        self.rot[w].append(b)
        return w

    def add_edge(self, corner1: tuple[int, int], corner2: tuple[int, int]) -> None:
        """Insert an edge between two corners of a common face.  The
        caller is responsible for the common-face requirement; choosing
        corners from one entry of ``faces()`` satisfies it."""
        u, i = corner1
        w, j = corner2
        a = self._new_dart(u)
        b = self._new_dart(w)
        self.theta[a], self.theta[b] = b, a
        if u == w:
            if i > j:
                i, j, a, b = j, i, b, a
            self.rot[u].insert(j, b)
            self.rot[u].insert(i, a)
        else:
            self.rot[u].insert(i, a)
            self.rot[w].insert(j, b)

    def euler_check(self) -> bool:
        return (self.n_vertices - self.n_edges + len(self.faces())) == 2


def random_plane_map(rng, n_edges: int, pendant_bias: float = 0.4) -> PlaneMap:
    """Grow a random connected plane multigraph with ``n_edges`` edges:
    each step either hangs a pendant vertex at a random corner or joins
    two random corners of a random face (loops and parallel edges arise
    naturally)."""
    pm = PlaneMap()
    for _ in range(n_edges):
        if rng.random() < pendant_bias:
            pm.add_pendant(rng.choice(pm.corners()))
        else:
            face = rng.choice(pm.faces())
            c1 = rng.choice(face)
            c2 = rng.choice(face)
            pm.add_edge(c1, c2)
    return pm


def gem_from_plane_map(pm: PlaneMap) -> Gehm:
    """The gem (all hyperedges of degree two) of an embedded graph: the
    graph's edges become the hyperedge nodes of the subdivided bipartite
    map, incidences are the darts."""
    rot_v = [tuple(cyc) for cyc in pm.rot if cyc]
    rot_e = [(d, pm.theta[d]) for d in range(0, len(pm.theta)) if d < pm.theta[d]]
    darts_used = sorted(d for cyc in rot_v for d in cyc)
    index = {d: i for i, d in enumerate(darts_used)}
    rot_v = [tuple(index[d] for d in cyc) for cyc in rot_v]
    rot_e = [tuple(index[d] for d in pair) for pair in rot_e]
    gem = gehm_from_bipartite_rotations(rot_v, rot_e)
    isolated = sum(1 for cyc in pm.rot if not cyc)
    if isolated:
        gem = Gehm(gem.n, gem.b, gem.g, gem.r, gem.isolates + isolated)
    return gem
