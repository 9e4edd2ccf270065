"""Medial maps and the hypermap transition polynomial.

The medial map of a gehm has one vertex per hyperedge, carrying the 2d
half-edges of its b-r cycle in cyclic order, and one edge per
non-isolate g-edge (half-edges are identified with gehm-vertices and
paired by the g-matching).  The gaps between consecutive half-edges
alternate between grey faces (across r-edges, the hypervertex side) and
white faces (across b-edges, the hyperface side); this is the natural
checkerboard colouring.

A graph state picks a perfect pairing of the half-edges at every medial
vertex; smoothing a state leaves free loops, counted as components of
the union of the state pairing with the g-involution (plus one baseline
loop per isolate).  Given a weight system, the transition polynomial is
the state sum of weight times loop-variable^loops.

Two sparse weight systems matter here: the c/d system whose state sum
recovers the dichromatic polynomial, and the three-pairing system on
gems that gives the topological transition polynomial.  Vertex state
weights are stored per supported state (pair weights would be
fractional powers); everything else is weight zero and pruned.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .core import Gehm, GehmError, cycles
from .invariants import GuardExceeded
from .poly import MultiPoly

DEFAULT_MAX_STATE_DEGREE = 10

GREY = "grey"
WHITE = "white"


@dataclass(frozen=True)
class MedialVertex:
    """The medial vertex of one hyperedge: half-edges are the cycle's
    gehm-vertices in traversal order, ``gaps[i]`` is the face type
    between half_edges[i] and half_edges[i+1] (cyclically)."""

    hyperedge: int
    half_edges: tuple[int, ...]
    gaps: tuple[str, ...]

    @property
    def degree(self) -> int:
        return len(self.half_edges)

    def _gap_pairing(self, kind: str):
        pairs = []
        m = len(self.half_edges)
        for i, gap in enumerate(self.gaps):
            if gap == kind:
                pairs.append((self.half_edges[i], self.half_edges[(i + 1) % m]))
        return canonical_pairing(pairs)

    def c_pairing(self):
        """Pairs across white faces; the smoothing matching contraction."""
        return self._gap_pairing(WHITE)

    def d_pairing(self):
        """Pairs across grey faces; the smoothing matching deletion."""
        return self._gap_pairing(GREY)

    def crossing_pairing(self):
        """The transversal pairing {h0,h2},{h1,h3} at a degree-4 vertex."""
        if self.degree != 4:
            raise GehmError("crossing pairing needs a degree-4 medial vertex")
        h = self.half_edges
        return canonical_pairing([(h[0], h[2]), (h[1], h[3])])


@dataclass(frozen=True)
class MedialMap:
    vertices: tuple[MedialVertex, ...]
    g_pairing: tuple[int, ...]
    baseline_loops: int


def canonical_pairing(pairs) -> tuple[tuple[int, int], ...]:
    return tuple(sorted(tuple(sorted(p)) for p in pairs))


def medial_map(gehm: Gehm) -> MedialMap:
    """One medial vertex per b-r cycle; half-edge cyclic order inherited
    from the deterministic cycle traversal; one medial edge per g-edge;
    isolates become baseline free loops."""
    verts = []
    for idx, cyc in enumerate(cycles(gehm, "br")):
        m = len(cyc.vertices)
        gaps = []
        # the traversal alternates b, r starting with b, so even gaps
        # cross b-edges (white side) and odd gaps cross r-edges (grey side)
        for i in range(m):
            u, w = cyc.vertices[i], cyc.vertices[(i + 1) % m]
            if i % 2 == 0:
                assert gehm.b[u] == w
                gaps.append(WHITE)
            else:
                assert gehm.r[u] == w
                gaps.append(GREY)
        verts.append(MedialVertex(idx, cyc.vertices, tuple(gaps)))
    return MedialMap(tuple(verts), gehm.g, gehm.isolates)


def all_pairings(items: tuple[int, ...]):
    """Every perfect pairing of ``items`` ((len-1)!! of them)."""
    if not items:
        yield ()
        return
    first, rest = items[0], list(items[1:])
    for i, other in enumerate(rest):
        head = ((first, other),)
        for tail in all_pairings(tuple(rest[:i] + rest[i + 1:])):
            yield head + tail


# A graph state maps each medial-vertex index to a canonical pairing of
# its half-edges.
GraphState = dict


def state_from_c_set(m: MedialMap, c_set) -> GraphState:
    """The c/d state whose c-vertices are exactly ``c_set``."""
    return {
        i: (mv.c_pairing() if i in set(c_set) else mv.d_pairing())
        for i, mv in enumerate(m.vertices)
    }


def smooth_count(m: MedialMap, state: GraphState) -> int:
    """Free loops left after smoothing every vertex state: components of
    the state pairing united with the g-involution, plus the baseline."""
    partner = {}
    for i, mv in enumerate(m.vertices):
        if i not in state:
            raise GehmError(f"state missing medial vertex {i}")
        pairing = state[i]
        flat = [h for p in pairing for h in p]
        if sorted(flat) != sorted(mv.half_edges):
            raise GehmError(f"state at vertex {i} is not a perfect pairing")
        for a, b in pairing:
            partner[a] = b
            partner[b] = a
    loops = 0
    seen = set()
    for h in partner:
        if h in seen:
            continue
        loops += 1
        stack = [h]
        seen.add(h)
        while stack:
            x = stack.pop()
            for y in (partner[x], m.g_pairing[x]):
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
    return loops + m.baseline_loops


class WeightSystem:
    """Per medial vertex, the weight of each supported vertex state
    (a canonical pairing); unlisted pairings weigh zero."""

    def __init__(self, state_weights: dict[int, dict[tuple, MultiPoly]]):
        self.state_weights = state_weights

    @classmethod
    def from_pair_weights(cls, m: MedialMap, pair_weights,
                          max_degree: int | None = None) -> "WeightSystem":
        """Compile pair weights (vertex index -> {sorted pair: weight})
        into vertex state weights by enumerating all pairings; the state
        weight is the product of its pair weights.  Vertices of degree
        above the guard are refused."""
        limit = DEFAULT_MAX_STATE_DEGREE if max_degree is None else max_degree
        table = {}
        for i, mv in enumerate(m.vertices):
            if mv.degree > limit:
                raise GuardExceeded(
                    f"medial vertex {i} has degree {mv.degree}, beyond the"
                    f" state-enumeration guard of {limit}")
            weights = pair_weights.get(i, {})
            entry = {}
            for pairing in all_pairings(mv.half_edges):
                w = MultiPoly.const(1)
                for pair in pairing:
                    w = w * weights.get(tuple(sorted(pair)), MultiPoly.zero())
                if not w.is_zero():
                    entry[canonical_pairing(pairing)] = w
            table[i] = entry
        return cls(table)


def transition_poly(m: MedialMap, omega: WeightSystem,
                    loop_var: str = "t") -> MultiPoly:
    """State sum of weight(state) * loop_var^loops over all graph states
    with nonzero weight."""
    per_vertex = []
    for i in range(len(m.vertices)):
        entry = omega.state_weights.get(i, {})
        if not entry:
            return MultiPoly.zero()
        per_vertex.append(sorted(entry.items()))
    total = MultiPoly.zero()
    for combo in product(*per_vertex):
        weight = MultiPoly.const(1)
        state = {}
        for i, (pairing, w) in enumerate(combo):
            state[i] = pairing
            weight = weight * w
        loops = smooth_count(m, state)
        total = total + weight * MultiPoly.monomial(1, {loop_var: loops})
    return total


def omega_m(gehm: Gehm) -> WeightSystem:
    """The dichromatic weight system: at a degree-2d medial vertex with
    d >= 2 the c-state weighs u^(d-1) and the d-state weighs 1; at a
    degree-2 vertex the single state weighs 2 (deletion and contraction
    of a degree-one hyperedge coincide)."""
    m = medial_map(gehm)
    table = {}
    for i, mv in enumerate(m.vertices):
        d = mv.degree // 2
        if d == 1:
            table[i] = {mv.c_pairing(): MultiPoly.const(2)}
        else:
            table[i] = {
                mv.c_pairing(): MultiPoly.monomial(1, {"u": d - 1}),
                mv.d_pairing(): MultiPoly.const(1),
            }
    return WeightSystem(table)


def phi_m(gehm: Gehm) -> MultiPoly:
    """Transition polynomial of the medial map under the dichromatic
    weight system; equals the dichromatic polynomial Z(H; u, v)."""
    return transition_poly(medial_map(gehm), omega_m(gehm), "v")


def omega_t(gehm: Gehm, alpha, beta, gamma) -> WeightSystem:
    """The three-pairing weight system on a gem's medial map (every
    vertex has degree four): alpha on the c-style pairing, beta on the
    d-style pairing, gamma on the crossing pairing."""
    m = medial_map(gehm)
    if any(mv.degree != 4 for mv in m.vertices):
        raise GehmError("omega_t needs a gem (every hyperedge of degree 2)")
    weights = [MultiPoly.const(w) if isinstance(w, int) else w
               for w in (alpha, beta, gamma)]
    table = {}
    for i, mv in enumerate(m.vertices):
        table[i] = {
            pairing: w
            for pairing, w in zip(
                (mv.c_pairing(), mv.d_pairing(), mv.crossing_pairing()),
                weights)
            if not w.is_zero()
        }
    return WeightSystem(table)
