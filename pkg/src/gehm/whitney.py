"""Hyperedge refinements and the refinement-sum Whitney polynomial.

A refinement of a degree-d hyperedge cuts its b-r cycle into smaller
alternating cycles: pick a non-crossing partition of the d r-edges (in
their cyclic order); each block keeps its r-edges and closes into one
smaller cycle with fresh b-edges, the unique non-crossing closure.
Singleton blocks become degree-one hyperedges (a b-chord parallel to
the r-edge), the all-singletons partition is the total refinement, and
the one-block partition returns the hyperedge unchanged.  A hyperedge
of degree d has Catalan(d) refinements.

The Whitney polynomial is the Laurent polynomial

    R(H; u, v) = u^(-k) v^(d-v) * sum over refinement choices beta of
                 (uv)^k(H_beta) v^(-e(H_beta)),

the sum running over the full Cartesian product of per-hyperedge
refinements.  R is incomparable with the dichromatic polynomial: pairs
of gehms share Z but differ in R.  On gems, R reduces to the classical
Whitney rank generating function sum over edge subsets A of
u^(r(E)-r(A)) v^(|A|-r(A)) of the underlying graph (verified
empirically in the test suite; not asserted by this module).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import comb

from .core import Gehm, GehmError, cycles, stats
from .invariants import GuardExceeded
from .poly import MultiPoly

DEFAULT_MAX_REFINEMENTS = 10 ** 6


def catalan(d: int) -> int:
    return comb(2 * d, d) // (d + 1)


def noncrossing_partitions(d: int) -> list[tuple[tuple[int, ...], ...]]:
    """All non-crossing partitions of the cyclically ordered positions
    0..d-1, as tuples of sorted blocks, Catalan(d) in total.

    Cyclic and linear non-crossing coincide: four positions witnessing
    a cyclic crossing also alternate blocks in linear order.  The block
    of the least element splits the rest into independent gaps, which
    gives the recursion used here; output order is deterministic.
    """
    if d < 1:
        raise GehmError("refinements need degree >= 1")
    return [tuple(p) for p in _nc_of(tuple(range(d)))]


def _nc_of(elems: tuple[int, ...]):
    if not elems:
        yield ()
        return
    first, rest = elems[0], elems[1:]
    # choose the rest of first's block among the remaining elements
    for mask in range(1 << len(rest)):
        block = (first,) + tuple(x for i, x in enumerate(rest) if mask >> i & 1)
        gaps = []
        cur = []
        j = 0
        for x in rest:
            if j + 1 < len(block) and x == block[j + 1]:
                gaps.append(tuple(cur))
                cur = []
                j += 1
            else:
                cur.append(x)
        gaps.append(tuple(cur))
        for combo in product(*(_nc_of(gap) for gap in gaps)):
            out = [block]
            for part in combo:
                out.extend(part)
            yield tuple(sorted(out))


@dataclass(frozen=True)
class RefinedGehm:
    """The gehm produced by a refinement choice, with the bookkeeping the
    Whitney sum needs.  Only b-edges on refined cycles change; the g-
    and r-matchings are those of the original."""

    gehm: Gehm
    e: int
    k: int


def _check_noncrossing(blocks, d: int) -> None:
    elems = sorted(x for blk in blocks for x in blk)
    if elems != list(range(d)):
        raise GehmError(f"blocks {blocks} do not partition 0..{d - 1}")
    owner = {}
    for bi, blk in enumerate(blocks):
        for x in blk:
            owner[x] = bi
    # linear crossing witness: a < b < c < d with a,c and b,d in
    # different blocks pairwise
    for a in range(d):
        for c in range(a + 1, d):
            if owner[a] != owner[c]:
                continue
            for b in range(a + 1, c):
                if owner[b] == owner[a]:
                    continue
                for x in range(c + 1, d):
                    if owner[x] == owner[b]:
                        raise GehmError(
                            f"blocks {blocks} cross at {(a, b, c, x)}")


def refine(gehm: Gehm, beta) -> RefinedGehm:
    """Apply one non-crossing partition per hyperedge.  ``beta`` is a
    sequence, indexed like ``cycles(g, "br")``, whose entry for a
    degree-d hyperedge partitions the positions 0..d-1 of its r-edges
    in traversal order."""
    hh = cycles(gehm, "br")
    if len(beta) != len(hh):
        raise GehmError(f"refinement names {len(beta)} of {len(hh)} hyperedges")
    b = list(gehm.b)
    blocks_total = 0
    for cyc, blocks in zip(hh, beta):
        d = cyc.degree
        _check_noncrossing(blocks, d)
        blocks_total += len(blocks)
        verts = cyc.vertices
        # r-edge j runs from verts[2j+1] to verts[2j+2]; a block closes
        # its r-edges into one cycle by b-joining consecutive ends
        for blk in blocks:
            for t in range(len(blk)):
                j, jn = blk[t], blk[(t + 1) % len(blk)]
                end = verts[(2 * j + 2) % len(verts)]
                start = verts[2 * jn + 1]
                b[end] = start
                b[start] = end
    refined = Gehm(gehm.n, tuple(b), gehm.g, gehm.r, gehm.isolates)
    st = stats(refined)
    assert st.e == blocks_total
    return RefinedGehm(refined, st.e, st.k)


def refinement_count(gehm: Gehm) -> int:
    total = 1
    for cyc in cycles(gehm, "br"):
        total *= catalan(cyc.degree)
    return total


def whitney(gehm: Gehm, max_refinements: int | None = None) -> MultiPoly:
    """The refinement-sum Whitney polynomial R(H; u, v), computed as an
    exact Laurent polynomial.  Refuses gehms with more refinement tuples
    than the guard allows."""
    limit = DEFAULT_MAX_REFINEMENTS if max_refinements is None else max_refinements
    total_tuples = refinement_count(gehm)
    if total_tuples > limit:
        raise GuardExceeded(
            f"{total_tuples} refinement tuples exceed the guard of {limit};"
            " raise max_refinements to override")
    st = stats(gehm)
    per_edge = [noncrossing_partitions(c.degree) for c in cycles(gehm, "br")]
    total = MultiPoly.zero()
    for beta in product(*per_edge):
        ref = refine(gehm, beta)
        total = total + MultiPoly.monomial(1, {
            "u": ref.k - st.k,
            "v": st.d - st.v + ref.k - ref.e,
        })
    return total
