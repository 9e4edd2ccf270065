import json
import random

import pytest

from gehm.core import (Gehm, GehmError, bipartition, canonical_form, components,
                       cycles, dumps, equivalent, hyperedge_degrees, is_orientable,
                       isolate, loads, relabel, stats, triple_edge)
from gehm.fixtures import load
from gehm.ops import disjoint_union
from gehm.randgen import random_gehm


def test_validate_triple_edge():
    g = Gehm.from_pairs(2, b=[[0, 1]], g=[[0, 1]], r=[[0, 1]])
    assert g == triple_edge()


def test_validate_isolates_only():
    g = Gehm(0, (), (), (), isolates=2)
    assert g.n == 0 and g.isolates == 2


def test_validate_fixed_point():
    with pytest.raises(GehmError, match="fixed point in matching b"):
        Gehm(2, (0, 1), (1, 0), (1, 0))


def test_validate_not_involution():
    with pytest.raises(GehmError, match="not an involution"):
        Gehm(4, (1, 2, 3, 0), (1, 0, 3, 2), (1, 0, 3, 2))


def test_validate_odd_n():
    with pytest.raises(GehmError, match="even"):
        Gehm(3, (1, 0, 2), (1, 0, 2), (1, 0, 2))


def test_validate_negative_isolates():
    with pytest.raises(GehmError, match="isolates"):
        Gehm(0, (), (), (), isolates=-1)


def test_validate_mismatched_length():
    with pytest.raises(GehmError, match="length"):
        Gehm(4, (1, 0), (1, 0, 3, 2), (1, 0, 3, 2))


def test_validate_pair_coverage():
    with pytest.raises(GehmError, match="covered twice"):
        Gehm.from_pairs(4, b=[[0, 1], [0, 2]], g=[[0, 1], [2, 3]],
                        r=[[0, 1], [2, 3]])
    with pytest.raises(GehmError, match="not covered"):
        Gehm.from_pairs(4, b=[[0, 1]], g=[[0, 1], [2, 3]], r=[[0, 1], [2, 3]])


def test_json_roundtrip():
    g = load("fig2")
    assert loads(dumps(g)) == g
    obj = json.loads(dumps(g))
    assert set(obj) == {"n", "b", "g", "r", "isolates"}


def test_cycles_triple_edge():
    te = triple_edge()
    (c,) = cycles(te, "br")
    assert c.vertices == (0, 1)
    assert c.degree == 1


def test_cycles_fig3():
    # one degree-3 hyperedge, hypervertices {0,1} and {2,3,4,5}
    g = load("fig3")
    gr = cycles(g, "gr")
    assert [sorted(c.vertex_set) for c in gr] == [[0, 1], [2, 3, 4, 5]]
    (br,) = cycles(g, "br")
    assert br.degree == 3


def test_cycles_partition_every_vertex():
    rng = random.Random(11)
    for _ in range(30):
        g = random_gehm(rng, rng.randrange(2, 13, 2))
        for pair in ("br", "gr", "bg"):
            seen = [v for c in cycles(g, pair) for v in c.vertices]
            assert sorted(seen) == list(range(g.n))


def test_cycle_alternation():
    rng = random.Random(12)
    for _ in range(20):
        g = random_gehm(rng, rng.randrange(2, 11, 2))
        for pair in ("br", "gr", "bg"):
            first, second = g.matching(pair[0]), g.matching(pair[1])
            for c in cycles(g, pair):
                vs = c.vertices
                assert len(vs) % 2 == 0
                assert min(vs) == vs[0]
                for i, u in enumerate(vs):
                    w = vs[(i + 1) % len(vs)]
                    assert (first if i % 2 == 0 else second)[u] == w


def test_stats_triple_edge():
    st = stats(triple_edge())
    assert (st.v, st.e, st.f, st.k, st.d) == (1, 1, 1, 1, 1)
    assert st.euler_genus == 0


def test_stats_isolates():
    st = stats(isolate(2))
    assert (st.v, st.e, st.f, st.k, st.d) == (2, 0, 2, 2, 0)
    assert st.euler_genus == 0


def test_stats_fig2():
    st = stats(load("fig2"))
    assert (st.v, st.e, st.f) == (4, 3, 4)
    assert sorted(hyperedge_degrees(load("fig2"))) == [2, 3, 4]
    assert st.euler_genus == 0
    assert st.orientable


def test_orientability():
    assert is_orientable(triple_edge())
    coloring = bipartition(triple_edge())
    assert sorted(coloring) == [0, 1]
    assert not is_orientable(load("fig6a"))
    assert is_orientable(load("fig6b"))


def test_bipartition_is_proper():
    rng = random.Random(13)
    found = 0
    for _ in range(60):
        g = random_gehm(rng, rng.randrange(2, 13, 2))
        coloring = bipartition(g)
        if coloring is None:
            continue
        found += 1
        for m in (g.b, g.g, g.r):
            assert all(coloring[u] != coloring[m[u]] for u in range(g.n))
    assert found > 0


def test_genus_nonnegative_and_even_when_orientable():
    rng = random.Random(14)
    for _ in range(120):
        g = random_gehm(rng, rng.randrange(2, 15, 2), rng.choice([0, 0, 1]))
        st = stats(g)
        assert st.euler_genus >= 0
        if st.orientable:
            assert st.euler_genus % 2 == 0


def test_d_counts_each_color():
    rng = random.Random(15)
    for _ in range(30):
        g = random_gehm(rng, rng.randrange(2, 13, 2))
        st = stats(g)
        assert st.d == g.n // 2  # one b-, g- and r-edge per vertex pair


def test_canonical_under_relabeling():
    rng = random.Random(16)
    for _ in range(25):
        g = random_gehm(rng, rng.randrange(2, 13, 2), rng.choice([0, 1]))
        base = canonical_form(g)
        for _ in range(20):
            perm = list(range(g.n))
            rng.shuffle(perm)
            assert canonical_form(relabel(g, perm)) == base


def test_equivalent_examples():
    te = triple_edge()
    assert equivalent(te, relabel(te, [1, 0]))
    assert not equivalent(te, isolate(2))
    assert equivalent(te, te)


def test_components_examples():
    assert components(isolate(2)) == [isolate(), isolate()]
    assert components(triple_edge()) == [triple_edge()]
    mixed = disjoint_union(triple_edge(), isolate())
    parts = components(mixed)
    assert parts == [triple_edge(), isolate()]
    rebuilt = parts[0]
    for p in parts[1:]:
        rebuilt = disjoint_union(rebuilt, p)
    assert equivalent(rebuilt, mixed)


def test_components_rebuild_random():
    rng = random.Random(17)
    for _ in range(20):
        g = random_gehm(rng, rng.randrange(2, 13, 2), rng.choice([0, 1, 2]))
        parts = components(g)
        rebuilt = parts[0]
        for p in parts[1:]:
            rebuilt = disjoint_union(rebuilt, p)
        assert equivalent(rebuilt, g)
