import random

import pytest

from gehm.core import (Gehm, GehmError, canonical_form, cycles, equivalent,
                       euler_genus, hyperedge_degrees, is_orientable, isolate,
                       stats, triple_edge)
from gehm.fixtures import load
from gehm.ops import (DUAL, IDENTITY, TRIAL, contract, delete, disjoint_union,
                      dual, join, partial_dual, recolor, restrict, trial)
from gehm.randgen import random_gehm


def test_recolor_identity():
    g = load("fig2")
    assert recolor(g, IDENTITY) == g


def test_dual_involution():
    rng = random.Random(21)
    for _ in range(20):
        g = random_gehm(rng, rng.randrange(2, 13, 2), rng.choice([0, 1]))
        assert dual(dual(g)) == g
        assert trial(trial(trial(g))) == g


def test_dual_swaps_v_and_f():
    rng = random.Random(22)
    for _ in range(100):
        g = random_gehm(rng, rng.randrange(2, 13, 2), rng.choice([0, 1]))
        st, std = stats(g), stats(dual(g))
        assert (std.v, std.f) == (st.f, st.v)
        assert (std.e, std.k, std.d, std.euler_genus) == (
            st.e, st.k, st.d, st.euler_genus)


def test_recolor_rejects_non_permutation():
    with pytest.raises(GehmError):
        recolor(triple_edge(), {"b": "b", "g": "b", "r": "r"})


def test_partial_dual_all_edges_is_dual():
    rng = random.Random(23)
    for _ in range(20):
        g = random_gehm(rng, rng.randrange(2, 13, 2))
        ne = stats(g).e
        assert partial_dual(g, range(ne)) == dual(g)


def test_partial_dual_triple_edge_fixed():
    te = triple_edge()
    assert partial_dual(te, [0]) == te


def test_partial_dual_involution_and_order_independence():
    rng = random.Random(24)
    for _ in range(20):
        g = random_gehm(rng, rng.randrange(4, 13, 2))
        ne = stats(g).e
        subset = [i for i in range(ne) if rng.random() < 0.5]
        gp = partial_dual(g, subset)
        assert partial_dual(gp, subset) == g
        step = g
        for e in reversed(subset):
            step = partial_dual(step, [e])
        assert step == gp


def test_partial_dual_fig2_genus_jump():
    g = load("fig2")
    degs = hyperedge_degrees(g)
    e4 = degs.index(4)
    assert euler_genus(g) == 0
    gp = partial_dual(g, [e4])
    assert euler_genus(gp) == 4
    assert is_orientable(gp)


def test_partial_dual_bad_index():
    with pytest.raises(GehmError, match="out of range"):
        partial_dual(triple_edge(), [1])


def test_delete_triple_edge():
    assert delete(triple_edge(), 0) == isolate()


def test_delete_preserves_v():
    rng = random.Random(25)
    for _ in range(60):
        g = random_gehm(rng, rng.randrange(2, 13, 2), rng.choice([0, 1]))
        ne = stats(g).e
        e = rng.randrange(ne)
        assert stats(delete(g, e)).v == stats(g).v


def test_delete_fig2_creates_isolate():
    g = load("fig2")
    e3 = hyperedge_degrees(g).index(3)
    out = delete(g, e3)
    assert out.isolates == 1
    assert stats(out).k == stats(g).k + 1


def test_contract_triple_edge():
    assert contract(triple_edge(), 0) == isolate()


def test_contract_preserves_f():
    rng = random.Random(26)
    for _ in range(60):
        g = random_gehm(rng, rng.randrange(2, 13, 2), rng.choice([0, 1]))
        e = rng.randrange(stats(g).e)
        assert stats(contract(g, e)).f == stats(g).f


def test_contract_fig2_creates_isolate():
    g = load("fig2")
    e4 = hyperedge_degrees(g).index(4)
    out = contract(g, e4)
    assert out.isolates == 1
    assert stats(out).k == stats(g).k + 1


def test_contract_is_pdual_then_delete():
    rng = random.Random(27)
    for _ in range(40):
        g = random_gehm(rng, rng.randrange(2, 13, 2))
        e = rng.randrange(stats(g).e)
        assert contract(g, e) == delete(partial_dual(g, [e]), e)


def test_delete_contract_reduce_e_and_genus():
    rng = random.Random(28)
    for _ in range(60):
        g = random_gehm(rng, rng.randrange(2, 13, 2))
        st = stats(g)
        e = rng.randrange(st.e)
        minus, over = delete(g, e), contract(g, e)
        assert stats(minus).e == st.e - 1
        assert stats(over).e == st.e - 1
        assert stats(minus).euler_genus <= st.euler_genus
        if st.orientable:
            assert is_orientable(minus) and is_orientable(over)


def test_commutation_lemma():
    rng = random.Random(29)
    done = 0
    while done < 40:
        g = random_gehm(rng, rng.randrange(4, 13, 2))
        ne = stats(g).e
        if ne < 2:
            continue
        done += 1
        e, f = sorted(rng.sample(range(ne), 2))
        f_after_e = f - 1  # deleting/contracting e shifts later indices down

        assert equivalent(delete(delete(g, e), f_after_e),
                          delete(delete(g, f), e))
        assert equivalent(contract(contract(g, e), f_after_e),
                          contract(contract(g, f), e))
        assert equivalent(delete(contract(g, e), f_after_e),
                          contract(delete(g, f), e))


def test_restrict_full_and_empty():
    g = load("fig2")
    ne = stats(g).e
    assert restrict(g, range(ne)) == g
    empty = restrict(g, [])
    assert empty.n == 0
    assert empty.isolates == stats(g).v
    assert stats(empty).f == stats(g).v


def test_restrict_triple_edge_empty():
    assert restrict(triple_edge(), []) == isolate()


def test_restrict_order_independent():
    rng = random.Random(30)
    for _ in range(20):
        g = random_gehm(rng, rng.randrange(4, 11, 2))
        ne = stats(g).e
        keep = [i for i in range(ne) if rng.random() < 0.5]
        base = restrict(g, keep)
        # delete the complement one edge at a time in random order,
        # tracking index shifts
        remaining = sorted(set(range(ne)) - set(keep))
        rng.shuffle(remaining)
        out = g
        deleted = []
        for e in remaining:
            out = delete(out, e - sum(1 for x in deleted if x < e))
            deleted.append(e)
        assert equivalent(out, base)


def test_disjoint_union_stats_additive():
    rng = random.Random(31)
    for _ in range(20):
        g1 = random_gehm(rng, rng.randrange(2, 9, 2), rng.choice([0, 1]))
        g2 = random_gehm(rng, rng.randrange(2, 9, 2))
        s1, s2, su = stats(g1), stats(g2), stats(disjoint_union(g1, g2))
        assert (su.v, su.e, su.f, su.k, su.d, su.euler_genus) == (
            s1.v + s2.v, s1.e + s2.e, s1.f + s2.f,
            s1.k + s2.k, s1.d + s2.d, s1.euler_genus + s2.euler_genus)


def test_join_two_triple_edges():
    te = triple_edge()
    j = join(te, (0, 1), te, (0, 1))
    st = stats(j)
    assert (st.v, st.e, st.f, st.k) == (1, 2, 1, 1)


def test_join_drops_v_and_f_by_one():
    rng = random.Random(32)
    for _ in range(30):
        g1 = random_gehm(rng, rng.randrange(2, 9, 2))
        g2 = random_gehm(rng, rng.randrange(2, 9, 2))
        x1, x2 = rng.randrange(g1.n), rng.randrange(g2.n)
        j = join(g1, (x1, g1.g[x1]), g2, (x2, g2.g[x2]))
        su = stats(disjoint_union(g1, g2))
        sj = stats(j)
        assert sj.v == su.v - 1
        assert sj.f == su.f - 1


def test_join_rejects_non_g_edge():
    te = triple_edge()
    bad = Gehm.from_pairs(4, b=[[0, 1], [2, 3]], g=[[0, 1], [2, 3]],
                          r=[[1, 2], [3, 0]])
    with pytest.raises(GehmError, match="not a g-edge"):
        join(bad, (1, 2), te, (0, 1))
