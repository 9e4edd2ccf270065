"""Randomised property suites behind the ``check`` CLI subcommand.

Each suite draws seeded random gehms (smallest first, so a reported
counterexample is minimal among the instances tried), verifies the
identities its name covers, and stops at the first violation.  Suites
also gather informational notes for effects that are reported rather
than asserted (negative deletion-contraction prefactor exponents,
orientability under partial duality).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .core import Gehm, canonical_form, cycles, equivalent, is_orientable, stats
from .invariants import (count_spanning_hypertrees, dichromatic,
                         dichromatic_delcon, dichromatic_multivariate,
                         evaluate_tutte, tutte, tutte_delcon,
                         tutte_from_dichromatic)
from .ops import contract, delete, disjoint_union, dual, join, partial_dual
from .poly import MultiPoly, expand_xy
from .randgen import random_gehm, random_gehms
from .transition import medial_map, phi_m, smooth_count, state_from_c_set
from .ops import restrict

SUITES = ("duality", "delcon", "transition", "evals", "multiplicativity")


@dataclass
class SuiteResult:
    name: str
    trials: int
    failure: str | None = None
    witness: Gehm | None = None
    info: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failure is None


def _swap_xy(p: MultiPoly) -> MultiPoly:
    return p.substitute({"X": MultiPoly.var("Y"), "Y": MultiPoly.var("X")})


def check_duality(trials: int, max_vertices: int, seed: int) -> SuiteResult:
    res = SuiteResult("duality", trials)
    rng = random.Random(seed * 31 + 1)
    pdual_orientability_flips = 0
    for g in random_gehms(seed, trials, max_vertices):
        st = stats(g)
        gd = dual(g)
        if _swap_xy(tutte(g)) != tutte(gd):
            res.failure = "T(dual) != T with X and Y swapped"
            res.witness = g
            return res
        z = dichromatic(g)
        zd = dichromatic(gd).substitute({"u": MultiPoly.monomial(1, {"u": -1})})
        if z != zd * MultiPoly.monomial(1, {"u": st.d - st.e}):
            res.failure = "Z(g) != u^(d-e) Z(dual; 1/u, v)"
            res.witness = g
            return res
        subset = [i for i in range(st.e) if rng.random() < 0.5]
        gp = partial_dual(g, subset)
        if not equivalent(partial_dual(gp, subset), g):
            res.failure = "partial_dual is not an involution on a hyperedge set"
            res.witness = g
            return res
        degrees = [c.degree for c in cycles(g, "br")]
        prefactor = MultiPoly.const(1)
        for e in subset:
            prefactor = prefactor * MultiPoly.monomial(1, {f"u_{e}": degrees[e] - 1})
        flipped = dichromatic_multivariate(gp).substitute({
            f"u_{e}": MultiPoly.monomial(1, {f"u_{e}": -1}) for e in subset})
        if dichromatic_multivariate(g) != prefactor * flipped:
            res.failure = "multivariate partial-duality identity failed"
            res.witness = g
            return res
        if is_orientable(g) != is_orientable(gp):
            pdual_orientability_flips += 1
    res.info.append(
        f"partial duality changed orientability on {pdual_orientability_flips}"
        f"/{trials} instances (recolouring never alters the underlying graph)")
    return res


def check_delcon(trials: int, max_vertices: int, seed: int) -> SuiteResult:
    res = SuiteResult("delcon", trials)
    rng = random.Random(seed * 31 + 2)
    exponents: list[tuple[int, int]] = []
    for g in random_gehms(seed, trials, max_vertices):
        z = dichromatic(g)
        if dichromatic_delcon(g) != z:
            res.failure = "dichromatic != dichromatic_delcon"
            res.witness = g
            return res
        t = tutte(g)
        if tutte_delcon(g, exponent_log=exponents) != t:
            res.failure = "tutte != tutte_delcon"
            res.witness = g
            return res
        if tutte_from_dichromatic(g) != t:
            res.failure = "tutte != tutte_from_dichromatic"
            res.witness = g
            return res
        st = stats(g)
        if st.e >= 1:
            e = rng.randrange(st.e)
            minus, over = delete(g, e), contract(g, e)
            if stats(minus).v != st.v:
                res.failure = "deletion changed the hypervertex count"
                res.witness = g
                return res
            if stats(over).f != st.f:
                res.failure = "contraction changed the hyperface count"
                res.witness = g
                return res
            if stats(minus).e != st.e - 1 or stats(over).e != st.e - 1:
                res.failure = "delete/contract did not drop exactly one hyperedge"
                res.witness = g
                return res
            if stats(minus).euler_genus > st.euler_genus:
                res.failure = "deletion increased Euler genus"
                res.witness = g
                return res
            if is_orientable(g) and not (is_orientable(minus) and is_orientable(over)):
                res.failure = "delete/contract broke orientability"
                res.witness = g
                return res
        if st.e >= 2:
            e, f = sorted(rng.sample(range(st.e), 2))
            shift = lambda j, i: j - 1 if i < j else j
            pairs = [
                (delete(delete(g, e), shift(f, e)), delete(delete(g, f), e)),
                (contract(contract(g, e), shift(f, e)), contract(contract(g, f), e)),
                (delete(contract(g, e), shift(f, e)), contract(delete(g, f), e)),
            ]
            for left, right in pairs:
                if not equivalent(left, right):
                    res.failure = "deletion/contraction commutation failed"
                    res.witness = g
                    return res
    negatives = [p for p in exponents if p[0] < 0 or p[1] < 0]
    res.info.append(
        f"deletion-contraction prefactor exponents: {len(exponents)} seen,"
        f" {len(negatives)} negative"
        + (f" (e.g. {negatives[0]})" if negatives else ""))
    return res


def check_transition(trials: int, max_vertices: int, seed: int) -> SuiteResult:
    res = SuiteResult("transition", trials)
    for g in random_gehms(seed, trials, max_vertices):
        z = dichromatic(g)
        if phi_m(g) != z:
            res.failure = "transition polynomial != dichromatic polynomial"
            res.witness = g
            return res
        m = medial_map(g)
        ne = len(m.vertices)
        for mask in range(1 << ne):
            subset = [i for i in range(ne) if mask >> i & 1]
            if smooth_count(m, state_from_c_set(m, subset)) != stats(restrict(g, subset)).f:
                res.failure = "state loop count != hyperface count of restriction"
                res.witness = g
                return res
    return res


def check_evals(trials: int, max_vertices: int, seed: int) -> SuiteResult:
    res = SuiteResult("evals", trials)
    connected_plane = 0
    for g in random_gehms(seed, trials, max_vertices):
        st = stats(g)
        if evaluate_tutte(g, 2, 2) != 2 ** st.e:
            res.failure = "T(2,2) != 2^e"
            res.witness = g
            return res
        if st.k == 1:
            t11 = evaluate_tutte(g, 1, 1)
            if st.euler_genus == 0:
                connected_plane += 1
                if t11 != count_spanning_hypertrees(g):
                    res.failure = "T(1,1) != spanning hypertree count on a plane gehm"
                    res.witness = g
                    return res
            elif t11 != 0:
                res.failure = "T(1,1) != 0 on a positive-genus gehm"
                res.witness = g
                return res
        t = tutte(g)
        try:
            expanded = expand_xy(t)
        except ValueError:
            if is_orientable(g):
                res.failure = "orientable gehm whose T does not expand in x, y"
                res.witness = g
                return res
            continue
        for a, b in ((2, 2), (1, 1), (5, 10)):
            if expanded.eval({"x": a, "y": b}) != evaluate_tutte(g, a, b):
                res.failure = f"expand_xy disagrees with direct evaluation at {(a, b)}"
                res.witness = g
                return res
    res.info.append(f"{connected_plane}/{trials} instances were connected and plane")
    return res


def check_multiplicativity(trials: int, max_vertices: int, seed: int) -> SuiteResult:
    res = SuiteResult("multiplicativity", trials)
    rng = random.Random(seed * 31 + 5)
    for _ in range(trials):
        n1 = rng.randrange(2, max_vertices + 1, 2)
        n2 = rng.randrange(2, max_vertices + 1, 2)
        g1, g2 = random_gehm(rng, n1), random_gehm(rng, n2)
        u = disjoint_union(g1, g2)
        s1, s2, su = stats(g1), stats(g2), stats(u)
        if (su.v, su.e, su.f, su.k, su.d) != (
                s1.v + s2.v, s1.e + s2.e, s1.f + s2.f, s1.k + s2.k, s1.d + s2.d):
            res.failure = "disjoint union stats are not componentwise sums"
            res.witness = u
            return res
        t1, t2 = tutte(g1), tutte(g2)
        if tutte(u) != t1 * t2:
            res.failure = "T(disjoint union) != product"
            res.witness = u
            return res
        x1 = rng.randrange(n1)
        x2 = rng.randrange(n2)
        j = join(g1, (x1, g1.g[x1]), g2, (x2, g2.g[x2]))
        sj = stats(j)
        if sj.v != su.v - 1 or sj.f != su.f - 1:
            res.failure = "join did not drop v and f by exactly one"
            res.witness = j
            return res
        if tutte(j) != t1 * t2:
            res.failure = "T(join) != product"
            res.witness = j
            return res
    return res


CHECKS = {
    "duality": check_duality,
    "delcon": check_delcon,
    "transition": check_transition,
    "evals": check_evals,
    "multiplicativity": check_multiplicativity,
}


def run_suites(names, trials: int, max_vertices: int, seed: int) -> list[SuiteResult]:
    return [CHECKS[name](trials, max_vertices, seed) for name in names]
