"""Polynomial invariants of gehms.

The dichromatic polynomial is the hyperedge-subset sum

    Z(H; u, v) = sum over A of  u^(d(A)-|A|) * v^f(A),

its multivariate refinement replaces u by one variable per hyperedge,
and the hypermap Tutte polynomial is

    T(H; x, y) = sum over A of
        (x-1)^(rho(H)-rho(A)) * (y-1)^(d(A)-|A|-rho(A))

with rho(A) = v(A) - k(A) + genus(A)/2 = (v(A)+d(A)-|A|-f(A))/2.  Since
rho may be half-integral, T is computed exactly in X = sqrt(x-1) and
Y = sqrt(y-1), where every exponent is an integer; orientable gehms
expand back to x and y.

Each polynomial also has a deletion-contraction recursion, memoised on
canonical forms, plus the direct translation T <-> Z.  Subset sums blow
up as 2^e, so they refuse more than ``DEFAULT_MAX_EDGES`` hyperedges
unless overridden.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .core import Gehm, GehmError, canonical_form, cycles, stats
from .ops import contract, delete, partial_dual, restrict
from .poly import MultiPoly

DEFAULT_MAX_EDGES = 20


class GuardExceeded(RuntimeError):
    """A computation would exceed its configured size guard."""


def _edge_guard(ne: int, max_edges: int | None) -> None:
    limit = DEFAULT_MAX_EDGES if max_edges is None else max_edges
    if ne > limit:
        raise GuardExceeded(
            f"{ne} hyperedges exceeds the subset-sum guard of {limit};"
            " raise max_edges to override")


def _subsets(ne: int):
    for mask in range(1 << ne):
        yield [i for i in range(ne) if mask >> i & 1]


# ---------------------------------------------------------------------
# Rank data


@dataclass(frozen=True)
class RankData:
    """Counting data of the restriction to a hyperedge subset.

    ``two_rho`` is twice the rank, v(A) + d(A) - |A| - f(A); it is kept
    doubled so that it is always an integer."""

    v: int
    k: int
    e: int
    f: int
    d: int
    euler_genus: int
    two_rho: int


def rank_data(gehm: Gehm, subset) -> RankData:
    sub = stats(restrict(gehm, subset))
    size = len(set(subset))
    two_rho = sub.v + sub.d - size - sub.f
    return RankData(sub.v, sub.k, size, sub.f, sub.d, sub.euler_genus, two_rho)


# ---------------------------------------------------------------------
# Dichromatic polynomial


def dichromatic(gehm: Gehm, max_edges: int | None = None) -> MultiPoly:
    """Subset-sum dichromatic polynomial Z(H; u, v)."""
    hh = cycles(gehm, "br")
    _edge_guard(len(hh), max_edges)
    degrees = [c.degree for c in hh]
    total = MultiPoly.zero()
    for subset in _subsets(len(hh)):
        st = stats(restrict(gehm, subset))
        d_a = sum(degrees[i] for i in subset)
        total = total + MultiPoly.monomial(
            1, {"u": d_a - len(subset), "v": st.f})
    return total


def dichromatic_multivariate(gehm: Gehm, max_edges: int | None = None) -> MultiPoly:
    """Z with one variable u_i per hyperedge: the subset term carries
    the product of u_i^(d(i)-1) over i in the subset."""
    hh = cycles(gehm, "br")
    _edge_guard(len(hh), max_edges)
    degrees = [c.degree for c in hh]
    total = MultiPoly.zero()
    for subset in _subsets(len(hh)):
        st = stats(restrict(gehm, subset))
        powers = {f"u_{i}": degrees[i] - 1 for i in subset}
        powers["v"] = st.f
        total = total + MultiPoly.monomial(1, powers)
    return total


def dichromatic_delcon(gehm: Gehm) -> MultiPoly:
    """Z by deletion-contraction: Z(H) = Z(H\\e) + u^(d(e)-1) Z(H/e),
    base case v^f on hyperedgeless gehms.  Pivot is hyperedge 0 (the one
    containing the least vertex); subproblems are memoised on canonical
    form."""
    memo: dict[bytes, MultiPoly] = {}

    def rec(h: Gehm) -> MultiPoly:
        key = canonical_form(h)
        hit = memo.get(key)
        if hit is not None:
            return hit
        hh = cycles(h, "br")
        if not hh:
            out = MultiPoly.monomial(1, {"v": stats(h).f})
        else:
            d_e = hh[0].degree
            out = rec(delete(h, 0)) + (
                MultiPoly.monomial(1, {"u": d_e - 1}) * rec(contract(h, 0)))
        memo[key] = out
        return out

    return rec(gehm)


# ---------------------------------------------------------------------
# Tutte polynomial


def tutte(gehm: Gehm, max_edges: int | None = None) -> MultiPoly:
    """Subset-sum Tutte polynomial in X = sqrt(x-1), Y = sqrt(y-1):
    the subset A contributes X^(2rho(H)-2rho(A)) Y^(2(d(A)-|A|)-2rho(A))."""
    hh = cycles(gehm, "br")
    _edge_guard(len(hh), max_edges)
    st = stats(gehm)
    two_rho_full = st.v + st.d - st.e - st.f
    total = MultiPoly.zero()
    for subset in _subsets(len(hh)):
        rd = rank_data(gehm, subset)
        total = total + MultiPoly.monomial(1, {
            "X": two_rho_full - rd.two_rho,
            "Y": 2 * (rd.d - rd.e) - rd.two_rho,
        })
    return total


def tutte_delcon(gehm: Gehm, exponent_log: list | None = None) -> MultiPoly:
    """T by deletion-contraction:

        T(H) = X^(f(H\\e)-f(H)+d(e)-1) T(H\\e)
             + Y^(v(H/e)-v(H)+d(e)-1) T(H/e)

    with T = 1 on hyperedgeless gehms.  Computed with Laurent-capable
    arithmetic; ``exponent_log`` (if given) collects every prefactor
    exponent pair seen, so callers can report whether a negative one
    ever arises."""
    memo: dict[bytes, MultiPoly] = {}

    def rec(h: Gehm) -> MultiPoly:
        key = canonical_form(h)
        hit = memo.get(key)
        if hit is not None:
            return hit
        hh = cycles(h, "br")
        if not hh:
            out = MultiPoly.const(1)
        else:
            st = stats(h)
            d_e = hh[0].degree
            minus = delete(h, 0)
            over = contract(h, 0)
            x_exp = stats(minus).f - st.f + d_e - 1
            y_exp = stats(over).v - st.v + d_e - 1
            if exponent_log is not None:
                exponent_log.append((x_exp, y_exp))
            out = (MultiPoly.monomial(1, {"X": x_exp}) * rec(minus)
                   + MultiPoly.monomial(1, {"Y": y_exp}) * rec(over))
        memo[key] = out
        return out

    return rec(gehm)


def tutte_from_dichromatic(gehm: Gehm, max_edges: int | None = None) -> MultiPoly:
    """T obtained from Z by the exact substitution
    u -> Y/X, v -> XY followed by the prefactor X^(d-e-f) Y^(-v)."""
    z = dichromatic(gehm, max_edges)
    st = stats(gehm)
    t = z.substitute({
        "u": MultiPoly.monomial(1, {"Y": 1, "X": -1}),
        "v": MultiPoly.monomial(1, {"X": 1, "Y": 1}),
    }) * MultiPoly.monomial(1, {"X": st.d - st.e - st.f, "Y": -st.v})
    if not t.is_laurent_free():
        raise RuntimeError(
            f"translated Tutte polynomial has negative exponents: {t}")
    return t


# ---------------------------------------------------------------------
# Hypertrees and evaluations


def is_hyperforest(gehm: Gehm) -> bool:
    """v = d - e + k; equality in the bound v <= d - e + k that holds
    for every gehm."""
    st = stats(gehm)
    return st.v == st.d - st.e + st.k


def is_hypertree(gehm: Gehm) -> bool:
    st = stats(gehm)
    return st.k == 1 and st.v == st.d - st.e + st.k


def count_spanning_hypertrees(gehm: Gehm, max_edges: int | None = None) -> int:
    """Number of hyperedge subsets whose restriction is a hypertree.
    Defined for connected gehms only."""
    if stats(gehm).k != 1:
        raise GehmError("spanning hypertrees are defined for connected gehms")
    hh = cycles(gehm, "br")
    _edge_guard(len(hh), max_edges)
    return sum(
        1 for subset in _subsets(len(hh))
        if is_hypertree(restrict(gehm, subset))
    )


def _rational_sqrt(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    num, den = q.numerator, q.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


def evaluate_tutte(gehm: Gehm, x, y, max_edges: int | None = None) -> Fraction:
    """Exact value T(H; x, y).

    Works in X = sqrt(x-1), Y = sqrt(y-1); when a square root is
    irrational it is only needed for odd exponents, so even-exponent
    polynomials (e.g. from orientable gehms) evaluate everywhere."""
    t = tutte(gehm, max_edges)
    x1, y1 = Fraction(x) - 1, Fraction(y) - 1
    roots = {"X": _rational_sqrt(x1), "Y": _rational_sqrt(y1)}
    bases = {"X": x1, "Y": y1}
    total = Fraction(0)
    for e, c in t.terms.items():
        term = Fraction(c)
        for name, exp in zip(t.vars, e):
            if exp == 0:
                continue
            if exp % 2 == 0:
                term *= bases[name] ** (exp // 2)
            elif roots[name] is not None:
                term *= roots[name] ** exp
            else:
                raise GehmError(
                    f"evaluating T at {name}^2 = {bases[name]} needs an"
                    " irrational square root; only even-exponent"
                    " polynomials evaluate here (try expand_xy first)")
        total += term
    return total
