"""Exact sparse Laurent polynomials over named variables.

Terms map integer exponent vectors (negative exponents allowed) to
nonzero arbitrary-precision integer coefficients.  Values are immutable;
arithmetic returns new polynomials.  Variable tables are unioned by name
and kept sorted, so structural equality is semantic equality.

Canonical printing sorts terms by graded-lexicographic order, largest
first: ``x + y - 2``.
"""

from __future__ import annotations

from fractions import Fraction


class MultiPoly:
    __slots__ = ("vars", "terms")

    def __init__(self, vars=(), terms=None):
        """Build from a variable name tuple and an {exponents: coeff}
        mapping; input is normalised (zero coefficients dropped, unused
        variables removed, variables sorted)."""
        vars = tuple(vars)
        terms = dict(terms or {})
        terms = {tuple(e): int(c) for e, c in terms.items() if c != 0}
        for e in terms:
            if len(e) != len(vars):
                raise ValueError(f"exponent vector {e} does not match {vars}")
        used = [i for i in range(len(vars))
                if any(e[i] != 0 for e in terms)]
        if len(used) != len(vars):
            vars = tuple(vars[i] for i in used)
            terms = {tuple(e[i] for i in used): c for e, c in terms.items()}
        if any(vars[i] >= vars[i + 1] for i in range(len(vars) - 1)):
            order = sorted(range(len(vars)), key=lambda i: vars[i])
            if len(set(vars)) != len(vars):
                raise ValueError(f"duplicate variable in {vars}")
            vars = tuple(vars[i] for i in order)
            terms = {tuple(e[i] for i in order): c for e, c in terms.items()}
        object.__setattr__(self, "vars", vars)
        object.__setattr__(self, "terms", terms)

    # -- constructors ---------------------------------------------------

    @classmethod
    def const(cls, c: int) -> "MultiPoly":
        return cls((), {(): c} if c else {})

    @classmethod
    def var(cls, name: str, exp: int = 1) -> "MultiPoly":
        return cls((name,), {(exp,): 1})

    @classmethod
    def monomial(cls, coeff: int, powers: dict[str, int]) -> "MultiPoly":
        names = tuple(powers)
        return cls(names, {tuple(powers[v] for v in names): coeff})

    @classmethod
    def zero(cls) -> "MultiPoly":
        return cls((), {})

    # -- structure ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.vars

    def constant_value(self) -> int:
        if self.vars:
            raise ValueError(f"not a constant: {self}")
        return self.terms.get((), 0)

    def _aligned(self, other: "MultiPoly"):
        if self.vars == other.vars:
            return self.vars, self.terms, other.terms
        names = tuple(sorted(set(self.vars) | set(other.vars)))

        def remap(p):
            pos = [names.index(v) for v in p.vars]
            out = {}
            for e, c in p.terms.items():
                full = [0] * len(names)
                for i, x in zip(pos, e):
                    full[i] = x
                out[tuple(full)] = c
            return out

        return names, remap(self), remap(other)

    @staticmethod
    def _coerce(x) -> "MultiPoly":
        if isinstance(x, MultiPoly):
            return x
        if isinstance(x, int):
            return MultiPoly.const(x)
        return NotImplemented

    # -- ring operations --------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        names, a, b = self._aligned(other)
        out = dict(a)
        for e, c in b.items():
            out[e] = out.get(e, 0) + c
        return MultiPoly(names, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        names, a, b = self._aligned(other)
        out: dict[tuple, int] = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly(names, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial power must be a non-negative integer")
        result = MultiPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c: int) -> "MultiPoly":
        return MultiPoly(self.vars, {e: c * v for e, v in self.terms.items()})

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    # -- evaluation and substitution --------------------------------------

    def eval(self, assignment: dict) -> Fraction:
        """Exact evaluation; every variable needs a value and negative
        exponents need a nonzero one."""
        missing = [v for v in self.vars if v not in assignment]
        if missing:
            raise ValueError(f"no value for variable(s) {missing}")
        values = [Fraction(assignment[v]) for v in self.vars]
        total = Fraction(0)
        for e, c in self.terms.items():
            term = Fraction(c)
            for val, exp in zip(values, e):
                if exp == 0:
                    continue
                if val == 0 and exp < 0:
                    raise ZeroDivisionError(
                        "negative exponent evaluated at zero")
                term *= val ** exp
            total += term
        return total

    def substitute(self, mapping: dict[str, "MultiPoly"]) -> "MultiPoly":
        """Replace variables by polynomials.  A variable occurring with a
        negative exponent may only be replaced by an invertible monomial
        (single term, coefficient 1 or -1)."""
        result = MultiPoly.zero()
        for e, c in self.terms.items():
            term = MultiPoly.const(c)
            for name, exp in zip(self.vars, e):
                if exp == 0:
                    continue
                value = mapping.get(name, MultiPoly.var(name))
                if exp > 0:
                    term = term * value ** exp
                else:
                    term = term * _monomial_inverse(value) ** (-exp)
            result = result + term
        return result

    # -- rendering ---------------------------------------------------------

    def sorted_terms(self) -> list[tuple[tuple, int]]:
        return sorted(self.terms.items(),
                      key=lambda item: (sum(item[0]), item[0]), reverse=True)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            factors = [
                name if exp == 1 else f"{name}^{exp}"
                for name, exp in zip(self.vars, e) if exp != 0
            ]
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"MultiPoly({self})"

    def to_obj(self) -> list:
        """JSON rendering: [[coeff, {var: exp, ...}], ...] in canonical
        term order."""
        return [
            [c, {v: x for v, x in zip(self.vars, e) if x != 0}]
            for e, c in self.sorted_terms()
        ]

    def min_exponents(self) -> dict[str, int]:
        out = {v: 0 for v in self.vars}
        for e in self.terms:
            for v, x in zip(self.vars, e):
                out[v] = min(out[v], x)
        return out

    def is_laurent_free(self) -> bool:
        return all(x >= 0 for x in self.min_exponents().values())


def _monomial_inverse(p: MultiPoly) -> MultiPoly:
    if len(p.terms) != 1:
        raise ValueError(f"cannot invert non-monomial {p}")
    (e, c), = p.terms.items()
    if c not in (1, -1):
        raise ValueError(f"cannot invert monomial with coefficient {c}")
    return MultiPoly(p.vars, {tuple(-x for x in e): c})


def expand_xy(p: MultiPoly, pairs=(("X", "x"), ("Y", "y"))) -> MultiPoly:
    """Substitute X^2 -> (x-1) and Y^2 -> (y-1) and expand.

    Requires every X- and Y-exponent to be even and non-negative; an odd
    exponent means the polynomial has no expansion in x and y (the gehm
    it came from may be non-orientable)."""
    rename = dict(pairs)
    for old in rename:
        if old not in p.vars:
            continue
        idx = p.vars.index(old)
        for e in p.terms:
            if e[idx] < 0:
                raise ValueError(f"negative exponent of {old}: not expandable")
            if e[idx] % 2 != 0:
                raise ValueError(
                    f"odd exponent of {old}: not expandable;"
                    " gehm may be non-orientable")
    shifted = {new: MultiPoly.var(new) - 1 for new in rename.values()}
    result = MultiPoly.zero()
    for e, c in p.terms.items():
        term = MultiPoly.const(c)
        for name, exp in zip(p.vars, e):
            if exp == 0:
                continue
            if name in rename:
                term = term * shifted[rename[name]] ** (exp // 2)
            else:
                term = term * MultiPoly.monomial(1, {name: exp})
        result = result + term
    return result
