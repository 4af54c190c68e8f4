"""Exact multivariate polynomials over Q with named variables and parameters.

A ring declares an ordered variable list plus a (possibly empty) list of
parameter names.  Parameters are transcendental scalars: they take part in
arithmetic exactly like variables, but differentiation, divided differences
and the basis engines act on true variables only.  Coefficients are
`fractions.Fraction`; nothing here ever rounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Iterable, Mapping, Union

Scalar = Union[int, Fraction]


class PolyError(ValueError):
    pass


@dataclass(frozen=True)
class PolyRing:
    """Ordered symbol table: germ variables first, then parameters."""

    vars: tuple[str, ...]
    params: tuple[str, ...] = ()

    def __post_init__(self):
        syms = self.vars + self.params
        if len(set(syms)) != len(syms):
            raise PolyError(f"duplicate symbol in ring {syms}")

    @property
    def syms(self) -> tuple[str, ...]:
        return self.vars + self.params

    @property
    def nvars(self) -> int:
        return len(self.vars)

    @property
    def nsyms(self) -> int:
        return len(self.vars) + len(self.params)

    def index(self, name: str) -> int:
        try:
            return self.syms.index(name)
        except ValueError:
            raise PolyError(f"unknown symbol {name!r} in ring {self.syms}") from None

    def var_index(self, name: str) -> int:
        try:
            return self.vars.index(name)
        except ValueError:
            raise PolyError(f"{name!r} is not a variable of {self.vars}") from None

    def drop_vars(self, names: Iterable[str]) -> "PolyRing":
        dead = set(names)
        return PolyRing(tuple(v for v in self.vars if v not in dead), self.params)

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def const(self, c: Scalar) -> "Polynomial":
        c = Fraction(c)
        if c == 0:
            return self.zero()
        return Polynomial(self, {(0,) * self.nsyms: c})

    def sym(self, name: str) -> "Polynomial":
        e = [0] * self.nsyms
        e[self.index(name)] = 1
        return Polynomial(self, {tuple(e): Fraction(1)})

    def monomial(self, exps: Mapping[str, int], coeff: Scalar = 1) -> "Polynomial":
        e = [0] * self.nsyms
        for name, k in exps.items():
            e[self.index(name)] = k
        return Polynomial(self, {tuple(e): Fraction(coeff)})


class Polynomial:
    """Immutable sparse polynomial: exponent tuple (over ring.syms) -> Fraction."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: Mapping[tuple, Scalar], _clean=False):
        self.ring = ring
        if _clean:
            self.terms = dict(terms)
        else:
            clean = {}
            for e, c in terms.items():
                c = Fraction(c)
                if c != 0:
                    clean[tuple(e)] = c
            self.terms = clean

    # -- predicates / accessors ------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        zero = (0,) * self.ring.nsyms
        return all(e == zero for e in self.terms)

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.ring.nsyms, Fraction(0))

    def total_degree(self) -> int:
        """Max total degree over all symbols; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, name: str) -> int:
        i = self.ring.index(name)
        if not self.terms:
            return -1
        return max(e[i] for e in self.terms)

    def involves(self, name: str) -> bool:
        i = self.ring.index(name)
        return any(e[i] for e in self.terms)

    def uses_params(self) -> bool:
        nv = self.ring.nvars
        return any(any(e[nv:]) for e in self.terms)

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: "Polynomial"):
        if self.ring != other.ring:
            raise PolyError("mixed rings")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        self._check(other)
        res = dict(self.terms)
        for e, c in other.terms.items():
            s = res.get(e, 0) + c
            if s:
                res[e] = s
            else:
                res.pop(e, None)
        return Polynomial(self.ring, res, _clean=True)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {e: -c for e, c in self.terms.items()}, _clean=True)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if c == 0:
                return self.ring.zero()
            return Polynomial(self.ring, {e: v * c for e, v in self.terms.items()}, _clean=True)
        self._check(other)
        res: dict[tuple, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = res.get(e, 0) + c1 * c2
                if s:
                    res[e] = s
                else:
                    res.pop(e, None)
        return Polynomial(self.ring, res, _clean=True)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise PolyError("negative exponent")
        out = self.ring.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __repr__(self):
        from .parse import to_string

        return f"Polynomial({to_string(self)!r})"

    # -- calculus / substitution ------------------------------------------

    def deriv(self, name: str) -> "Polynomial":
        i = self.ring.var_index(name)
        res = {}
        for e, c in self.terms.items():
            if e[i]:
                e2 = list(e)
                e2[i] -= 1
                res[tuple(e2)] = c * e[i]
        return Polynomial(self.ring, res)

    def subs(self, assignment: Mapping[str, Union["Polynomial", Scalar]],
             ring: PolyRing | None = None) -> "Polynomial":
        """Substitute symbols by polynomials or scalars (exact expansion).

        `ring` is the target ring; defaults to this one.  Symbols of the
        source ring missing from the target must be assigned.
        """
        target = ring if ring is not None else self.ring
        values: list[Polynomial] = []
        for name in self.ring.syms:
            if name in assignment:
                v = assignment[name]
                if not isinstance(v, Polynomial):
                    v = target.const(v)
                elif v.ring != target:
                    v = v.cast(target)
                values.append(v)
            else:
                values.append(target.sym(name))
        out = target.zero()
        pow_cache: dict[tuple[int, int], Polynomial] = {}

        def power(i: int, k: int) -> Polynomial:
            got = pow_cache.get((i, k))
            if got is None:
                got = values[i] ** k
                pow_cache[(i, k)] = got
            return got

        for e, c in self.terms.items():
            term = target.const(c)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            out = out + term
        return out

    def subs_params(self, assignment: Mapping[str, Scalar]) -> "Polynomial":
        """Substitute every parameter by a rational; result is parameter-free."""
        missing = [q for q in self.ring.params if q not in assignment]
        if missing:
            have = {q for q in self.ring.params if self.involves(q)}
            missing = [q for q in missing if q in have]
            if missing:
                raise PolyError(f"unassigned parameters {missing}")
        target = PolyRing(self.ring.vars, ())
        full = {q: Fraction(assignment.get(q, 0)) for q in self.ring.params}
        return self.subs(full, ring=target)

    def cast(self, ring: PolyRing) -> "Polynomial":
        """Re-express in another ring; every used symbol must exist there."""
        if ring == self.ring:
            return self
        pos = []
        for i, name in enumerate(self.ring.syms):
            pos.append(ring.syms.index(name) if name in ring.syms else -1)
        res = {}
        for e, c in self.terms.items():
            e2 = [0] * ring.nsyms
            for i, k in enumerate(e):
                if k:
                    if pos[i] < 0:
                        raise PolyError(f"symbol {self.ring.syms[i]!r} absent from target ring")
                    e2[pos[i]] = k
            res[tuple(e2)] = res.get(tuple(e2), 0) + c
        return Polynomial(ring, res)

    def var_exponents(self) -> dict[tuple, Fraction]:
        """Terms keyed by variable exponents only; raises if parameters occur."""
        if self.uses_params():
            raise PolyError("polynomial still carries parameters")
        nv = self.ring.nvars
        return {e[:nv]: c for e, c in self.terms.items()}


# -- symmetric helpers and divided differences ----------------------------


def h_complete(ring: PolyRing, degree: int, names: Iterable[str]) -> Polynomial:
    """Complete homogeneous symmetric polynomial of the given degree."""
    if degree < 0:
        return ring.zero()
    if degree == 0:
        return ring.const(1)
    idx = [ring.index(n) for n in names]
    terms = {}
    for combo in combinations_with_replacement(idx, degree):
        e = [0] * ring.nsyms
        for i in combo:
            e[i] += 1
        terms[tuple(e)] = Fraction(1)
    return Polynomial(ring, terms)


def _split_on_var(f: Polynomial, var: str) -> dict[int, dict[tuple, Fraction]]:
    """Group terms of f by the exponent of `var`; keys of inner dicts have var zeroed."""
    i = f.ring.index(var)
    out: dict[int, dict[tuple, Fraction]] = {}
    for e, c in f.terms.items():
        k = e[i]
        e2 = list(e)
        e2[i] = 0
        out.setdefault(k, {})[tuple(e2)] = c
    return out


def divided_differences(f: Polynomial, var: str, fresh: list[str],
                        ring: PolyRing) -> list[Polynomial]:
    """Iterated divided differences of f in `var` over fresh variables.

    Returns [F_1, ..., F_{k-1}] where k = len(fresh) and F_j is the j-th
    divided difference, a symmetric polynomial in fresh[0..j].  Uses the
    identity that the j-th divided difference of var^m is the complete
    homogeneous polynomial of degree m-j in the fresh variables.
    """
    k = len(fresh)
    if k < 2:
        raise PolyError("need at least two fresh variables")
    for name in fresh:
        if name in f.ring.syms and f.involves(name):
            raise PolyError(f"fresh variable {name!r} already occurs in the polynomial")
    by_deg = _split_on_var(f, var)
    coeff_polys = {
        m: Polynomial(f.ring, part).cast(ring) for m, part in by_deg.items()
    }
    out = []
    for j in range(1, k):
        acc = ring.zero()
        for m, cp in coeff_polys.items():
            if m >= j:
                acc = acc + cp * h_complete(ring, m - j, fresh[: j + 1])
        out.append(acc)
    return out


def divided_difference(f: Polynomial, var: str, fresh: tuple[str, str],
                       ring: PolyRing | None = None) -> Polynomial:
    """First divided difference: q with f(z1) - f(z2) = (z1 - z2) * q."""
    if ring is None:
        extra = [n for n in fresh if n not in f.ring.vars]
        ring = PolyRing(f.ring.vars + tuple(extra), f.ring.params)
    return divided_differences(f, var, list(fresh), ring)[0]


# -- linear elimination ----------------------------------------------------


@dataclass
class Elimination:
    """Result of iterated graph-style elimination of linear variables."""

    gens: list[Polynomial]
    subs: dict[str, Polynomial]
    ring: PolyRing  # ring on the surviving variables

    @property
    def eliminated(self) -> tuple[str, ...]:
        return tuple(self.subs)


def _linear_candidates(g: Polynomial, protected: frozenset[str]) -> list[str]:
    """Variables occurring in g only once, linearly, with a constant coefficient."""
    ring = g.ring
    nv = ring.nvars
    seen: dict[int, list] = {}
    for e, c in g.terms.items():
        for i in range(nv):
            if e[i]:
                seen.setdefault(i, []).append((e, c))
    out = []
    for i, occs in seen.items():
        name = ring.vars[i]
        if name in protected:
            continue
        if len(occs) == 1:
            e, _ = occs[0]
            if e[i] == 1 and sum(e) == 1:  # pure constant-coefficient linear term
                out.append(name)
    return out


def eliminate_linear(gens: Iterable[Polynomial],
                     protected: Iterable[str] = ()) -> Elimination:
    """Repeatedly solve a generator that is linear in a variable and substitute.

    A variable is eliminable from a generator g when it appears in g exactly
    once, to the first power and with a coefficient in Q*, so that solving is
    an exact polynomial coordinate change.  Protected variables are never
    eliminated.  Generators that become zero are dropped; the substitution
    map is fully back-substituted.
    """
    gens = [g for g in gens]
    if not gens:
        raise PolyError("no generators")
    ring = gens[0].ring
    protected = frozenset(protected)
    subs: dict[str, Polynomial] = {}
    live = [g for g in gens if not g.is_zero()]
    while True:
        pick = None
        for idx, g in enumerate(live):
            names = _linear_candidates(g, protected)
            if names:
                # prefer the latest-declared variable (keeps early ones as coordinates)
                name = max(names, key=ring.var_index)
                pick = (idx, name)
                break
        if pick is None:
            break
        idx, name = pick
        g = live.pop(idx)
        i = ring.index(name)
        coef = None
        rest = {}
        for e, c in g.terms.items():
            if e[i]:
                coef = c
            else:
                rest[e] = c
        sol = Polynomial(ring, rest) * (Fraction(-1) / coef)
        repl = {name: sol}
        live = [h.subs(repl) for h in live]
        live = [h for h in live if not h.is_zero()]
        subs = {v: s.subs(repl) for v, s in subs.items()}
        subs[name] = sol
    out_ring = ring.drop_vars(subs.keys())
    out = [g.cast(out_ring) for g in live]
    return Elimination(out, subs, out_ring)
