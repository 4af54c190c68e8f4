"""Ideals in polynomial rings and their standard-basis invariants.

Local mode works in the ring of germs at the origin (Mora standard bases
with a negative degree order); affine mode uses global Groebner bases.
Colength, Krull dimension and emptiness are read off the leading ideal.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from math import lcm

from . import _kernel
from .orders import MonomialOrder
from .poly import PolyError, Polynomial, PolyRing

INF = float("inf")


@dataclass(frozen=True)
class Ideal:
    ring: PolyRing
    gens: tuple[Polynomial, ...]
    local: bool = True

    def __post_init__(self):
        for g in self.gens:
            if g.ring != self.ring:
                raise PolyError("generator from a different ring")

    @staticmethod
    def of(gens, local=True) -> "Ideal":
        gens = tuple(gens)
        if not gens:
            raise PolyError("ideal needs at least one generator")
        return Ideal(gens[0].ring, gens, local)

    def with_extra(self, more) -> "Ideal":
        return replace(self, gens=self.gens + tuple(more))


def _int_terms(p: Polynomial) -> dict:
    """Variable-exponent terms with integer coefficients (cleared denominators)."""
    terms = p.var_exponents()
    if not terms:
        return {}
    den = 1
    for c in terms.values():
        den = lcm(den, c.denominator)
    return {e: int(c * den) for e, c in terms.items()}


def _inverse(perm):
    inv = [0] * len(perm)
    for i, j in enumerate(perm):
        inv[j] = i
    return tuple(inv)


def _permute(terms: dict, perm, inverse=False) -> dict:
    if perm is None:
        return terms
    if inverse:
        perm = _inverse(perm)
    return {tuple(e[i] for i in perm): c for e, c in terms.items()}


_basis_cache: dict = {}


def standard_basis(I: Ideal, order: MonomialOrder | None = None,
                   trunc: int = 0) -> list[dict]:
    """Kernel-level standard basis (list of primitive integer term dicts).

    trunc = D computes modulo m^D (local ideals only): the output is a
    standard basis of I + m^D, cheap when tails are large.
    """
    if order is None:
        order = MonomialOrder(local=I.local)
    if order.local != I.local:
        raise PolyError("order kind does not match ideal locality")
    perm = order.permutation(I.ring.vars)
    key = (I.ring, tuple(I.gens), I.local, perm, trunc)
    got = _basis_cache.get(key)
    if got is not None:
        return got
    gens = [_permute(_int_terms(g), perm) for g in I.gens]
    gens = [g for g in gens if g]
    basis = _kernel.std_basis(gens, I.local, trunc) if gens else []
    basis = [_permute(g, perm, inverse=True) for g in basis]
    if len(_basis_cache) > 4096:
        _basis_cache.clear()
    _basis_cache[key] = basis
    return basis


def standard_basis_ideal(I: Ideal, order: MonomialOrder | None = None) -> Ideal:
    """Same basis repackaged as an Ideal of Polynomials."""
    basis = standard_basis(I, order)
    nv = I.ring.nvars
    pad = (0,) * (I.ring.nsyms - nv)
    polys = tuple(
        Polynomial(I.ring, {e + pad: Fraction(c) for e, c in g.items()}) for g in basis
    )
    return replace(I, gens=polys)


def leading_exponents(I: Ideal, order: MonomialOrder | None = None) -> list[tuple]:
    if order is None:
        order = MonomialOrder(local=I.local)
    perm = order.permutation(I.ring.vars)
    out = []
    for g in standard_basis(I, order):
        le = _kernel.lead_exp(_permute(g, perm), order.local)
        if perm is not None:
            inv = _inverse(perm)
            le = tuple(le[i] for i in inv)
        out.append(le)
    return out


def reduces_to_zero(f: Polynomial, I: Ideal) -> bool:
    """Membership test: f in I (local: up to a unit, which is what germs need)."""
    if f.is_zero():
        return True
    basis = standard_basis(I)
    return not _kernel.normal_form(_int_terms(f), basis, I.local)


def _minimal_exponents(leads: list[tuple]) -> list[tuple]:
    out = []
    for e in leads:
        if not any(all(x <= y for x, y in zip(f, e)) and f != e for f in leads):
            if e not in out:
                out.append(e)
    return out


def _walk_staircase(leads: list[tuple], nvars: int, maxdeg):
    """Enumerate standard monomials (DFS over the downward-closed staircase).

    Yields (count, top_degree); stops early at degree > maxdeg by reporting
    top_degree = maxdeg + 1 (uncertified / infinite marker for the caller).
    """
    leads = _minimal_exponents(leads)

    def divisible(m):
        return any(all(x <= y for x, y in zip(e, m)) for e in leads)

    zero = (0,) * nvars
    if divisible(zero):
        return 0, 0
    if nvars == 0:
        return 1, 0
    count = 0
    top = 0
    stack = [(zero, 0)]
    while stack:
        m, start = stack.pop()
        d = sum(m)
        if maxdeg is not None and d > maxdeg:
            return count, maxdeg + 1
        count += 1
        if d > top:
            top = d
        for i in range(start, nvars):
            child = m[:i] + (m[i] + 1,) + m[i + 1:]
            if not divisible(child):
                stack.append((child, i))
    return count, top


def germ_is_empty(I: Ideal) -> bool:
    """True iff the germ at the origin is empty.

    The origin lies in the zero set exactly when every generator vanishes
    there, so this is a constant-term check, not a basis computation.
    """
    if not I.local:
        raise PolyError("germ emptiness is a local question")
    return any(g.constant_term() != 0 for g in I.gens)


_TRUNC_LADDER = (8, 16, 32)


def colength(I: Ideal, order: MonomialOrder | None = None):
    """dim_Q of the quotient (local: of the local ring); INF if not finite.

    Local colengths are computed modulo m^D for growing D; the answer is
    certified exact once every monomial of degree D-1 lies in the leading
    ideal.  The untruncated basis is the (possibly expensive) last resort.
    """
    nvars = I.ring.nvars
    if I.local:
        if germ_is_empty(I):
            return 0
        for D in _TRUNC_LADDER:
            leads = []
            for g in standard_basis(I, order, trunc=D):
                leads.append(_kernel.lead_exp(g, True))
            if any(sum(e) == 0 for e in leads):
                return 0
            count, top = _walk_staircase(leads, nvars, D - 1)
            if top <= D - 2:
                return count
    leads = leading_exponents(I, order)
    if not leads:
        return INF if nvars else 1
    if any(sum(e) == 0 for e in leads):
        return 0
    # finite iff every axis carries a pure power
    for i in range(nvars):
        if not any(sum(e) == e[i] and e[i] > 0 for e in leads):
            return INF
    count, _ = _walk_staircase(leads, nvars, None)
    return count


def contains_one(I: Ideal) -> bool:
    """Affine Nullstellensatz check: ideal is the whole ring."""
    J = replace(I, local=False)
    leads = leading_exponents(J, MonomialOrder(local=False))
    zero = (0,) * I.ring.nvars
    return any(e == zero for e in leads)


def _monomial_ideal_dimension(leads: list[tuple], nvars: int) -> int:
    """Krull dimension of a monomial ideal: largest independent variable set."""
    if any(sum(e) == 0 for e in leads):
        return -1
    leads = _minimal_exponents(leads)
    supports = [frozenset(i for i, x in enumerate(e) if x) for e in leads]
    best = -1
    for mask in range(1 << nvars):
        S = frozenset(i for i in range(nvars) if mask >> i & 1)
        if len(S) <= best:
            continue
        if all(not s <= S for s in supports):
            best = len(S)
    return best


def local_dimension(I: Ideal, order: MonomialOrder | None = None) -> int:
    """Krull dimension of the local quotient ring (error on the empty germ)."""
    leads = leading_exponents(I, order)
    if not leads:
        return I.ring.nvars
    d = _monomial_ideal_dimension(leads, I.ring.nvars)
    if d < 0:
        raise PolyError("empty germ has no dimension")
    return d


def jacobian(gens: list[Polynomial], varnames: tuple[str, ...]) -> list[list[Polynomial]]:
    return [[g.deriv(v) for v in varnames] for g in gens]


def minors(matrix: list[list[Polynomial]], size: int) -> list[Polynomial]:
    """All size x size minors (exact cofactor expansion)."""
    from itertools import combinations

    if not matrix:
        return []
    nrows = len(matrix)
    ncols = len(matrix[0])
    ring = matrix[0][0].ring
    out = []

    def det(rows, cols):
        if len(rows) == 1:
            return matrix[rows[0]][cols[0]]
        acc = ring.zero()
        r = rows[0]
        rest = rows[1:]
        for t, c in enumerate(cols):
            entry = matrix[r][c]
            if entry.is_zero():
                continue
            sub = det(rest, cols[:t] + cols[t + 1:])
            acc = acc + entry * sub * ((-1) ** t)
        return acc

    for rows in combinations(range(nrows), size):
        for cols in combinations(range(ncols), size):
            d = det(list(rows), list(cols))
            if not d.is_zero():
                out.append(d)
    return out


def singular_locus_ideal(I: Ideal) -> Ideal:
    """I plus the codimension-size minors of its Jacobian."""
    gens = list(I.gens)
    size = min(len(gens), I.ring.nvars)
    mins = minors(jacobian(gens, I.ring.vars), size) if size else []
    return I.with_extra(mins)


def affine_is_smooth(I: Ideal, expected_dim: int) -> bool:
    """Smoothness of the affine complete intersection (possibly empty).

    True iff 1 lies in I + (maximal minors of the Jacobian), global basis.
    """
    J = replace(singular_locus_ideal(I), local=False)
    return contains_one(J)
