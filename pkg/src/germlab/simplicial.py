"""Finite simplicial complexes with a permutation-group action.

A `GComplex` carries the symmetric rank k and the images of the adjacent
transpositions (1 2), ..., (k-1 k) as vertex permutations; the sign of an
element is its sign in Sigma_k, not the parity of the vertex permutation
(the trivial action of Sigma_2 on a point has a sign -1 generator acting as
the identity permutation).  An optional commuting cyclic action of prime
order p rides along for Smith theory.

Actions must be *simplicially good*: a simplex mapped to itself by any group
element is fixed vertex by vertex.  One barycentric subdivision always
repairs a merely simplicial action, because subdivision vertices are
barycenters of simplexes of pairwise distinct dimensions.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from fractions import Fraction
from itertools import permutations

MAX_K = 7  # k! group elements are enumerated


class ActionError(ValueError):
    pass


def _compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    """(p o q)(v) = p[q[v]]."""
    return tuple(p[x] for x in q)


def _perm_order(p: tuple[int, ...]) -> int:
    n = 1
    q = p
    ident = tuple(range(len(p)))
    while q != ident:
        q = _compose(q, p)
        n += 1
        if n > len(p) ** 2 + 1:
            raise ActionError("permutation order overflow")
    return n


def perm_sign(p: tuple[int, ...]) -> int:
    inv = 0
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                inv += 1
    return -1 if inv % 2 else 1


@dataclass(frozen=True)
class GComplex:
    n_vertices: int
    facets: tuple[tuple[int, ...], ...]
    k: int = 1
    sigma_gens: tuple[tuple[int, ...], ...] = ()
    g_perm: tuple[int, ...] | None = None
    p: int | None = None
    coords: tuple[tuple[Fraction, ...], ...] | None = None

    def __post_init__(self):
        if self.k < 1 or self.k > MAX_K:
            raise ActionError(f"symmetric rank k must be in 1..{MAX_K}")
        if len(self.sigma_gens) != self.k - 1:
            raise ActionError(f"need {self.k - 1} generator images for k={self.k}")
        for g in self.sigma_gens:
            if sorted(g) != list(range(self.n_vertices)):
                raise ActionError("generator is not a vertex permutation")
        if self.g_perm is not None:
            if sorted(self.g_perm) != list(range(self.n_vertices)):
                raise ActionError("g action is not a vertex permutation")
            if self.p is None:
                raise ActionError("g action needs its order p")
            if not _is_prime_power(self.p) or self.p % _perm_order(self.g_perm):
                raise ActionError("g action order must divide p (a prime power)")
            for s in self.sigma_gens:
                if _compose(s, self.g_perm) != _compose(self.g_perm, s):
                    raise ActionError("g action does not commute with the symmetric action")
        seen = set()
        for f in self.facets:
            t = tuple(sorted(set(f)))
            if t != tuple(f):
                raise ActionError(f"facet {f} is not a sorted duplicate-free tuple")
            if any(v < 0 or v >= self.n_vertices for v in f):
                raise ActionError(f"facet {f} out of vertex range")
            seen.add(t)

    # -- derived structure --------------------------------------------------

    def simplices(self) -> dict[int, list[tuple[int, ...]]]:
        """Closure of the facets, keyed by dimension, sorted tuples."""
        from itertools import combinations

        got: set[tuple[int, ...]] = set()
        for f in self.facets:
            for q in range(1, len(f) + 1):
                for s in combinations(f, q):
                    got.add(s)
        out: dict[int, list[tuple[int, ...]]] = {}
        for s in got:
            out.setdefault(len(s) - 1, []).append(s)
        for q in out:
            out[q].sort()
        return out

    def dim(self) -> int:
        return max((len(f) - 1 for f in self.facets), default=-1)

    # -- group table ---------------------------------------------------------

    def group(self) -> dict[tuple[int, ...], tuple[tuple[int, ...], int]]:
        """Map abstract sigma (one-line tuple) -> (vertex permutation, sign).

        Built by BFS over the Cayley graph; revisiting an element with a
        different vertex image means the generators are not a representation.
        """
        ident_s = tuple(range(self.k))
        ident_v = tuple(range(self.n_vertices))
        table = {ident_s: (ident_v, 1)}
        frontier = [ident_s]
        while frontier:
            nxt = []
            for s in frontier:
                v, sg = table[s]
                for j, gen in enumerate(self.sigma_gens):
                    s2 = list(s)
                    s2[j], s2[j + 1] = s2[j + 1], s2[j]
                    s2 = tuple(s2)
                    v2 = _compose(v, gen)
                    if s2 in table:
                        if table[s2][0] != v2:
                            raise ActionError("generator images do not define a "
                                              "representation of the symmetric group")
                    else:
                        table[s2] = (v2, -sg)
                        nxt.append(s2)
            frontier = nxt
        return table

    def all_elements(self) -> list[tuple[tuple[int, ...], int]]:
        """Every (vertex permutation, sign) of the full group including g powers.

        The g factor carries sign +1: only the symmetric part is signed.
        """
        base = list(self.group().values())
        if self.g_perm is None:
            return base
        out = []
        g = tuple(range(self.n_vertices))
        for _ in range(self.p):
            for v, sg in base:
                out.append((_compose(g, v), sg))
            g = _compose(self.g_perm, g)
        return out

    # -- actions on simplexes -------------------------------------------------

    def is_simplicial(self) -> bool:
        simp = self.simplices()
        allset = {s for q in simp.values() for s in q}
        for v, _ in self.all_elements():
            for f in self.facets:
                img = tuple(sorted(v[x] for x in f))
                if img not in allset:
                    return False
        return True

    def is_good(self) -> bool:
        """Invariant simplexes are fixed vertex by vertex."""
        simp = self.simplices()
        for v, _ in self.all_elements():
            if all(v[i] == i for i in range(self.n_vertices)):
                continue
            for q, simlist in simp.items():
                for s in simlist:
                    img = tuple(sorted(v[x] for x in s))
                    if img == s and any(v[x] != x for x in s):
                        return False
        return True

    # -- constructions ---------------------------------------------------------

    def barycentric_subdivision(self) -> "GComplex":
        simp = self.simplices()
        order: list[tuple[int, ...]] = []
        for q in sorted(simp):
            order.extend(simp[q])
        index = {s: i for i, s in enumerate(order)}
        facets = []
        for f in self.facets:
            for perm in permutations(f):
                chain = []
                for q in range(len(f)):
                    chain.append(index[tuple(sorted(perm[: q + 1]))])
                facets.append(tuple(sorted(chain)))
        facets = tuple(sorted(set(facets)))

        def induce(v):
            return tuple(index[tuple(sorted(v[x] for x in s))] for s in order)

        gens = tuple(induce(v) for v in self.sigma_gens)
        gp = induce(self.g_perm) if self.g_perm is not None else None
        coords = None
        if self.coords is not None:
            coords = tuple(
                tuple(sum(col) / len(s) for col in zip(*(self.coords[x] for x in s)))
                for s in order
            )
        return GComplex(len(order), facets, self.k, gens, gp, self.p, coords)

    def fixed_subcomplex(self, perms: list[tuple[int, ...]]) -> "GComplex":
        """Subcomplex of simplexes all of whose vertices are fixed by every perm."""
        fixed = {v for v in range(self.n_vertices)
                 if all(p[v] == v for p in perms)}
        facets = []
        for f in self.facets:
            best = tuple(v for v in f if v in fixed)
            if best:
                facets.append(best)
        # keep only maximal ones
        facets = sorted(set(facets), key=len, reverse=True)
        keep: list[tuple[int, ...]] = []
        for f in facets:
            if not any(set(f) <= set(g) for g in keep):
                keep.append(f)
        return replace(self, facets=tuple(sorted(keep)), g_perm=None, p=None)

    def g_fixed_subcomplex(self) -> "GComplex":
        if self.g_perm is None:
            return replace(self, g_perm=None, p=None)
        return self.fixed_subcomplex([self.g_perm])

    def reindexed_fixed_subcomplex(self, fixing: tuple[int, ...] | None = None,
                                   residual: tuple[int, ...] | None = None) -> "GComplex":
        """Fixed subcomplex of `fixing` (default: the cyclic action), reindexed.

        Vertices fixed by `fixing` are renumbered 0..m-1; the symmetric
        generators restrict (they must commute with `fixing`).  `residual`,
        when given, is a commuting permutation whose restriction becomes the
        cyclic action of the subcomplex (its order is recomputed).
        """
        if fixing is None:
            fixing = self.g_perm
        if fixing is None:
            return replace(self, g_perm=None, p=None)
        keep = [v for v in range(self.n_vertices) if fixing[v] == v]
        new_of = {v: i for i, v in enumerate(keep)}
        sub = self.fixed_subcomplex([fixing])
        facets = tuple(tuple(new_of[v] for v in f) for f in sub.facets)

        def restrict(perm):
            return tuple(new_of[perm[v]] for v in keep)

        gens = tuple(restrict(s) for s in self.sigma_gens)
        g2 = order = None
        if residual is not None and keep:
            g2 = restrict(residual)
            order = _perm_order(g2)
            if order == 1:
                g2 = order = None
        coords = tuple(self.coords[v] for v in keep) if self.coords is not None else None
        return GComplex(len(keep), facets, self.k, gens, g2, order, coords)


def _is_prime_power(n: int) -> bool:
    if n < 2:
        return False
    for q in range(2, n + 1):
        if q * q > n:
            return n > 1  # n itself prime
        if n % q == 0:
            while n % q == 0:
                n //= q
            return n == 1
    return False


def smallest_prime_factor(n: int) -> int:
    q = 2
    while q * q <= n:
        if n % q == 0:
            return q
        q += 1
    return n


def validate_or_subdivide(X: GComplex, max_rounds: int = 2) -> GComplex:
    """Return a simplicially good complex, subdividing at most `max_rounds` times."""
    if not X.is_simplicial():
        raise ActionError("action does not map simplexes to simplexes")
    Y = X
    for _ in range(max_rounds + 1):
        if Y.is_good():
            return Y
        Y = Y.barycentric_subdivision()
    raise ActionError("action not good after repeated subdivision")


# -- JSON interchange ---------------------------------------------------------


def _frac(x) -> Fraction:
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, int):
        return Fraction(x)
    raise ActionError(f"coordinates must be exact (int or 'a/b' string), got {x!r}")


def from_json_dict(data: dict) -> GComplex:
    verts = data.get("vertices")
    coords = None
    if isinstance(verts, int):
        n = verts
    elif isinstance(verts, list):
        n = len(verts)
        if verts and isinstance(verts[0], list):
            coords = tuple(tuple(_frac(x) for x in v) for v in verts)
    else:
        raise ActionError("'vertices' must be a count or a list")
    facets = tuple(tuple(sorted(f)) for f in data["facets"])
    gens = tuple(tuple(g) for g in data.get("sigma_generators", []))
    g_perm = tuple(data["g_action"]) if "g_action" in data else None
    p = data.get("p")
    return GComplex(n, facets, len(gens) + 1, gens, g_perm, p, coords)


def load_json(path: str) -> GComplex:
    with open(path) as fh:
        return from_json_dict(json.load(fh))


def to_json_dict(X: GComplex) -> dict:
    out: dict = {
        "vertices": (
            [[str(c) for c in v] for v in X.coords] if X.coords is not None else X.n_vertices
        ),
        "facets": [list(f) for f in X.facets],
        "sigma_generators": [list(g) for g in X.sigma_gens],
    }
    if X.g_perm is not None:
        out["g_action"] = list(X.g_perm)
        out["p"] = X.p
    return out
