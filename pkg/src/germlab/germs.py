"""Corank-one map germs and their multiple point spaces.

A germ (C^n,0) -> (C^p,0), n < p, in prenormal form (x, g_1, ..., g_{p-n+1})
with dg_i/dz(0) = 0.  The k-th multiple point space lives in the variables
(x_1..x_{n-1}, z_1..z_k); its ideal is generated by the iterated divided
differences of every g_i plus, for a permutation of cycle type (r_1..r_m),
the differences z_a - z_b gluing consecutive entries of each cycle block.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .ideals import INF, Ideal, colength, germ_is_empty, local_dimension
from .poly import Polynomial, PolyRing, divided_differences, eliminate_linear


class GermError(ValueError):
    pass


@dataclass(frozen=True)
class GermCorank1:
    """Monogerm (x, g_1..g_{p-n+1}) with designated corank variable z."""

    n: int
    p: int
    ring: PolyRing  # vars = (x_1..x_{n-1}, z); params allowed
    components: tuple[Polynomial, ...]  # the nonlinear components g_i
    name: str = ""

    def __post_init__(self):
        if not self.n < self.p:
            raise GermError("need n < p")
        if len(self.ring.vars) != self.n:
            raise GermError(f"expected {self.n} variables, got {self.ring.vars}")
        if len(self.components) != self.p - self.n + 1:
            raise GermError(
                f"expected {self.p - self.n + 1} nonlinear components, got {len(self.components)}"
            )
        for g in self.components:
            if g.ring != self.ring:
                raise GermError("component in a different ring")
        zero = {v: Fraction(0) for v in self.ring.syms}
        for g in self.components:
            g0 = g.subs(zero)
            if not g0.is_zero():
                raise GermError("component does not vanish at the origin (parameters at 0)")
        # a nonzero dg/dz(0) is allowed: the germ is then immersive (corank 0)
        # and every multiple point space comes out empty.

    def is_immersive(self) -> bool:
        zero = {v: Fraction(0) for v in self.ring.syms}
        return any(not g.deriv(self.zvar).subs(zero).is_zero() for g in self.components)

    @property
    def xvars(self) -> tuple[str, ...]:
        return self.ring.vars[:-1]

    @property
    def zvar(self) -> str:
        return self.ring.vars[-1]

    def at_params(self, assignment) -> "GermCorank1":
        """Substitute every parameter by a rational; the result is parameter-free."""
        if not self.ring.params:
            return self
        comps = tuple(g.subs_params(assignment) for g in self.components)
        ring = comps[0].ring
        return GermCorank1(self.n, self.p, ring, comps, self.name)


# -- partitions of k -------------------------------------------------------


@lru_cache(maxsize=None)
def partitions(k: int) -> tuple[tuple[int, ...], ...]:
    """Weakly decreasing partitions of k; identity partition (1,..,1) first."""
    out: list[tuple[int, ...]] = []

    def rec(rest, maxpart, prefix):
        if rest == 0:
            out.append(prefix)
            return
        for r in range(min(rest, maxpart), 0, -1):
            rec(rest - r, r, prefix + (r,))

    rec(k, k, ())
    return tuple(sorted(out, key=lambda q: (len(q), q), reverse=True))


def sigma_sharp(partition: tuple[int, ...]) -> int:
    return len(partition)


def sign_of(partition: tuple[int, ...]) -> int:
    k = sum(partition)
    return -1 if (k - len(partition)) % 2 else 1


def class_size(partition: tuple[int, ...]) -> int:
    """Number of permutations in Sigma_k with this cycle type."""
    k = sum(partition)
    denom = 1
    mult: dict[int, int] = {}
    for r in partition:
        denom *= r
        mult[r] = mult.get(r, 0) + 1
    for m in mult.values():
        denom *= factorial(m)
    return factorial(k) // denom


def expected_dims(n: int, p: int, k: int, partition: tuple[int, ...]):
    """(d_k, d_k^sigma, sigma^#) for the cycle type `partition` of k."""
    if sum(partition) != k:
        raise GermError(f"{partition} is not a partition of {k}")
    sharp = len(partition)
    d_k = p - k * (p - n)
    return d_k, d_k - k + sharp, sharp


# -- D^k construction ------------------------------------------------------


@dataclass(frozen=True)
class MultiplePointSpace:
    k: int
    partition: tuple[int, ...]
    ideal: Ideal
    expected_dim: int
    d_k: int
    sigma_sharp: int


def dk_ring(germ: GermCorank1, k: int) -> PolyRing:
    zs = tuple(f"{germ.zvar}{i}" for i in range(1, k + 1))
    clash = set(zs) & set(germ.ring.syms)
    if clash:
        raise GermError(f"variable names {sorted(clash)} collide with z-copies")
    return PolyRing(germ.xvars + zs, germ.ring.params)


def cycle_equations(ring: PolyRing, germ: GermCorank1, k: int,
                    partition: tuple[int, ...]) -> list[Polynomial]:
    """z_a - z_b for consecutive indices inside each cycle block.

    The canonical representative permutation places its cycles on consecutive
    index blocks in decreasing length order, so the fixed locus is cut out by
    sum(r_i - 1) linear differences.
    """
    zs = [f"{germ.zvar}{i}" for i in range(1, k + 1)]
    eqs = []
    pos = 0
    for r in partition:
        for t in range(r - 1):
            eqs.append(ring.sym(zs[pos + t]) - ring.sym(zs[pos + t + 1]))
        pos += r
    return eqs


def build_Dk(germ: GermCorank1, k: int, partition: tuple[int, ...] | None = None,
             local: bool = True) -> MultiplePointSpace:
    """Ideal presentation of D^k(f)^sigma for the canonical sigma of the partition."""
    if k < 2:
        raise GermError("multiple point spaces start at k = 2")
    if partition is None:
        partition = (1,) * k
    d_k, d_sigma, sharp = expected_dims(germ.n, germ.p, k, partition)
    ring = dk_ring(germ, k)
    fresh = [f"{germ.zvar}{i}" for i in range(1, k + 1)]
    gens: list[Polynomial] = []
    for g in germ.components:
        gens.extend(divided_differences(g, germ.zvar, fresh, ring))
    gens.extend(cycle_equations(ring, germ, k, partition))
    ideal = Ideal(ring, tuple(gens), local=local)
    return MultiplePointSpace(k, tuple(partition), ideal, d_sigma, d_k, sharp)


# -- Marar-Mond finiteness criterion ---------------------------------------

EMPTY = "EMPTY"
ICIS = "ICIS"
ORIGIN = "ORIGIN"
VIOLATION = "VIOLATION"


@dataclass
class SpaceStatus:
    k: int
    partition: tuple[int, ...]
    sigma_sharp: int
    expected_dim: int
    kind: str
    dim: int | None = None
    reason: str = ""


@dataclass
class MararMondReport:
    statuses: list[SpaceStatus]
    finite: bool
    first_empty_k: int | None

    def violations(self) -> list[SpaceStatus]:
        return [s for s in self.statuses if s.kind == VIOLATION]


def _isolated_after_reduction(ideal: Ideal, expected_dim: int) -> tuple[str, int | None, str]:
    """Classify one D^k(f)^sigma germ: EMPTY / ICIS / ORIGIN / VIOLATION."""
    from .ideals import singular_locus_ideal

    if germ_is_empty(ideal):
        return EMPTY, None, ""
    elim = eliminate_linear(list(ideal.gens))
    gens = [g for g in elim.gens if not g.is_zero()]
    ring = elim.ring
    if not gens:
        dim = ring.nvars
        if expected_dim < 0:
            return (ORIGIN, 0, "") if dim == 0 else (VIOLATION, dim, "positive-dimensional")
        if dim == expected_dim:
            return ICIS, dim, "smooth"
        return VIOLATION, dim, f"smooth of dimension {dim}"
    J = Ideal.of(gens, local=True)
    if germ_is_empty(J):
        return EMPTY, None, ""
    if expected_dim <= 0:
        # finite colength certifies dimension 0 without a full basis
        c = colength(J)
        if c == INF:
            dim = local_dimension(J)
            want = "at most the origin" if expected_dim < 0 else "dimension 0"
            return VIOLATION, dim, f"dimension {dim}, should be {want}"
        return (ORIGIN if expected_dim < 0 else ICIS), 0, ""
    dim = local_dimension(J)
    if dim != expected_dim:
        return VIOLATION, dim, f"dimension {dim} instead of {expected_dim}"
    if colength(singular_locus_ideal(J)) == INF:
        return VIOLATION, dim, "non-isolated singular locus"
    return ICIS, dim, ""


def marar_mond_check(germ: GermCorank1, max_k: int | None = None) -> MararMondReport:
    """Status table over k and partitions; finite iff no violation.

    Iterates k = 2, 3, ... until the first empty D^k (emptiness is monotone
    in k); `max_k` caps the sweep.
    """
    if germ.ring.params:
        raise GermError("substitute parameters before analysis")
    statuses: list[SpaceStatus] = []
    finite = True
    first_empty = None
    k = 2
    cap = max_k if max_k is not None else 12
    while k <= cap:
        full = build_Dk(germ, k)
        if germ_is_empty(full.ideal):
            statuses.append(SpaceStatus(k, full.partition, full.sigma_sharp,
                                        full.expected_dim, EMPTY))
            first_empty = k
            break
        for part in partitions(k):
            space = build_Dk(germ, k, part)
            kind, dim, reason = _isolated_after_reduction(space.ideal, space.expected_dim)
            statuses.append(SpaceStatus(k, part, space.sigma_sharp,
                                        space.expected_dim, kind, dim, reason))
            if kind == VIOLATION:
                finite = False
        k += 1
    else:
        if max_k is None:
            raise GermError("no empty multiple point space up to the safety cap; "
                            "is the germ finite?")
    return MararMondReport(statuses, finite, first_empty)
