"""Milnor and Tjurina numbers of isolated complete intersection germs.

Route (a): after linear elimination a single equation remains and mu is the
colength of its Jacobian ideal.  Route (b): the Le-Greuel chain
mu(g_1..g_m) + mu(g_1..g_{m-1}) = colength(<g_1..g_{m-1}> + maximal Jacobian
minors), recursing down to a hypersurface or to dimension zero, where mu is
the colength of the ideal minus one (reduced point count of a generic fiber).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .ideals import (INF, Ideal, colength, germ_is_empty, jacobian,
                     local_dimension, minors)
from .poly import Polynomial, PolyRing, eliminate_linear


class NonIcisError(ValueError):
    """Dimension differs from the expected one."""


class NonIsolatedError(ValueError):
    """A colength came out infinite: the singularity is not isolated."""


class EmptyGermError(ValueError):
    pass


@dataclass
class IcisReport:
    dim: int
    milnor: int
    tjurina: int | None
    is_smooth: bool
    is_A1: bool


def _reduce(gens: list[Polynomial]):
    elim = eliminate_linear(gens)
    live = [g for g in elim.gens if not g.is_zero()]
    return live, elim.ring


def _jacobian_colength(g: Polynomial) -> int:
    ring = g.ring
    parts = [g.deriv(v) for v in ring.vars]
    parts = [p for p in parts if not p.is_zero()]
    if not parts:
        raise NonIsolatedError("vanishing Jacobian")
    c = colength(Ideal.of(parts, local=True))
    if c == INF:
        raise NonIsolatedError("infinite Jacobian colength")
    return c


def _mu_chain(gens: list[Polynomial], ring: PolyRing, dim: int, rng: random.Random,
              depth: int = 0) -> int:
    m = len(gens)
    if m == 0:
        return 0
    if m == 1 and dim == ring.nvars - 1:
        return _jacobian_colength(gens[0])
    if dim == 0:
        c = colength(Ideal.of(gens, local=True))
        if c == INF:
            raise NonIsolatedError("expected dimension 0 but colength infinite")
        return c - 1
    if dim != ring.nvars - m:
        raise NonIcisError(f"{m} equations in {ring.nvars} variables cannot have dim {dim}")
    full_minors = minors(jacobian(gens, ring.vars), m)
    last_error: Exception | None = None
    for j in reversed(range(m)):
        rest = gens[:j] + gens[j + 1:]
        try:
            if rest:
                I_rest = Ideal.of(rest, local=True)
                if germ_is_empty(I_rest) or local_dimension(I_rest) != dim + 1:
                    raise NonIcisError("deleted tuple has wrong dimension")
                c = colength(I_rest.with_extra(full_minors))
            else:
                c = colength(Ideal.of(full_minors, local=True))
            if c == INF:
                raise NonIsolatedError("Le-Greuel colength infinite")
            mu_rest = _mu_chain(rest, ring, dim + 1, rng, depth + 1)
            return c - mu_rest
        except (NonIcisError, NonIsolatedError) as exc:
            last_error = exc
            continue
    if depth == 0:
        # retry after mixing the generator tuple by a random invertible matrix
        for _ in range(4):
            mixed = _random_mix(gens, ring, rng)
            try:
                return _mu_chain(mixed, ring, dim, rng, depth + 1)
            except (NonIcisError, NonIsolatedError) as exc:
                last_error = exc
    raise last_error if last_error else NonIsolatedError("Le-Greuel chain failed")


def _random_mix(gens: list[Polynomial], ring: PolyRing, rng: random.Random):
    m = len(gens)
    while True:
        rows = [[Fraction(rng.randint(-2, 2)) for _ in range(m)] for _ in range(m)]
        if _det(rows) != 0:
            break
    return [sum((gens[j] * rows[i][j] for j in range(m)), ring.zero()) for i in range(m)]


def _det(rows):
    n = len(rows)
    rows = [r[:] for r in rows]
    det = Fraction(1)
    for i in range(n):
        piv = next((r for r in range(i, n) if rows[r][i]), None)
        if piv is None:
            return Fraction(0)
        if piv != i:
            rows[i], rows[piv] = rows[piv], rows[i]
            det = -det
        det *= rows[i][i]
        for r in range(i + 1, n):
            f = rows[r][i] / rows[i][i]
            rows[r] = [a - f * b for a, b in zip(rows[r], rows[i])]
    return det


def milnor_icis(I: Ideal, expected_dim: int, route: str = "auto",
                rng: random.Random | None = None) -> IcisReport:
    """Invariants of the germ defined by I, checked against its expected dimension.

    route: "auto" eliminates linear variables first and goes through the
    hypersurface formula when possible; "chain" skips elimination and runs
    the Le-Greuel recursion on the generators as given.
    """
    if not I.local:
        raise ValueError("milnor_icis works on germs (local ideals)")
    if rng is None:
        rng = random.Random(0)
    if germ_is_empty(I):
        raise EmptyGermError("empty germ")
    if route == "chain":
        gens = [g for g in I.gens if not g.is_zero()]
        ring = I.ring
    else:
        gens, ring = _reduce(list(I.gens))
    if gens and any(g.constant_term() != 0 for g in gens):
        raise EmptyGermError("empty germ")  # unit surfaced by substitution
    if not gens:
        if ring.nvars != expected_dim:
            raise NonIcisError(f"smooth of dimension {ring.nvars}, expected {expected_dim}")
        return IcisReport(dim=expected_dim, milnor=0, tjurina=0, is_smooth=True, is_A1=False)
    if expected_dim == 0:
        # finite colength certifies dimension 0 without a full standard basis
        c = colength(Ideal.of(gens, local=True))
        if c == INF:
            raise NonIcisError("expected dimension 0 but the colength is infinite")
        return IcisReport(dim=0, milnor=c - 1, tjurina=None,
                          is_smooth=(c == 1), is_A1=False)
    dim = local_dimension(Ideal.of(gens, local=True))
    if dim != expected_dim:
        raise NonIcisError(f"dimension {dim}, expected {expected_dim}")
    tjurina = None
    if len(gens) == 1 and expected_dim > 0 and route != "chain":
        g = gens[0]
        mu = _jacobian_colength(g)
        tj = colength(Ideal.of([g] + [g.deriv(v) for v in ring.vars], local=True))
        tjurina = None if tj == INF else tj
    else:
        mu = _mu_chain(gens, ring, expected_dim, rng)
    return IcisReport(
        dim=dim,
        milnor=mu,
        tjurina=tjurina,
        is_smooth=(mu == 0),
        is_A1=(expected_dim > 0 and mu == 1),
    )
