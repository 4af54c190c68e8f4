"""Smith-theory inequality verifiers and the special subcomplexes.

Floyd: over F_p, the Betti tail sums of a complex dominate those of the
fixed-point set of a cyclic p-action.  The equivariant version replaces
Betti numbers by alternating Betti numbers when a commuting symmetric action
is present.  Both are theorems; a failed ledger line is a bug detector, not
an expected outcome.

The special complexes C^{Alt,rho} for rho = (1-g)^i underlie the proof: for
i strictly between 0 and p there is a degreewise rank-exact sequence

    0 -> C^{Alt,rho-bar}(X) (+) C^Alt(X^G) -> C^Alt(X) -> C^{Alt,rho}(X) -> 0

with rho-bar = (1-g)^{p-i}.  The endpoints i = 0 and i = p are computed
literally (rho = 1 or rho = 0) and additivity is reported as observed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .homology import alternating_chain_complex, alternating_homology, homology
from .linalg import column_space_basis_mod, mat_mul_mod, rank_mod
from .simplicial import ActionError, GComplex, smallest_prime_factor


@dataclass
class TailLedger:
    """Per-N comparison of tail sums: lhs_i >= rhs_i."""

    label: str
    lhs: list[int]
    rhs: list[int]

    def rows(self):
        out = []
        top = max(len(self.lhs), len(self.rhs))
        for N in range(top + 1):
            a = sum(self.lhs[N:])
            b = sum(self.rhs[N:])
            out.append((N, a, b, a >= b))
        return out

    @property
    def holds(self) -> bool:
        return all(ok for *_, ok in self.rows())


def verify_floyd(X: GComplex, N: int | None = None) -> tuple[bool, TailLedger]:
    """Floyd inequality over F_p for the cyclic action of X; checks all N."""
    if X.g_perm is None:
        raise ActionError("no cyclic action on this complex")
    p = X.p
    if smallest_prime_factor(p) != p:
        raise ActionError("Floyd's inequality needs a prime-order action")
    lhs = homology(X, f"F{p}").betti
    rhs = homology(X.g_fixed_subcomplex(), f"F{p}").betti
    ledger = TailLedger(f"beta tails over F{p}", lhs, rhs)
    ok = ledger.holds if N is None else ledger.rows()[min(N, len(ledger.rows()) - 1)][3]
    return ok, ledger


def verify_equivariant_smith(X: GComplex, N: int | None = None) -> tuple[bool, list[TailLedger]]:
    """Equivariant Smith inequality; prime powers reduce along the subgroup chain.

    For |G| = p^e the tails chain through X >= X^{G'} >= ... >= X^G where G'
    is the order-p subgroup, each step a prime-order comparison.
    """
    if X.g_perm is None:
        raise ActionError("no cyclic action on this complex")
    ledgers = []
    Y = X
    while Y.g_perm is not None:
        order = Y.p
        p = smallest_prime_factor(order)
        if order == p:
            h = Y.g_perm
            Z = Y
        else:
            # subgroup of order p generated by g^(order/p)
            h = Y.g_perm
            for _ in range(order // p - 1):
                h = tuple(Y.g_perm[x] for x in h)
            Z = GComplex(Y.n_vertices, Y.facets, Y.k, Y.sigma_gens, h, p, Y.coords)
        lhs = alternating_homology(Z, fields=(f"F{p}",)).field_ranks[f"F{p}"]
        fixed = Y.reindexed_fixed_subcomplex(fixing=h, residual=Y.g_perm if order != p else None)
        rhs = alternating_homology(fixed, fields=(f"F{p}",)).field_ranks[f"F{p}"]
        ledgers.append(TailLedger(f"Abeta tails over F{p}", lhs, rhs))
        if order == p:
            break
        Y = fixed  # carries the residual action of order p^{e-1}
    ok_all = all(l.holds for l in ledgers)
    if N is not None:
        def tail_at(l, n):
            rows = l.rows()
            return rows[min(n, len(rows) - 1)][3]
        ok_all = all(tail_at(l, N) for l in ledgers)
    return ok_all, ledgers


# -- special complexes ---------------------------------------------------------


@dataclass
class SpecialRanksReport:
    p: int
    i: int
    degrees: list[int]
    dim_alt: list[int]          # dim C^Alt_q(X; F_p)
    dim_rho: list[int]          # a-side chain dims
    dim_rho_bar: list[int]
    dim_fixed: list[int]        # dim C^Alt_q(X^G; F_p)
    additivity: list[bool]      # mid == left + right per degree
    ah: list[int]               # AH_q(X; F_p)
    ah_fixed: list[int]
    a: list[int]                # dim AH^rho_q
    a_bar: list[int]
    les_bounds: list[tuple[int, bool, bool]]  # per degree: the two LES inequalities

    @property
    def ses_exact(self) -> bool:
        return all(self.additivity)


def _g_matrix_on_alt(X: GComplex, alt, q: int, p: int) -> list[list[int]]:
    """Matrix of the cyclic generator acting on the alternating basis mod p."""
    from .homology import _sorted_with_sign

    reps = alt.reps.get(q, [])
    gens = alt.gens.get(q, [])
    rep_index = {s: i for i, s in enumerate(reps)}
    g = X.g_perm
    M = [[0] * len(gens) for _ in range(len(gens))]
    for j, chain in enumerate(gens):
        # image of the generator under g, read off at representatives
        for s, c in chain.items():
            img, osign = _sorted_with_sign([g[x] for x in s])
            i = rep_index.get(img)
            if i is not None:
                M[i][j] = (M[i][j] + c * osign) % p
    return M


def smith_special_ranks(X: GComplex, i: int) -> SpecialRanksReport:
    """Rank bookkeeping of C^{Alt,rho} for rho = (1-g)^i, i in 0..p."""
    if X.g_perm is None:
        raise ActionError("no cyclic action on this complex")
    p = X.p
    if smallest_prime_factor(p) != p:
        raise ActionError("special complexes need a prime-order action")
    if not 0 <= i <= p:
        raise ActionError(f"i must lie in 0..{p}")
    if not X.is_good():
        raise ActionError("action is not simplicially good; subdivide first")
    alt = alternating_chain_complex(X)
    fixed = X.g_fixed_subcomplex()
    alt_fixed = alternating_chain_complex(fixed)
    top = max(alt.reps, default=-1)
    degrees = list(range(top + 1))

    def eta_power_matrix(q: int, power: int) -> list[list[int]]:
        n = len(alt.reps.get(q, []))
        G = _g_matrix_on_alt(X, alt, q, p)
        E = [[(1 if a == b else 0) - G[a][b] for b in range(n)] for a in range(n)]
        E = [[x % p for x in row] for row in E]
        M = [[1 if a == b else 0 for b in range(n)] for a in range(n)]
        for _ in range(power):
            M = mat_mul_mod(M, E, p) if n else []
        return M

    dim_alt, dim_rho, dim_rho_bar, dim_fixed, additivity = [], [], [], [], []
    rho_bases: dict[int, list[list[int]]] = {}
    rho_bar_bases: dict[int, list[list[int]]] = {}
    for q in degrees:
        n = len(alt.reps.get(q, []))
        Mi = eta_power_matrix(q, i)
        Mbar = eta_power_matrix(q, p - i)
        cols_i = column_space_basis_mod(Mi, p) if n else []
        cols_bar = column_space_basis_mod(Mbar, p) if n else []
        rho_bases[q] = [[Mi[r][c] for c in cols_i] for r in range(n)]
        rho_bar_bases[q] = [[Mbar[r][c] for c in cols_bar] for r in range(n)]
        nf = len(alt_fixed.reps.get(q, []))
        dim_alt.append(n)
        dim_rho.append(len(cols_i))
        dim_rho_bar.append(len(cols_bar))
        dim_fixed.append(nf)
        additivity.append(n == len(cols_i) + len(cols_bar) + nf)

    def image_complex_homology(bases: dict[int, list[list[int]]]) -> list[int]:
        out = []
        for q in degrees:
            B = bases.get(q, [])
            nb = len(B[0]) if B else 0
            dq = alt.boundaries.get(q, [])
            dq1 = alt.boundaries.get(q + 1, [])
            r_dn = rank_mod(mat_mul_mod(dq, B, p), p) if (dq and nb) else 0
            B1 = bases.get(q + 1, [])
            r_up = rank_mod(mat_mul_mod(dq1, B1, p), p) if (dq1 and B1 and B1[0]) else 0
            out.append(nb - r_dn - r_up)
        return out

    a = image_complex_homology(rho_bases)
    a_bar = image_complex_homology(rho_bar_bases)
    ah = alternating_homology(X, fields=(f"F{p}",)).field_ranks[f"F{p}"]
    ah_fixed_full = alternating_homology(fixed, fields=(f"F{p}",)).field_ranks[f"F{p}"]
    ah = ah + [0] * (len(degrees) - len(ah))
    ah_fixed = ah_fixed_full + [0] * (len(degrees) - len(ah_fixed_full))
    ah_fixed = ah_fixed[: len(degrees)]
    les_bounds = []
    for q in degrees:
        a_next = a[q + 1] if q + 1 < len(a) else 0
        abar_next = a_bar[q + 1] if q + 1 < len(a_bar) else 0
        b1 = ah_fixed[q] + a_bar[q] <= a_next + ah[q]
        b2 = ah_fixed[q] + a[q] <= abar_next + ah[q]
        les_bounds.append((q, b1, b2))
    return SpecialRanksReport(p, i, degrees, dim_alt, dim_rho, dim_rho_bar,
                              dim_fixed, additivity, ah, ah_fixed, a, a_bar,
                              les_bounds)
