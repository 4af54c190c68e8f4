"""Pure-Python reduction kernel.

Hot loops for the basis engines: weak normal form (Mora's algorithm with
ecart control for local orders, classical division for global ones) and the
Buchberger/Mora completion loop.  Polynomials cross this boundary as plain
dicts mapping exponent tuples to Python ints, primitive (content 1) and
defined up to a positive rational factor -- leading ideals, memberships and
colengths are all invariant under that scaling.

`germlab._speedups` is a compiled twin of this module; keep the two in sync.
"""

from heapq import heappop, heappush
from math import gcd

BACKEND = "python"


def _key_global(e):
    return (sum(e), tuple(-x for x in reversed(e)))


def _key_local(e):
    return (-sum(e), tuple(-x for x in reversed(e)))


def lead_exp(terms, local):
    return max(terms, key=_key_local if local else _key_global)


def _divides(a, b):
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _normalized(terms):
    """Divide by integer content, make the max-key coefficient sign stable."""
    if not terms:
        return terms
    g = 0
    for c in terms.values():
        g = gcd(g, c if c >= 0 else -c)
        if g == 1:
            break
    if g > 1:
        terms = {e: c // g for e, c in terms.items()}
    return terms


def _sign_fix(terms, local):
    if not terms:
        return terms
    if terms[lead_exp(terms, local)] < 0:
        return {e: -c for e, c in terms.items()}
    return terms


def _truncate(terms, trunc):
    """Drop terms of total degree >= trunc (work modulo m^trunc)."""
    if not trunc:
        return terms
    return {e: c for e, c in terms.items() if sum(e) < trunc}


def _step(h, he, g, ge, trunc=0):
    """h := cg*h - ch*x^(he-ge)*g, then content-normalize."""
    cg = g[ge]
    ch = h[he]
    shift = tuple(a - b for a, b in zip(he, ge))
    out = {e: c * cg for e, c in h.items()}
    if any(shift):
        for e, c in g.items():
            e2 = tuple(a + b for a, b in zip(e, shift))
            s = out.get(e2, 0) - c * ch
            if s:
                out[e2] = s
            else:
                out.pop(e2, None)
    else:
        for e, c in g.items():
            s = out.get(e, 0) - c * ch
            if s:
                out[e] = s
            else:
                out.pop(e, None)
    if trunc:
        out = _truncate(out, trunc)
    return _normalized(out)


def _ecart(terms, le):
    m = 0
    for e in terms:
        d = sum(e)
        if d > m:
            m = d
    return m - sum(le)


def _nf_local(f, basis, trunc=0):
    """Mora weak normal form: result lead not divisible by any basis lead."""
    T = [(lead_exp(g, True), g) for g in basis if g]
    Tec = [_ecart(g, le) for le, g in T]
    h = _normalized(_truncate(dict(f), trunc))
    while h:
        he = lead_exp(h, True)
        best = -1
        best_ec = None
        for i, (ge, g) in enumerate(T):
            if _divides(ge, he):
                if best < 0 or Tec[i] < best_ec:
                    best = i
                    best_ec = Tec[i]
        if best < 0:
            return _sign_fix(h, True)
        hec = _ecart(h, he)
        if best_ec > hec:
            T.append((he, dict(h)))
            Tec.append(hec)
        h = _step(h, he, T[best][1], T[best][0], trunc)
    return h


def _nf_global(f, basis):
    """Full (head and tail) reduction by the basis."""
    T = [(lead_exp(g, False), g) for g in basis if g]
    out = {}
    work = _normalized(dict(f))
    while work:
        we = lead_exp(work, False)
        hit = None
        for ge, g in T:
            if _divides(ge, we):
                hit = (ge, g)
                break
        if hit is None:
            out[we] = work.pop(we)
            continue
        ge, g = hit
        cg = g[ge]
        cw = work[we]
        shift = tuple(a - b for a, b in zip(we, ge))
        nw = {e: c * cg for e, c in work.items()}
        for e, c in g.items():
            e2 = tuple(a + b for a, b in zip(e, shift))
            s = nw.get(e2, 0) - c * cw
            if s:
                nw[e2] = s
            else:
                nw.pop(e2, None)
        if out:
            for e in list(out):
                out[e] *= cg
        # joint content normalization keeps the pair consistent
        both = list(nw.values()) + list(out.values())
        gg = 0
        for c in both:
            gg = gcd(gg, c if c >= 0 else -c)
            if gg == 1:
                break
        if gg > 1:
            nw = {e: c // gg for e, c in nw.items()}
            out = {e: c // gg for e, c in out.items()}
        work = nw
    return _sign_fix(out, False)


def normal_form(f, basis, local, trunc=0):
    if not f:
        return {}
    if local:
        return _nf_local(f, basis, trunc)
    return _nf_global(f, basis)


def _spoly(gi, ei, gj, ej):
    lcm = tuple(max(a, b) for a, b in zip(ei, ej))
    si = tuple(a - b for a, b in zip(lcm, ei))
    sj = tuple(a - b for a, b in zip(lcm, ej))
    ci = gi[ei]
    cj = gj[ej]
    out = {}
    for e, c in gi.items():
        e2 = tuple(a + b for a, b in zip(e, si))
        out[e2] = c * cj
    for e, c in gj.items():
        e2 = tuple(a + b for a, b in zip(e, sj))
        s = out.get(e2, 0) - c * ci
        if s:
            out[e2] = s
        else:
            out.pop(e2, None)
    return _normalized(out)


def std_basis(gens, local, trunc=0):
    """Standard basis (local: Mora; global: Buchberger), minimalized.

    Returns primitive integer term dicts whose leading exponents generate
    the leading ideal.  Detecting a unit short-circuits to [{0:1}].  With
    trunc = D (local only) everything is computed modulo m^D: the result is
    a standard basis of I + m^D.
    """
    if trunc and not local:
        raise ValueError("truncation is a local-ring device")
    nvars = None
    G = []
    for g in gens:
        if g:
            nvars = len(next(iter(g)))
            h = _sign_fix(_normalized(_truncate(dict(g), trunc)), local)
            if h:
                G.append((lead_exp(h, local), h))
    if not G:
        return []
    zero = (0,) * nvars
    unit = [{zero: 1}]
    for ge, _ in G:
        if ge == zero:
            return unit
    G.sort(key=lambda t: (sum(t[0]), t[0]))
    pairs = []
    for i in range(len(G)):
        for j in range(i):
            lcm = tuple(max(a, b) for a, b in zip(G[i][0], G[j][0]))
            heappush(pairs, (sum(lcm), j, i))
    treated = set()
    while pairs:
        _, i, j = heappop(pairs)
        ei, ej = G[i][0], G[j][0]
        lcm = tuple(max(a, b) for a, b in zip(ei, ej))
        treated.add((i, j))
        if not local and lcm == tuple(a + b for a, b in zip(ei, ej)):
            continue  # product criterion (global orders)
        skip = False
        for k in range(len(G)):
            if k in (i, j):
                continue
            if _divides(G[k][0], lcm):
                a = (min(i, k), max(i, k))
                b = (min(j, k), max(j, k))
                if a in treated and b in treated:
                    skip = True
                    break
        if skip:
            continue
        s = _spoly(G[i][1], ei, G[j][1], ej)
        if trunc:
            s = _truncate(s, trunc)
        if not s:
            continue
        h = normal_form(s, [g for _, g in G], local, trunc)
        if not h:
            continue
        he = lead_exp(h, local)
        if he == zero:
            return unit
        G.append((he, h))
        n = len(G) - 1
        for k in range(n):
            lcm = tuple(max(a, b) for a, b in zip(G[k][0], he))
            heappush(pairs, (sum(lcm), k, n))
    # minimalize: drop entries whose lead is divisible by another surviving lead
    keep = []
    for idx, (ge, g) in enumerate(G):
        redundant = False
        for jdx, (he, _) in enumerate(G):
            if jdx == idx:
                continue
            if _divides(he, ge) and (he != ge or jdx < idx):
                redundant = True
                break
        if not redundant:
            keep.append(g)
    return keep
