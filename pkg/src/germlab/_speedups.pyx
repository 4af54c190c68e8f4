# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled reduction kernel: the Cython twin of germlab._purekernel.

Same data contract: polynomials are dicts mapping exponent tuples to Python
ints, primitive and sign-normalized up to positive scaling.  Keep the two
modules in lockstep; the test suite runs against whichever backend
GERMLAB_KERNEL selects.
"""

from heapq import heappop, heappush
from math import gcd

BACKEND = "c"


cdef inline tuple _key_global(tuple e):
    cdef Py_ssize_t i, n = len(e)
    cdef long total = 0
    rev = []
    for i in range(n):
        total += <long> e[i]
    for i in range(n - 1, -1, -1):
        rev.append(-(<long> e[i]))
    return (total, tuple(rev))


cdef inline tuple _key_local(tuple e):
    cdef Py_ssize_t i, n = len(e)
    cdef long total = 0
    rev = []
    for i in range(n):
        total += <long> e[i]
    for i in range(n - 1, -1, -1):
        rev.append(-(<long> e[i]))
    return (-total, tuple(rev))


def lead_exp(terms, local):
    cdef bint loc = local
    best = None
    best_key = None
    for e in terms:
        k = _key_local(<tuple> e) if loc else _key_global(<tuple> e)
        if best is None or k > best_key:
            best = e
            best_key = k
    return best


cdef inline bint _divides(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    for i in range(n):
        if <long> a[i] > <long> b[i]:
            return False
    return True


cdef dict _normalized(dict terms):
    if not terms:
        return terms
    cdef object g = 0
    for c in terms.values():
        g = gcd(g, c if c >= 0 else -c)
        if g == 1:
            break
    if g > 1:
        return {e: c // g for e, c in terms.items()}
    return terms


cdef dict _sign_fix(dict terms, bint local):
    if not terms:
        return terms
    if terms[lead_exp(terms, local)] < 0:
        return {e: -c for e, c in terms.items()}
    return terms


cdef dict _truncate(dict terms, long trunc):
    cdef Py_ssize_t i, n
    cdef long total
    if not trunc:
        return terms
    out = {}
    for e, c in terms.items():
        total = 0
        n = len(<tuple> e)
        for i in range(n):
            total += <long> (<tuple> e)[i]
        if total < trunc:
            out[e] = c
    return out


cdef tuple _shift_exp(tuple e, tuple shift):
    cdef Py_ssize_t i, n = len(e)
    out = []
    for i in range(n):
        out.append(<long> e[i] + <long> shift[i])
    return tuple(out)


cdef dict _step(dict h, tuple he, dict g, tuple ge, long trunc):
    cdef object cg = g[ge]
    cdef object ch = h[he]
    cdef Py_ssize_t i, n = len(he)
    cdef bint moved = False
    shift_list = []
    for i in range(n):
        shift_list.append(<long> he[i] - <long> ge[i])
        if shift_list[i]:
            moved = True
    cdef tuple shift = tuple(shift_list)
    cdef dict out = {}
    for e, c in h.items():
        out[e] = c * cg
    if moved:
        for e, c in g.items():
            e2 = _shift_exp(<tuple> e, shift)
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


cdef long _ecart(dict terms, tuple le):
    cdef long m = 0, d
    cdef Py_ssize_t i, n
    for e in terms:
        d = 0
        n = len(<tuple> e)
        for i in range(n):
            d += <long> (<tuple> e)[i]
        if d > m:
            m = d
    n = len(le)
    d = 0
    for i in range(n):
        d += <long> le[i]
    return m - d


cdef dict _nf_local(dict f, list basis, long trunc):
    cdef list T = []
    cdef list Tec = []
    cdef Py_ssize_t i, best
    cdef long best_ec, hec
    for g in basis:
        if g:
            le = lead_exp(g, True)
            T.append((le, g))
            Tec.append(_ecart(<dict> g, <tuple> le))
    cdef dict h = _normalized(_truncate(dict(f), trunc))
    while h:
        he = lead_exp(h, True)
        best = -1
        best_ec = 0
        for i in range(len(T)):
            ge = (<tuple> T[i])[0]
            if _divides(<tuple> ge, <tuple> he):
                if best < 0 or <long> Tec[i] < best_ec:
                    best = i
                    best_ec = <long> Tec[i]
        if best < 0:
            return _sign_fix(h, True)
        hec = _ecart(h, <tuple> he)
        if best_ec > hec:
            T.append((he, dict(h)))
            Tec.append(hec)
        h = _step(h, <tuple> he, <dict> (<tuple> T[best])[1], <tuple> (<tuple> T[best])[0], trunc)
    return h


cdef dict _nf_global(dict f, list basis):
    cdef list T = []
    for g in basis:
        if g:
            T.append((lead_exp(g, False), g))
    cdef dict out = {}
    cdef dict work = _normalized(dict(f))
    cdef dict nw
    while work:
        we = lead_exp(work, False)
        hit_g = None
        hit_e = None
        for ge, g in T:
            if _divides(<tuple> ge, <tuple> we):
                hit_g = g
                hit_e = ge
                break
        if hit_g is None:
            out[we] = work.pop(we)
            continue
        cg = (<dict> hit_g)[hit_e]
        cw = work[we]
        cdef_shift = []
        for i in range(len(<tuple> we)):
            cdef_shift.append(<long> (<tuple> we)[i] - <long> (<tuple> hit_e)[i])
        shift = tuple(cdef_shift)
        nw = {}
        for e, c in work.items():
            nw[e] = c * cg
        for e, c in (<dict> hit_g).items():
            e2 = _shift_exp(<tuple> e, shift)
            s = nw.get(e2, 0) - c * cw
            if s:
                nw[e2] = s
            else:
                nw.pop(e2, None)
        if out:
            for e in list(out):
                out[e] = out[e] * cg
        gg = 0
        for c in nw.values():
            gg = gcd(gg, c if c >= 0 else -c)
            if gg == 1:
                break
        if gg != 1:
            for c in out.values():
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
        return _nf_local(dict(f), list(basis), trunc)
    return _nf_global(dict(f), list(basis))


cdef dict _spoly(dict gi, tuple ei, dict gj, tuple ej):
    cdef Py_ssize_t i, n = len(ei)
    lcm_list = []
    si_list = []
    sj_list = []
    cdef long a, b, m
    for i in range(n):
        a = <long> ei[i]
        b = <long> ej[i]
        m = a if a > b else b
        lcm_list.append(m)
        si_list.append(m - a)
        sj_list.append(m - b)
    cdef tuple si = tuple(si_list)
    cdef tuple sj = tuple(sj_list)
    ci = gi[ei]
    cj = gj[ej]
    cdef dict out = {}
    for e, c in gi.items():
        out[_shift_exp(<tuple> e, si)] = c * cj
    for e, c in gj.items():
        e2 = _shift_exp(<tuple> e, sj)
        s = out.get(e2, 0) - c * ci
        if s:
            out[e2] = s
        else:
            out.pop(e2, None)
    return _normalized(out)


def std_basis(gens, local, trunc=0):
    """Standard basis (local: Mora; global: Buchberger), minimalized."""
    if trunc and not local:
        raise ValueError("truncation is a local-ring device")
    cdef bint loc = local
    cdef long tr = trunc
    cdef Py_ssize_t i, j, k, n, idx, jdx
    nvars = None
    G = []
    for g in gens:
        if g:
            nvars = len(next(iter(g)))
            h = _sign_fix(_normalized(_truncate(dict(g), tr)), loc)
            if h:
                G.append((lead_exp(h, loc), h))
    if not G:
        return []
    zero = (0,) * nvars
    unit = [{zero: 1}]
    for ge, _ in G:
        if ge == zero:
            return unit
    G.sort(key=_init_sort_key)
    pairs = []
    for i in range(len(G)):
        for j in range(i):
            lcm = _lcm_exp(<tuple> (<tuple> G[i])[0], <tuple> (<tuple> G[j])[0])
            heappush(pairs, (_deg(lcm), j, i))
    treated = set()
    while pairs:
        _, i, j = heappop(pairs)
        ei = (<tuple> G[i])[0]
        ej = (<tuple> G[j])[0]
        lcm = _lcm_exp(<tuple> ei, <tuple> ej)
        treated.add((i, j))
        if not loc and lcm == _sum_exp(<tuple> ei, <tuple> ej):
            continue  # product criterion (global orders)
        skip = False
        for k in range(len(G)):
            if k == i or k == j:
                continue
            if _divides(<tuple> (<tuple> G[k])[0], <tuple> lcm):
                a = (i, k) if i < k else (k, i)
                b = (j, k) if j < k else (k, j)
                if a in treated and b in treated:
                    skip = True
                    break
        if skip:
            continue
        s = _spoly(<dict> (<tuple> G[i])[1], <tuple> ei, <dict> (<tuple> G[j])[1], <tuple> ej)
        if tr:
            s = _truncate(s, tr)
        if not s:
            continue
        h = normal_form(s, [gg for _, gg in G], loc, tr)
        if not h:
            continue
        he = lead_exp(h, loc)
        if he == zero:
            return unit
        G.append((he, h))
        n = len(G) - 1
        for k in range(n):
            lcm = _lcm_exp(<tuple> (<tuple> G[k])[0], <tuple> he)
            heappush(pairs, (_deg(lcm), k, n))
    keep = []
    for idx in range(len(G)):
        ge = (<tuple> G[idx])[0]
        redundant = False
        for jdx in range(len(G)):
            if jdx == idx:
                continue
            he = (<tuple> G[jdx])[0]
            if _divides(<tuple> he, <tuple> ge) and (he != ge or jdx < idx):
                redundant = True
                break
        if not redundant:
            keep.append((<tuple> G[idx])[1])
    return keep


cdef long _deg(tuple e):
    cdef long total = 0
    cdef Py_ssize_t i, n = len(e)
    for i in range(n):
        total += <long> e[i]
    return total


cdef tuple _lcm_exp(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    out = []
    for i in range(n):
        out.append(a[i] if <long> a[i] > <long> b[i] else b[i])
    return tuple(out)


cdef tuple _sum_exp(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    out = []
    for i in range(n):
        out.append(<long> a[i] + <long> b[i])
    return tuple(out)


def _init_sort_key(t):
    e = t[0]
    return (_deg(e), e)
