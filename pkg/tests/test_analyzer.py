import random
from fractions import Fraction

import pytest

from germlab.analyzer import (CANDIDATE, CONFIRMED, FAILS, REFUTED,
                              NotAFiniteError, WitnessPreconditionError,
                              analyze, witness_check, zero_dim_stable_counts)
from germlab.germs import GermCorank1
from germlab.parse import parse_polynomial
from germlab.poly import PolyRing


def make(exprs, params=(), name="", varnames=("x", "y", "z"), n=3, p=4):
    ring = PolyRing(tuple(varnames), tuple(params))
    comps = tuple(parse_polynomial(e, ring) for e in exprs)
    return GermCorank1(n, p, ring, comps, name)


Q2 = make(["x*z + y*z^2", "z^3 + y^2*z"], name="Q2")
Q2W = make(["x*z + y*z^2", "z^3 + y^2*z - s*z"], params=("s",), name="Q2s")


def test_analyze_q2_full_report():
    rep = analyze(Q2)
    assert rep.verdict == CANDIDATE
    assert rep.mu_of(2) == 1 and rep.mu_of(3) == 1
    assert rep.mu_I == 2
    assert rep.image_betti == {3: 2}
    assert rep.zero_dim_counts == [(3, (2, 1), 2)]
    r3 = rep.row(3)
    by_part = {c.partition: c for c in r3.classes}
    assert by_part[(2, 1)].count == 2
    assert by_part[(3,)].status == "beta0" and by_part[(3,)].beta0 == 1
    assert rep.row(4).empty


def test_analyze_rules_ledger():
    rep = analyze(make(["z^2", "z*(z^2 + x^2 + y^3)"], name="A2"))
    assert rep.verdict == FAILS
    assert any(v.rule == "R1" and v.k == 2 and v.observed == 2 for v in rep.violations)


def test_analyze_rejects_non_finite():
    with pytest.raises(NotAFiniteError):
        analyze(make(["z^2", "z^3"]))


def test_analyze_verdict_coordinate_invariance():
    rng = random.Random(3)
    base = Q2
    rep0 = analyze(base)
    R = base.ring
    for _ in range(3):
        # invertible linear change of the x, y coordinates and unit rescale of z
        while True:
            a, b, c, d = (Fraction(rng.randint(-2, 2)) for _ in range(4))
            if a * d - b * c != 0:
                break
        u = Fraction(rng.choice((1, 2, -1, 3)))
        imgs = {"x": R.sym("x") * a + R.sym("y") * b,
                "y": R.sym("x") * c + R.sym("y") * d,
                "z": R.sym("z") * u}
        moved = GermCorank1(3, 4, R, tuple(g.subs(imgs) for g in base.components), "Q2'")
        rep = analyze(moved)
        assert rep.verdict == rep0.verdict
        assert rep.mu_of(2) == rep0.mu_of(2) and rep.mu_of(3) == rep0.mu_of(3)
        assert rep.mu_I == rep0.mu_I


def test_witness_q2_confirmed_with_paper_values():
    w = witness_check(Q2, Q2W, {"s": Fraction(1)})
    assert w.verdict == CONFIRMED
    k2 = next(r for r in w.rows if r.k == 2)
    assert k2.abeta_complex == 1 and k2.abeta_real == 1
    kinds = {c.partition: c.real.kind for c in k2.classes}
    assert kinds[(1, 1)] == "SPHERE" and kinds[(2,)] == "SPHERE"
    chis = {c.partition: (c.chi_complex, c.chi_real) for c in k2.classes}
    assert chis[(1, 1)] == (2, 2) and chis[(2,)] == (0, 0)
    k3 = next(r for r in w.rows if r.k == 3)
    assert k3.abeta_complex == 1 and k3.abeta_real == 1
    reals = {c.partition: c.real for c in k3.classes}
    assert reals[(1, 1, 1)].kind == "SPHERE" and reals[(1, 1, 1)].dim == 1
    assert reals[(2, 1)].kind == "POINTS" and reals[(2, 1)].count == 2
    assert reals[(3,)].kind == "EMPTY"
    chis = {c.partition: c.chi_real for c in k3.classes}
    assert (chis[(1, 1, 1)], chis[(2, 1)], chis[(3,)]) == (0, 2, 0)


def test_witness_q2_refuted_wrong_sign():
    w = witness_check(Q2, Q2W, {"s": Fraction(-1)})
    assert w.verdict == REFUTED
    k2 = next(r for r in w.rows if r.k == 2)
    assert k2.abeta_real == 0 and k2.abeta_complex == 1
    assert k2.classes[0].real.kind == "EMPTY"


def test_witness_a1_confirmed():
    a1 = make(["z^2", "z^3 + x^2*z + y^2*z"], name="A1")
    a1w = make(["z^2", "z^3 + x^2*z + y^2*z - s*z"], params=("s",), name="A1s")
    assert witness_check(a1, a1w, {"s": Fraction(1)}).verdict == CONFIRMED


def test_witness_p1_good_and_bad_perturbations():
    p1 = make(["y*z + z^4", "x*z + z^3"], name="P1")
    good = make(["y*z + z^4 - s*z^2", "x*z + z^3"], params=("s",), name="P1s")
    assert witness_check(p1, good, {"s": Fraction(1)}).verdict == CONFIRMED
    # a linear-in-z shift does not smooth the triple point curve: not stable
    bad = make(["y*z + z^4 - s*z", "x*z + z^3"], params=("s",), name="P1bad")
    assert witness_check(p1, bad, {"s": Fraction(1)}).verdict == REFUTED


def test_witness_inconclusive_indefinite_quadric():
    # complexly this is an A1 double point germ, but the chosen real structure
    # perturbs to a hyperboloid: not a decidable shape, so no verdict is forced
    g = make(["z^2", "z^3 + x^2*z - y^2*z"], name="A1ind")
    w = make(["z^2", "z^3 + x^2*z - y^2*z - s*z"], params=("s",), name="A1inds")
    rep = witness_check(g, w, {"s": Fraction(1)})
    assert rep.verdict == "INCONCLUSIVE"
    k2 = next(r for r in rep.rows if r.k == 2)
    assert k2.classes[0].real.kind == "INCONCLUSIVE"
    assert k2.classes[0].real.signature == (2, 1, 0)


def test_witness_preconditions():
    other = make(["x*z + y*z^2", "z^3 + y^3*z - s*z"], params=("s",), name="Q3s")
    with pytest.raises(WitnessPreconditionError):
        witness_check(Q2, other, {"s": Fraction(1)})  # reduces to Q3, not Q2
    a2 = make(["z^2", "z*(z^2 + x^2 + y^3)"], name="A2")
    a2w = make(["z^2", "z*(z^2 + x^2 + y^3) - s*z"], params=("s",), name="A2s")
    with pytest.raises(WitnessPreconditionError):
        witness_check(a2, a2w, {"s": Fraction(1)})  # analyze(A2) FAILS
    with pytest.raises(WitnessPreconditionError):
        witness_check(Q2, Q2W, {})  # unassigned parameter


def test_zero_dim_counts_cross_cap_analog():
    # (x, z^2, z^3 + x^2 z) for source dimension 2: the transposition space of
    # D^2 has expected dimension 0 and length 2
    g = make(["z^2", "z^3 + x^2*z"], varnames=("x", "z"), n=2, p=3, name="S1")
    counts = zero_dim_stable_counts(g)
    assert (2, (2,), 2) in counts


def test_plane_curve_cusp_node_perturbation():
    # (z^2, z^3): the perturbation (z^2, z^3 - s z) realizes one real node
    cusp = make(["z^2", "z^3"], varnames=("z",), n=1, p=2, name="cusp")
    rep = analyze(cusp)
    assert rep.verdict == CANDIDATE
    assert rep.mu_I == 1 and rep.image_betti == {1: 1}
    pert = make(["z^2", "z^3 - s*z"], params=("s",), varnames=("z",), n=1, p=2)
    w = witness_check(cusp, pert, {"s": Fraction(1)})
    assert w.verdict == CONFIRMED
    k2 = next(r for r in w.rows if r.k == 2)
    assert k2.classes[0].real.kind == "POINTS" and k2.classes[0].real.count == 2
    assert witness_check(cusp, pert, {"s": Fraction(-1)}).verdict == REFUTED


def test_mu_alt_and_image_betti_helpers():
    from germlab.analyzer import image_betti, mu_alt

    assert mu_alt(Q2, 2) == 1 and mu_alt(Q2, 3) == 1 and mu_alt(Q2, 4) == 0
    assert image_betti(Q2) == {3: 2}


def test_mu_alt_examples_from_tables():
    # A_k: muAlt(D^2) = (k + k)/2 = k; B_2: (3 + 1)/2 = 2
    for k in (1, 2, 3):
        rep = analyze(make(["z^2", f"z*(z^2 + x^2 + y^{k + 1})"]))
        assert rep.row(2).mu_alt == k
    rep = analyze(make(["z^2", "z*(x^2 + y^2 + z^4)"]))
    assert rep.row(2).mu_alt == 2
