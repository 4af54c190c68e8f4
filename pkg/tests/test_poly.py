import random
from fractions import Fraction

import pytest

from germlab.poly import (PolyError, PolyRing, divided_difference,
                          divided_differences, eliminate_linear, h_complete)


R3 = PolyRing(("x", "y", "z"), ("s",))


def test_ring_basics():
    x, y, z, s = (R3.sym(n) for n in "xyzs")
    p = x * y + z ** 2 - s * z
    assert p.degree_in("z") == 2
    assert p.involves("s")
    assert (p - p).is_zero()
    assert p.constant_term() == 0
    q = p.subs_params({"s": Fraction(1)})
    assert not q.uses_params()
    assert q.ring.params == ()


def test_pow_and_mul():
    x = R3.sym("x")
    y = R3.sym("y")
    assert (x + y) ** 2 == x * x + 2 * x * y + y * y
    assert (x + y) ** 0 == R3.const(1)
    with pytest.raises(PolyError):
        (x + y) ** -1


def random_poly(ring, rng, maxdeg=4, nterms=5):
    terms = {}
    for _ in range(rng.randint(1, nterms)):
        e = tuple(rng.randint(0, maxdeg) for _ in range(ring.nsyms))
        terms[e] = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
    from germlab.poly import Polynomial

    return Polynomial(ring, terms)


def test_divided_difference_identity_bulk():
    # (z1 - z2) * q == f(z1) - f(z2), exact expansion, 500 random polynomials
    rng = random.Random(20240817)
    src = PolyRing(("x", "y", "z"), ("s",))
    tgt = PolyRing(("x", "y", "z1", "z2"), ("s",))
    z1, z2 = tgt.sym("z1"), tgt.sym("z2")
    for _ in range(500):
        f = random_poly(src, rng)
        q = divided_differences(f, "z", ["z1", "z2"], tgt)[0]
        f1 = f.subs({"z": z1}, ring=tgt)
        f2 = f.subs({"z": z2}, ring=tgt)
        assert (z1 - z2) * q == f1 - f2


def test_divided_difference_examples():
    src = PolyRing(("x", "y", "z"))
    tgt = PolyRing(("x", "y", "z1", "z2"))
    z1, z2 = tgt.sym("z1"), tgt.sym("z2")
    x, y = tgt.sym("x"), tgt.sym("y")
    z = src.sym("z")

    q = divided_difference(z ** 2, "z", ("z1", "z2"), tgt)
    assert q == z1 + z2

    f = z * (z ** 2 + src.sym("x") ** 2 + src.sym("y") ** 2)
    q = divided_difference(f, "z", ("z1", "z2"), tgt)
    assert q == z1 ** 2 + z1 * z2 + z2 ** 2 + x ** 2 + y ** 2

    f = src.sym("x") * z + src.sym("y") * z ** 2
    q = divided_difference(f, "z", ("z1", "z2"), tgt)
    assert q == x + y * (z1 + z2)


def test_iterated_divided_differences():
    src = PolyRing(("z",))
    tgt = PolyRing(("z1", "z2", "z3"))
    z = src.sym("z")
    z1, z2, z3 = (tgt.sym(n) for n in ("z1", "z2", "z3"))

    out = divided_differences(z ** 2, "z", ["z1", "z2", "z3"], tgt)
    assert out == [z1 + z2, tgt.const(1)]

    out = divided_differences(z ** 3, "z", ["z1", "z2", "z3"], tgt)
    assert out[0] == z1 ** 2 + z1 * z2 + z2 ** 2
    assert out[1] == z1 + z2 + z3

    out = divided_differences(z, "z", ["z1", "z2"], tgt)
    assert out == [tgt.const(1)]


def test_divided_difference_vandermonde_oracle():
    # j-th divided difference of z^m equals h_{m-j}(z_1..z_{j+1}) where the
    # oracle expands the Vandermonde quotient by brute-force polynomial division.
    src = PolyRing(("z",))
    names = ["z1", "z2", "z3", "z4"]
    tgt = PolyRing(tuple(names))
    z = src.sym("z")
    for m in range(1, 7):
        outs = divided_differences(z ** m, "z", names, tgt)
        for j, q in enumerate(outs, start=1):
            assert q == h_complete(tgt, m - j, names[: j + 1])


def test_divided_difference_symmetry():
    rng = random.Random(7)
    src = PolyRing(("x", "z"))
    tgt = PolyRing(("x", "z1", "z2", "z3"))
    for _ in range(25):
        f = random_poly(src, rng)
        outs = divided_differences(f, "z", ["z1", "z2", "z3"], tgt)
        f2 = outs[1]
        for a, b in (("z1", "z2"), ("z2", "z3"), ("z1", "z3")):
            swapped = f2.subs({a: tgt.sym(b), b: tgt.sym(a)})
            assert swapped == f2


def test_eliminate_linear_basic():
    R = PolyRing(("x", "y", "z1", "z2"))
    x, y, z1, z2 = (R.sym(n) for n in R.vars)
    res = eliminate_linear([z1 + z2, z1 ** 2 + z1 * z2 + z2 ** 2 + x ** 2 + y ** 2])
    assert list(res.subs) == ["z2"]
    assert res.subs["z2"] == -z1
    assert len(res.gens) == 1
    r = res.ring
    assert res.gens[0] == r.sym("z1") ** 2 + r.sym("x") ** 2 + r.sym("y") ** 2


def test_eliminate_linear_no_move():
    R = PolyRing(("x", "y"))
    x, y = R.sym("x"), R.sym("y")
    res = eliminate_linear([x ** 2 + y ** 2])
    assert res.subs == {}
    assert res.gens == [x ** 2 + y ** 2]


def test_eliminate_linear_graph():
    R = PolyRing(("x", "y", "z1", "z2"))
    x, y, z1, z2 = (R.sym(n) for n in R.vars)
    gens = [x + y * (z1 + z2), z1 ** 2 + z1 * z2 + z2 ** 2 + y ** 2]
    res = eliminate_linear(gens)
    assert list(res.subs) == ["x"]
    assert res.subs["x"] == -(y * (z1 + z2))
    r = res.ring
    assert res.gens == [
        r.sym("z1") ** 2 + r.sym("z1") * r.sym("z2") + r.sym("z2") ** 2 + r.sym("y") ** 2
    ]


def test_eliminate_linear_protected():
    R = PolyRing(("x", "z1", "z2"))
    x, z1, z2 = (R.sym(n) for n in R.vars)
    res = eliminate_linear([z1 + z2, x ** 2 + z1], protected=("z1", "z2"))
    assert res.subs == {}
    assert len(res.gens) == 2


def test_eliminate_preserves_ideal_membership():
    # substitute-and-check both ways through a Groebner oracle
    from germlab.ideals import Ideal, reduces_to_zero

    R = PolyRing(("x", "y", "z1", "z2"))
    x, y, z1, z2 = (R.sym(n) for n in R.vars)
    gens = [z1 + z2, z1 ** 2 + z1 * z2 + z2 ** 2 + x ** 2 + y ** 2]
    res = eliminate_linear(gens)
    # original generators die in the output ideal + substitution relations
    lifted = [g.cast(R) for g in res.gens]
    lifted += [R.sym(v) - s.cast(R) for v, s in res.subs.items()]
    I = Ideal.of(lifted, local=False)
    for g in gens:
        assert reduces_to_zero(g, I)
    J = Ideal.of(gens + [R.sym(v) - s.cast(R) for v, s in res.subs.items()], local=False)
    for g in lifted:
        assert reduces_to_zero(g, J)


def test_ring_axioms_on_random_polynomials():
    rng = random.Random(99)
    for _ in range(60):
        f = random_poly(R3, rng)
        g = random_poly(R3, rng)
        h = random_poly(R3, rng)
        assert f + g == g + f
        assert f * g == g * f
        assert (f + g) * h == f * h + g * h
        assert (f * g) * h == f * (g * h)
        assert f + R3.zero() == f
        assert f * R3.const(1) == f
        assert (f - f).is_zero()


def test_subs_is_ring_homomorphism():
    rng = random.Random(100)
    x, y = R3.sym("x"), R3.sym("y")
    image = {"z": x * y - 1, "s": Fraction(2, 3)}
    for _ in range(30):
        f = random_poly(R3, rng)
        g = random_poly(R3, rng)
        assert (f + g).subs(image) == f.subs(image) + g.subs(image)
        assert (f * g).subs(image) == f.subs(image) * g.subs(image)


def test_parse_roundtrip_smoke():
    from germlab.parse import parse_polynomial, to_string

    p = parse_polynomial("z^3 + y^2*z - s*z", R3)
    assert len(p.terms) == 3
    again = parse_polynomial(to_string(p), R3)
    assert again == p
    assert parse_polynomial("0", R3).is_zero()
    q = parse_polynomial("(z - y)*(z + y)", PolyRing(("y", "z")))
    r = PolyRing(("y", "z"))
    assert q == r.sym("z") ** 2 - r.sym("y") ** 2
