import random
import threading

import pytest
import sympy

from forcealg import (
    QQ,
    UNIT,
    Ideal,
    PolyRing,
    RingMismatchError,
    codimension,
    content_wrt_block,
    dimension,
    elimination,
    equal_up_to_radical,
    gcd,
    ideal_quotient,
    in_square_ideal,
    intersection,
    membership,
    radical_membership,
)
from forcealg.casebook import enlightening_fixture

from conftest import random_poly, to_sympy


@pytest.fixture
def B():
    return PolyRing(QQ, ("x", "y", "T1", "T2"), block_split=2)


# -- membership ------------------------------------------------------------------------


def test_membership_examples(Rxy, B):
    assert membership("y", Ideal(Rxy, ["x", "y"]))
    assert not membership("x", Ideal(Rxy, ["y"]))
    assert membership(B.parse("x^2*T1 + y^2*T2 + x*y"), Ideal(B, ["x", "y"]))


def test_membership_ring_mismatch(Rxy, B):
    with pytest.raises(RingMismatchError):
        membership(B.gen("x"), Ideal(Rxy, ["x"]))


def test_in_square_ideal(Rxy):
    assert in_square_ideal(Rxy.zero())
    assert in_square_ideal(Rxy.constant(3))
    assert not in_square_ideal(Rxy.gen("x"))


def test_in_square_ideal_nonconstant_random(Rxy, rng):
    for _ in range(20):
        f = random_poly(Rxy, rng)
        if f and not f.is_constant():
            assert not in_square_ideal(f)


# -- radicals ------------------------------------------------------------------------------


def test_radical_examples(Rxy):
    assert radical_membership("x", Ideal(Rxy, ["x^2"]))
    assert not radical_membership("x", Ideal(Rxy, ["y"]))
    s = Rxy.parse("x + y")
    assert radical_membership(s, Ideal(Rxy, [s**3]))


def test_radical_auxiliary_variable_does_not_leak(Rxy):
    I = Ideal(Rxy, ["x^2"])
    radical_membership("x", I)
    assert I.ring.vars == ("x", "y")


def test_equal_up_to_radical(Rxy):
    assert equal_up_to_radical(Ideal(Rxy, ["x^2"]), Ideal(Rxy, ["x"]))
    assert not equal_up_to_radical(Ideal(Rxy, ["x"]), Ideal(Rxy, ["y"]))


def test_equal_up_to_radical_enlightening():
    _, H, primes = enlightening_fixture()
    inter = primes[0]
    for P in primes[1:]:
        inter = intersection(inter, P)
    assert equal_up_to_radical(H, inter)


# -- elimination and intersection -----------------------------------------------------------


def test_elimination_examples():
    R = PolyRing(QQ, ("z", "x", "y"))
    E = elimination(Ideal(R, ["z*x", "1 - z*y"]), ["z"])
    assert membership("x", E)
    assert all(g.degree("z") == 0 for g in E.gens)
    S = PolyRing(QQ, ("T1", "x"))
    assert elimination(Ideal(S, ["T1"]), ["T1"]).is_zero()
    assert elimination(Ideal(PolyRing(QQ, ("y", "x")), ["x - y"]), ["y"]).is_zero()


def test_elimination_non_leading_variable():
    R = PolyRing(QQ, ("x", "y", "t"))
    E = elimination(Ideal(R, ["x - t^2", "y - t^3"]), ["t"])
    assert E == Ideal(R, ["x^3 - y^2"])


def test_intersection_examples(Rxy):
    assert intersection(Ideal(Rxy, ["x"]), Ideal(Rxy, ["y"])) == Ideal(Rxy, ["x*y"])
    assert intersection(Ideal(Rxy, ["x"]), Ideal(Rxy, ["x"])) == Ideal(Rxy, ["x"])


def test_intersection_commutes_and_contains_product(rng):
    R = PolyRing(QQ, ("x", "y", "z"))
    for _ in range(15):
        I = Ideal(R, [random_poly(R, rng, terms=2, max_deg=2) or R.gen("x") for _ in range(2)])
        J = Ideal(R, [random_poly(R, rng, terms=2, max_deg=2) or R.gen("y") for _ in range(2)])
        IJ = intersection(I, J)
        assert IJ == intersection(J, I)
        assert IJ.contains_ideal(I * J)
        assert I.contains_ideal(IJ) and J.contains_ideal(IJ)


def test_ideal_quotient(Rxy):
    I = Ideal(Rxy, ["x^2*y"])
    assert ideal_quotient(I, Rxy.gen("x")) == Ideal(Rxy, ["x*y"])
    assert ideal_quotient(I, Rxy.zero()).is_unit()


# -- dimension ---------------------------------------------------------------------------------


def test_dimension_examples(Rxy, B):
    assert dimension(Ideal(Rxy, ["x"])) == 1
    assert dimension(Ideal(Rxy, ["1"])) == -1
    assert dimension(Ideal(B, ["x^2*T1 + y^2*T2 + x*y"])) == 3
    assert dimension(Ideal(Rxy, [])) == 2


def test_codimension_examples(Rxy):
    assert codimension(Ideal(Rxy, ["x", "y"])) == 2
    assert codimension(Ideal(Rxy, ["x^2", "y^2", "x*y", "x", "y"])) == 2
    assert codimension(Ideal(Rxy, ["x", "x + 1"])) is UNIT


def test_dimension_plus_codimension(rng):
    R = PolyRing(QQ, ("x", "y", "z"))
    for _ in range(40):
        I = Ideal(R, [random_poly(R, rng, terms=2, max_deg=3) for _ in range(rng.randint(1, 3))])
        c = codimension(I)
        if c is UNIT:
            assert dimension(I) == -1
        else:
            assert dimension(I) + c == R.nvars


def test_codimension_extension_invariant(rng):
    R = PolyRing(QQ, ("x", "y"))
    B = PolyRing(QQ, ("x", "y", "T1", "T2"), block_split=2)
    for _ in range(50):
        I = Ideal(R, [random_poly(R, rng, terms=2, max_deg=3) for _ in range(rng.randint(1, 3))])
        assert codimension(I) == codimension(I.extend(B))


def test_gb_cache_concurrent(Rxy):
    I = Ideal(Rxy, ["x^3 - y^2", "x*y - 1"])
    out = []
    threads = [threading.Thread(target=lambda: out.append(I.groebner())) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert all(gb is out[0] for gb in out)


# -- gcd and content -------------------------------------------------------------------------------


def test_gcd_examples(Rxy):
    assert gcd(Rxy.parse("x^2"), Rxy.parse("x*y")) == Rxy.gen("x")
    with pytest.raises(ValueError):
        gcd(Rxy.zero(), Rxy.gen("x"))


def test_gcd_matches_sympy(Rxy, rng):
    x, y = sympy.symbols("x y")
    for _ in range(30):
        c = random_poly(Rxy, rng, terms=2, max_deg=2)
        f = random_poly(Rxy, rng, terms=2, max_deg=2)
        g = random_poly(Rxy, rng, terms=2, max_deg=2)
        if not (c and f and g):
            continue
        ours = gcd(c * f, c * g)
        theirs = sympy.Poly(sympy.gcd(to_sympy(c * f), to_sympy(c * g)), x, y, domain="QQ")
        mine = sympy.Poly(to_sympy(ours), x, y, domain="QQ")
        assert mine.monic() == theirs.monic()


def test_content_examples(B):
    h = B.parse("x*T1 + x*T2 + x")
    c = content_wrt_block(h, ["T1", "T2"])
    assert c == B.gen("x")
    assert h.exact_div(c) == B.parse("T1 + T2 + 1")
    assert content_wrt_block(B.parse("x^2*T1 + y^2*T2 + x*y")) == B.one()
    with pytest.raises(ValueError):
        content_wrt_block(B.zero())
