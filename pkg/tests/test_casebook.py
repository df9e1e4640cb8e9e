import pytest
import sympy

from forcealg import GF, QQ, Ideal, PolyRing, RingMismatchError
from forcealg.casebook import (
    CaseResult,
    enlightening_fixture,
    jacobian_minors,
    normality_grid,
    seven_case_rule,
    verify_decomposition,
    verify_enlightening_singular_locus,
    verify_normalization_example,
)


def test_case_result_conjunction():
    r = CaseResult("demo")
    r.check("a", 1, 1)
    assert r.passed
    r.check("b", 2, 3)
    assert not r.passed
    assert r.failures() == [("b", 2, 3)]


def test_seven_case_rule_examples():
    assert not seven_case_rule(2, 2, 1, 1)
    assert seven_case_rule(1, 5, 7, 9)
    assert seven_case_rule(2, 2, 0, 0)


def test_grid_small_and_full():
    assert normality_grid(1, 1, 1, 1).subchecks == [("instances_agreeing", 16, 16)]
    full = normality_grid(3, 3, 3, 3)
    assert full.passed and full.subchecks == [("instances_agreeing", 256, 256)]


def test_decomposition_passes():
    _, H, primes = enlightening_fixture()
    r = verify_decomposition(H, primes, (2, 2, 2, 2), 2)
    assert r.passed
    assert any("primality" in n for n in r.notes)


def test_decomposition_missing_prime_fails_radical_check():
    _, H, primes = enlightening_fixture()
    r = verify_decomposition(H, primes[:3])
    assert not r.passed
    assert [s[0] for s in r.failures()] == ["rad_H_eq_rad_intersection"]


def test_decomposition_trivial_and_errors(Rxy):
    I = Ideal(Rxy, ["x"])
    assert verify_decomposition(I, [I]).passed
    with pytest.raises(ValueError):
        verify_decomposition(I, [])
    with pytest.raises(RingMismatchError):
        verify_decomposition(I, [Ideal(PolyRing(QQ, ("x",)), ["x"])])


@pytest.mark.parametrize("field", [QQ, GF(5), GF(2)], ids=str)
def test_enlightening(field):
    r = verify_enlightening_singular_locus(field)
    assert r.passed
    assert r.to_json()["subchecks"][0]["label"] == "codim_J0"
    if field.characteristic == 2:
        assert any("characteristic 2" in n for n in r.notes)


@pytest.mark.parametrize("p,expected", [(0, 3), (5, 3), (2, 2)])
def test_enlightening_codim_oracle(p, expected):
    """Codimension of J0 recomputed from sympy's Groebner basis."""
    from itertools import combinations

    field = GF(p) if p else QQ
    M, H, _ = enlightening_fixture(field)
    gens = jacobian_minors(list(H.gens), 2) + list(H.gens)
    from conftest import to_sympy

    syms = sympy.symbols(M.ring.vars)
    kw = {"modulus": p} if p else {}
    G = sympy.groebner([to_sympy(g) for g in gens], *syms, order="grevlex", **kw)
    lms = [sympy.Poly(g, *syms).monoms(order="grevlex")[0] for g in G.exprs]
    dim = max(
        len(S)
        for k in range(5)
        for S in combinations(range(4), k)
        if all(any(m[i] and i not in S for i in range(4)) for m in lms)
    )
    assert 4 - dim == expected


def test_enlightening_needs_all_minors():
    r = verify_enlightening_singular_locus()
    assert any("T1^2 - T2^2" in n and "drops to 2" in n for n in r.notes)


def test_normalization():
    r = verify_normalization_example()
    assert r.passed
    labels = [s[0] for s in r.subchecks]
    assert labels == ["codim_P", "forcing_equation_in_P", "singular_locus_empty", "integral_equation_in_P"]


def test_normalization_perturbed():
    r = verify_normalization_example(("Y*U - X*T", "X*U + Y*S", "U^2 + U + T*S"))
    assert not r.passed
    assert ("forcing_equation_in_P", True, False) in r.subchecks


def test_normalization_membership_combination():
    C = PolyRing(QQ, ("X", "Y", "T", "S", "U"))
    a, b = C.parse("Y*U - X*T"), C.parse("X*U + Y*S + X")
    # X^2 T + Y^2 S + XY = Y*(XU + YS + X) - X*(YU - XT)
    assert C.gen("Y") * b - C.gen("X") * a == C.parse("X^2*T + Y^2*S + X*Y")


def test_results_deterministic():
    a = verify_normalization_example().to_json()
    b = verify_normalization_example().to_json()
    assert a == b
