import random
from fractions import Fraction

import pytest
import sympy

from forcealg import QQ, GF, ForcingData, Ideal, PolyRing, Verdict, forcing_equation, membership
from forcealg.matrix import (
    ColAdd,
    ColScale,
    ColSwap,
    ForcingMatrix,
    RowAdd,
    RowScale,
    RowSwap,
    adjoint_membership_check,
    col_op,
    fitting_ideal,
    forcing_ideal,
    is_regular_sequence,
    matrix_fiber,
    rank_over_field,
    regular_sequence_necessary_check,
    row_op,
)

from conftest import random_poly


@pytest.fixture
def M6(Rxy):
    return ForcingMatrix(Rxy, [["x", "y"], ["y", "x"]])


@pytest.fixture
def M13(Rxy):
    return ForcingMatrix(Rxy, [["x", "-x"], ["x", "x"]])


def test_forcing_ideal(M6, Rxy):
    B = M6.ring
    assert forcing_ideal(M6).gens == (B.parse("x*T1 + y*T2"), B.parse("y*T1 + x*T2"))
    ident = ForcingMatrix(Rxy, [["1", "0"], ["0", "1"]])
    assert forcing_ideal(ident) == Ideal(ident.ring, ["T1", "T2"])


def test_single_row_matches_forcing_equation(Rxy):
    d = ForcingData(Rxy, ["x^2", "y^2"], "x*y")
    M = ForcingMatrix.from_forcing_data(d)
    assert forcing_ideal(M).gens == (forcing_equation(d),)


def test_rectangular_required(Rxy):
    with pytest.raises(ValueError):
        ForcingMatrix(Rxy, [["x", "y"], ["x"]])


# -- elementary operations --------------------------------------------------------------------


def test_row_swap_and_subtract(M6):
    H = forcing_ideal(M6)
    assert forcing_ideal(row_op(M6, RowSwap(0, 1))) == H
    assert forcing_ideal(row_op(M6, RowAdd(1, 0, -1))) == H


def test_non_unit_scale_rejected(M6):
    with pytest.raises(ValueError):
        row_op(M6, RowScale(0, "x"))
    with pytest.raises(ValueError):
        row_op(M6, RowScale(0, 0))
    with pytest.raises(ValueError):
        col_op(M6, ColScale(0, "x"))


def test_col_add_substitution(M6):
    M2, subst = col_op(M6, ColAdd(0, 1))
    B = M6.ring
    assert subst == {"T2": B.parse("T1 + T2")}
    assert M2.entries[0][0] == M6.base.parse("x + y")


def _random_matrix(R, rng, m, n, vec=True):
    entries = [[random_poly(R, rng, terms=2, max_deg=2) for _ in range(n)] for _ in range(m)]
    v = [random_poly(R, rng, terms=1, max_deg=1) for _ in range(m)] if vec else None
    return ForcingMatrix(R, entries, v)


def test_row_ops_preserve_ideal(Rxy):
    rng = random.Random(31)
    for _ in range(50):
        M = _random_matrix(Rxy, rng, rng.randint(2, 3), 2)
        ref = forcing_ideal(M).groebner().elements
        N = M
        for _ in range(4):
            i, j = rng.sample(range(M.m), 2)
            kind = rng.randrange(3)
            if kind == 0:
                N = row_op(N, RowSwap(i, j))
            elif kind == 1:
                N = row_op(N, RowScale(i, rng.choice([-2, 3, Fraction(1, 2)])))
            else:
                N = row_op(N, RowAdd(i, j, random_poly(Rxy, rng, terms=2, max_deg=1)))
        assert forcing_ideal(N).groebner().elements == ref


def test_col_ops_are_isomorphisms(Rxy):
    rng = random.Random(32)
    for _ in range(40):
        M = _random_matrix(Rxy, rng, 2, 3)
        i, j = rng.sample(range(3), 2)
        op = rng.choice(
            [ColSwap(i, j), ColScale(i, rng.choice([-1, 2, 5])), ColAdd(i, j, random_poly(Rxy, rng, terms=2, max_deg=1))]
        )
        N, subst = col_op(M, op)
        old, new = forcing_ideal(M), forcing_ideal(N)
        # the substitution sends the old equations to the new ones exactly
        assert tuple(h.substitute(subst) for h in old.gens) == new.gens
        assert Ideal(M.ring, [h.substitute(subst) for h in old.gens]) == new


# -- Fitting ideals ---------------------------------------------------------------------------------


def test_fitting_examples(M6, M13, Rxy):
    assert fitting_ideal(M6, 2) == Ideal(Rxy, ["x^2 - y^2"])
    assert [str(g) for g in fitting_ideal(M6, 2).groebner()] == ["x^2 - y^2"]
    assert fitting_ideal(M13, 2).gens == (Rxy.parse("2*x^2"),)
    assert fitting_ideal(M6, 1) == Ideal(Rxy, ["x", "y"])
    with pytest.raises(ValueError):
        fitting_ideal(M6, 3)
    with pytest.raises(ValueError):
        fitting_ideal(M6, 0)


def test_fitting_monotone(Rxy):
    rng = random.Random(33)
    for _ in range(20):
        M = _random_matrix(Rxy, rng, 3, 3, vec=False)
        for j in (1, 2):
            big, small = fitting_ideal(M, j + 1), fitting_ideal(M, j)
            assert all(membership(g, small) for g in big.gens)


def test_determinant_matches_sympy(Rxy):
    from forcealg.matrix import determinant
    from conftest import to_sympy

    rng = random.Random(34)
    for _ in range(20):
        rows = [[random_poly(Rxy, rng, terms=2, max_deg=2) for _ in range(3)] for _ in range(3)]
        ours = to_sympy(determinant(rows))
        theirs = sympy.Matrix([[to_sympy(e) for e in r] for r in rows]).det()
        assert sympy.expand(ours - theirs) == 0


# -- regular sequences -------------------------------------------------------------------------------


def test_regular_sequence_examples(M6, M13, Rxy):
    r = is_regular_sequence(M6)
    assert r.verdict is Verdict.YES and r.witnesses == {"codim_H": 2, "m": 2}
    r = is_regular_sequence(M13)
    assert r.verdict is Verdict.NO and r.witnesses["codim_H"] == 1
    single = ForcingMatrix(Rxy, [["x", "y"]])
    assert is_regular_sequence(single).verdict is Verdict.YES


def test_regular_sequence_degenerate(Rxy):
    M = ForcingMatrix(Rxy, [["x", "y"], ["0", "0"]])
    assert is_regular_sequence(M).verdict is Verdict.DEGENERATE


def test_regular_sequence_unit(Rxy):
    M = ForcingMatrix(Rxy, [["0"], ["0"]], ["1", "x"])
    assert is_regular_sequence(M).branch == "H = B"


def test_necessary_check(M6, M13, Rxy):
    assert regular_sequence_necessary_check(M6).verdict is Verdict.YES
    r = regular_sequence_necessary_check(M13)
    assert r.verdict is Verdict.YES and is_regular_sequence(M13).verdict is Verdict.NO
    tall = ForcingMatrix(Rxy, [["x", "y"], ["y", "x"], ["x", "x"]])
    assert regular_sequence_necessary_check(tall).verdict is Verdict.NO
    assert any("m <= n" in n for n in r.notes)


def test_regular_implies_necessary(Rxy):
    rng = random.Random(35)
    seen = 0
    for _ in range(40):
        M = _random_matrix(Rxy, rng, rng.randint(1, 3), 2, vec=False)
        if any(not h for h in forcing_ideal(M).gens):
            continue
        if is_regular_sequence(M).verdict is Verdict.YES:
            seen += 1
            assert regular_sequence_necessary_check(M).verdict is Verdict.YES
    assert seen > 0


def test_adjoint(M6, M13, Rxy):
    assert adjoint_membership_check(M6)
    assert adjoint_membership_check(ForcingMatrix(Rxy, [["1", "0"], ["0", "1"]]))
    assert adjoint_membership_check(M13)
    with pytest.raises(ValueError):
        adjoint_membership_check(ForcingMatrix(Rxy, [["x", "y"]]))
    with pytest.raises(ValueError):
        adjoint_membership_check(ForcingMatrix(Rxy, [["x"]], ["1"]))


# -- fibers ---------------------------------------------------------------------------------------------


def test_matrix_fiber_examples(M6, Rxy):
    fb = matrix_fiber(M6, {"x": 1, "y": 1})
    assert fb.rank == 1 and fb.dim == 1
    fb = matrix_fiber(M6, {"x": 0, "y": 0})
    assert fb.rank == 0 and fb.dim == 2
    zero = ForcingMatrix(Rxy, [["0", "0"], ["0", "0"]], ["0", "1"])
    assert matrix_fiber(zero, {"x": 3, "y": 2}).is_empty
    ident = ForcingMatrix(Rxy, [["1", "0"], ["0", "1"]], ["0", "1"])
    fb = matrix_fiber(ident, {"x": 3, "y": 2})
    assert fb.status == "AffineSpace" and fb.dim == 0


def test_matrix_fiber_incomplete_point(M6):
    with pytest.raises(ValueError):
        matrix_fiber(M6, {"x": 1})


def test_matrix_fiber_gf5(Rxy5):
    M = ForcingMatrix(Rxy5, [["x", "y"], ["y", "x"]])
    # det = x^2 - y^2 vanishes at (2, 3) mod 5
    assert matrix_fiber(M, {"x": 2, "y": 3}).rank == 1


def test_rank_oracle():
    rng = random.Random(36)
    for _ in range(100):
        rows = [[rng.randint(-3, 3) for _ in range(3)] for _ in range(3)]
        if rng.random() < 0.3:
            rows[2] = [a + b for a, b in zip(rows[0], rows[1])]
        assert rank_over_field([[QQ(a) for a in r] for r in rows], QQ) == sympy.Matrix(rows).rank()
