"""
Several forcing equations
=========================

A matrix of base-ring elements gives one relation per row. Row operations
keep the ideal; column operations change variables.
"""

from forcealg import QQ, PolyRing, Verdict
from forcealg.matrix import (
    ColAdd,
    ForcingMatrix,
    RowAdd,
    adjoint_membership_check,
    col_op,
    fitting_ideal,
    forcing_ideal,
    is_regular_sequence,
    matrix_fiber,
    regular_sequence_necessary_check,
    row_op,
)

R = PolyRing(QQ, ("x", "y"))
M = ForcingMatrix(R, [["x", "y"], ["y", "x"]])
H = forcing_ideal(M)
print("H =", ", ".join(map(str, H.gens)))
print("det:", fitting_ideal(M, 2).groebner(), " regular:", is_regular_sequence(M).verdict)
print("det * T_i in H:", adjoint_membership_check(M))

# subtracting the first row from the second does not change H
print("row op keeps H:", forcing_ideal(row_op(M, RowAdd(1, 0, -1))) == H)

# adding column 2 to column 1 is the substitution T2 -> T1 + T2
N, subst = col_op(M, ColAdd(0, 1))
print("new matrix:", N, " substitution:", subst)

# nonzero determinant is necessary for a regular sequence, not sufficient
E = ForcingMatrix(R, [["x", "-x"], ["x", "x"]])
nec, reg = regular_sequence_necessary_check(E), is_regular_sequence(E)
print("det:", fitting_ideal(E, 2).groebner(), " necessary:", nec.verdict, " regular:", reg.verdict, reg.witnesses)
assert nec.verdict is Verdict.YES and reg.verdict is Verdict.NO

for pt in ({"x": 1, "y": 1}, {"x": 1, "y": 2}):
    fb = matrix_fiber(M, pt)
    print(pt, fb.status, fb.dim)
