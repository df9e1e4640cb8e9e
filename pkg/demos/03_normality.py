"""
Integrity and normality of a forcing algebra
============================================

A forcing algebra adds new variables T_i and one relation
f1*T1 + ... + fn*Tn + f = 0. Whether it is a domain, or a normal domain,
is read off from codimensions of ideals in the base ring.
"""

from itertools import product

from forcealg import (
    QQ,
    ForcingData,
    PolyRing,
    Verdict,
    is_domain,
    is_irreducible,
    is_normal,
    jacobian_normality,
)
from forcealg.casebook import seven_case_rule

R = PolyRing(QQ, ("x", "y"))

# x^2*T1 + y^2*T2 + xy: a domain that is not normal
d = ForcingData(R, ["x^2", "y^2"], "x*y")
print("equation:", d.equation)
for test in (is_domain, is_irreducible, is_normal, jacobian_normality):
    r = test(d)
    print(f"{test.__name__:>20}: {r.verdict} via '{r.branch}' {r.witnesses}")

# a common factor from the base ring breaks integrity
print(is_domain(ForcingData(R, ["x", "x"], "x")).to_json())

# the family x^a T1 + y^b T2 + x^c y^d, checked against its closed form
rows = []
for a, b, c, e in product(range(4), repeat=4):
    got = is_normal(ForcingData(R, [f"x^{a}", f"y^{b}"], f"x^{c}*y^{e}")).verdict is Verdict.YES
    rows.append(got == seven_case_rule(a, b, c, e))
print(f"closed form agrees on {sum(rows)}/{len(rows)} exponent choices")
