"""
Polynomials and Groebner bases
==============================

Exact arithmetic over the rationals and over prime fields, then reduced
Groebner bases under the three supported monomial orders.
"""

from forcealg import GF, GREVLEX, LEX, QQ, BlockElim, PolyRing, buchberger, normal_form

# a ring is a field plus an ordered list of variable names
R = PolyRing(QQ, ("x", "y"))
x, y = R.gens()
print((x + y) * (x - y))

# text input: '*' is optional and coefficients may be fractions
f = R.parse("2x^2y - 1/3 y + 4")
print(f, "  d/dx:", f.diff("x"))

# in characteristic 2 squaring is additive
R2 = PolyRing(GF(2), ("x", "y"))
print(R2.parse("x + y") ** 2)

# the same ideal has a different reduced basis for each order
gens = [R.parse("x^2 + y^2 - 1"), R.parse("x - y^2")]
for order in (LEX, GREVLEX, BlockElim(1)):
    print(f"{order!s:>12}:", buchberger(gens, order))

# division by a basis gives a canonical remainder
G = buchberger(gens, LEX)
print("x^3 mod G =", normal_form(x**3, list(G), LEX))
