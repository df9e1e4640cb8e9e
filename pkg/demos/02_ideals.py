"""
Ideal queries
=============

Membership, radical membership, intersections, elimination and dimension.
Every answer comes out of a Groebner basis computation.
"""

from forcealg import (
    QQ,
    Ideal,
    PolyRing,
    codimension,
    dimension,
    elimination,
    gcd,
    intersection,
    membership,
    radical_membership,
)

R = PolyRing(QQ, ("x", "y"))
I = Ideal(R, ["x^2", "x*y"])

print("y*x^3 in I:", membership("y*x^3", I))
print("x in I:", membership("x", I), "  x in rad I:", radical_membership("x", I))

# (x) and (y) meet in (xy)
print("(x) & (y) =", intersection(Ideal(R, ["x"]), Ideal(R, ["y"])).groebner())

# the twisted cubic projected to the plane
S = PolyRing(QQ, ("t", "x", "y"))
print("implicit equation:", elimination(Ideal(S, ["x - t^2", "y - t^3"]), ["t"]).gens)

# dimension counts free directions; the unit ideal has no codimension number
print("dim R/I =", dimension(I), " codim =", codimension(I))
print("codim of (x, x+1):", codimension(Ideal(R, ["x", "x + 1"])))

print("gcd(x^2 - y^2, x^2 + xy) =", gcd(R.parse("x^2 - y^2"), R.parse("x^2 + x*y")))
