"""
Fibers and surjectivity
=======================

Over a rational point the relation becomes linear in the T_i, so the fiber
is empty or an affine space. Surjectivity and sections are radical and
plain membership questions.
"""

from forcealg import (
    QQ,
    ForcingData,
    PolyRing,
    fiber,
    fiber_completely_singular,
    has_section,
    horizontal_component,
    is_surjective,
)

R = PolyRing(QQ, ("x", "y"))
d = ForcingData(R, ["x", "y"], "1")
for pt in ({"x": 0, "y": 0}, {"x": 1, "y": 0}):
    print(pt, fiber(d, pt).to_json())

print("surjective:", is_surjective(d), " section:", has_section(d))

# f = x lies in the radical of (x^2) but not in (x^2)
e = ForcingData(R, ["x^2"], "x")
print("surjective:", is_surjective(e), " section:", has_section(e))

# fibers that sit entirely in the singular locus
s = ForcingData(R, ["x^2", "y^2"], "x*y")
print("over origin:", fiber_completely_singular(s, {"x": 0, "y": 0}))
print("over (1,1):", fiber_completely_singular(s, {"x": 1, "y": 1}))

# the component that dominates the base: strip the common base factor
print(horizontal_component(ForcingData(R, ["x", "x"], "x")).gens[0])
