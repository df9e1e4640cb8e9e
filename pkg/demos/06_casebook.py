"""
Worked cases as checks
======================

Each case recomputes a known answer and reports expected against actual.
"""

from forcealg import GF, QQ
from forcealg.casebook import (
    enlightening_fixture,
    normality_grid,
    verify_decomposition,
    verify_enlightening_singular_locus,
    verify_normalization_example,
)


def show(case):
    print(f"{case.name}: {'pass' if case.passed else 'FAIL'}")
    for label, exp, act in case.subchecks:
        print(f"    {label:<28} expected {exp!s:<6} actual {act}")
    for note in case.notes:
        print("    note:", note)


show(normality_grid(3, 3, 3, 3))

_, H, primes = enlightening_fixture()
show(verify_decomposition(H, primes, (2, 2, 2, 2), 2))
# one component fewer and the radicals no longer match
show(verify_decomposition(H, primes[:3]))

for field in (QQ, GF(5), GF(2)):
    show(verify_enlightening_singular_locus(field))

show(verify_normalization_example())
