"""Ideals of polynomial rings and the queries the decision layer needs.

Every query reduces to a Groebner basis computation. Auxiliary variables for
the Rabinowitsch trick and for intersections live in a freshly extended ring
and never appear in results.
"""

from __future__ import annotations

import threading
from itertools import combinations

from .groebner import GroebnerBasis, buchberger
from .orders import GREVLEX, BlockElim, MonomialOrder
from .poly import PolyRing, Polynomial, RingMismatchError

__all__ = [
    "Ideal",
    "UnitIdeal",
    "UNIT",
    "membership",
    "in_square_ideal",
    "radical_membership",
    "elimination",
    "intersection",
    "ideal_quotient",
    "equal_up_to_radical",
    "dimension",
    "codimension",
    "gcd",
    "content_wrt_block",
]


class UnitIdeal:
    """Marker returned instead of a codimension when the ideal is the whole ring."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "UNIT"

    def __str__(self):
        return "unit"

    def __reduce__(self):
        return (UnitIdeal, ())


UNIT = UnitIdeal()


class Ideal:
    """An ideal given by generators, with a per-order memo of reduced bases."""

    def __init__(self, ring: PolyRing, gens=()):
        self.ring = ring
        out = []
        for g in gens:
            if isinstance(g, str):
                g = ring.parse(g)
            elif not isinstance(g, Polynomial):
                g = ring.constant(g)
            elif g.ring != ring:
                raise RingMismatchError(f"generator {g} lives in {g.ring}, not {ring}")
            out.append(g)
        self.gens = tuple(out)
        self._gb_cache = {}
        self._lock = threading.Lock()

    @classmethod
    def unit(cls, ring):
        return cls(ring, [ring.one()])

    def __repr__(self):
        return f"Ideal({', '.join(str(g) for g in self.gens)}) in {self.ring}"

    def groebner(self, order: MonomialOrder = GREVLEX) -> GroebnerBasis:
        with self._lock:
            gb = self._gb_cache.get(order)
            if gb is None:
                gb = buchberger(self.gens, order, ring=self.ring)
                self._gb_cache[order] = gb
            return gb

    def is_unit(self) -> bool:
        return self.groebner().is_unit()

    def is_zero(self) -> bool:
        return all(not g for g in self.gens)

    def contains(self, f) -> bool:
        return membership(f, self)

    def contains_ideal(self, other: Ideal) -> bool:
        return all(self.contains(g) for g in other.gens)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.ring == other.ring and self.groebner().elements == other.groebner().elements

    __hash__ = None

    def __add__(self, other: Ideal) -> Ideal:
        _same_ring(self, other)
        return Ideal(self.ring, self.gens + other.gens)

    def __mul__(self, other: Ideal) -> Ideal:
        _same_ring(self, other)
        return Ideal(self.ring, [a * b for a in self.gens for b in other.gens])

    def extend(self, ring: PolyRing) -> Ideal:
        """The extended ideal in a ring containing this ring's variables."""
        return Ideal(ring, [g.to_ring(ring) for g in self.gens])

    def dimension(self) -> int:
        return dimension(self)

    def codimension(self):
        return codimension(self)


def _same_ring(I, J):
    if I.ring != J.ring:
        raise RingMismatchError(f"{I.ring} vs {J.ring}")


def _as_poly(f, ring):
    if isinstance(f, Polynomial):
        if f.ring != ring:
            raise RingMismatchError(f"{f.ring} vs {ring}")
        return f
    return ring(f)


def membership(f, I: Ideal) -> bool:
    """True iff ``f`` reduces to zero modulo a Groebner basis of ``I``."""
    f = _as_poly(f, I.ring)
    return I.groebner().contains(f)


def in_square_ideal(f: Polynomial) -> bool:
    """Whether ``f`` lies in the principal ideal generated by ``f**2``."""
    return membership(f, Ideal(f.ring, [f * f]))


def radical_membership(f, I: Ideal) -> bool:
    """Rabinowitsch: f is in rad(I) iff 1 is in I + (1 - z*f) with z fresh."""
    f = _as_poly(f, I.ring)
    if not f:
        return True
    ring = I.ring
    (z,) = ring.fresh_names("z")
    E = ring.extend([z])
    zf = E.gen(z) * f.to_ring(E)
    gens = [g.to_ring(E) for g in I.gens] + [E.one() - zf]
    return buchberger(gens, GREVLEX, ring=E).is_unit()


def elimination(I: Ideal, drop_vars) -> Ideal:
    """Generators of ``I`` intersected with the subring free of ``drop_vars``.

    The eliminated variables are moved to the front of a block order; basis
    elements free of them generate the elimination ideal.
    """
    ring = I.ring
    drop = list(drop_vars)
    for v in drop:
        ring.index(v)
    keep = [v for v in ring.vars if v not in drop]
    work = PolyRing(ring.field, drop + keep)
    k = len(drop)
    gb = buchberger([g.to_ring(work) for g in I.gens], BlockElim(k), ring=work)
    free = [g for g in gb if all(not any(e[:k]) for e, _ in g.items())]
    return Ideal(ring, [g.to_ring(ring) for g in free])


def intersection(I: Ideal, J: Ideal) -> Ideal:
    """I ∩ J by eliminating t from t*I + (1 - t)*J."""
    _same_ring(I, J)
    ring = I.ring
    (t,) = ring.fresh_names("t")
    E = ring.extend([t])
    tt = E.gen(t)
    gens = [tt * g.to_ring(E) for g in I.gens] + [(E.one() - tt) * g.to_ring(E) for g in J.gens]
    gb = buchberger(gens, BlockElim(1), ring=E)
    return Ideal(ring, [g.to_ring(ring) for g in gb if all(e[0] == 0 for e, _ in g.items())])


def ideal_quotient(I: Ideal, g: Polynomial) -> Ideal:
    """The colon ideal (I : g) = (1/g) * (I ∩ (g))."""
    g = _as_poly(g, I.ring)
    if not g:
        return Ideal.unit(I.ring)
    inter = intersection(I, Ideal(I.ring, [g]))
    return Ideal(I.ring, [h.exact_div(g) for h in inter.gens])


def equal_up_to_radical(I: Ideal, J: Ideal) -> bool:
    """rad(I) == rad(J), checked generator by generator in both directions."""
    _same_ring(I, J)
    return all(radical_membership(g, J) for g in I.gens) and all(
        radical_membership(g, I) for g in J.gens
    )


def dimension(I: Ideal) -> int:
    """Krull dimension of R/I, or -1 for the unit ideal.

    Largest set S of variables such that no leading monomial of the basis
    involves only variables from S.
    """
    gb = I.groebner()
    if gb.is_unit():
        return -1
    n = I.ring.nvars
    masks = []
    for lm in gb.leading_monomials():
        masks.append(sum(1 << i for i, e in enumerate(lm) if e))
    for size in range(n, -1, -1):
        for combo in combinations(range(n), size):
            S = sum(1 << i for i in combo)
            if all(m & ~S for m in masks):
                return size
    return 0


def codimension(I: Ideal):
    """Number of variables minus dimension; :data:`UNIT` for the unit ideal."""
    d = dimension(I)
    if d < 0:
        return UNIT
    return I.ring.nvars - d


def gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic gcd via f*g / lcm, where (lcm) = (f) ∩ (g)."""
    if not f or not g:
        raise ValueError("gcd of a zero polynomial")
    if f.ring != g.ring:
        raise RingMismatchError(f"{f.ring} vs {g.ring}")
    if f.is_constant() or g.is_constant():
        return f.ring.one()
    lcm_ideal = intersection(Ideal(f.ring, [f]), Ideal(f.ring, [g]))
    (lcm,) = lcm_ideal.groebner().elements
    return (f * g).exact_div(lcm).monic()


def content_wrt_block(h: Polynomial, t_vars=None) -> Polynomial:
    """Monic gcd of the coefficients of ``h`` viewed as a polynomial in ``t_vars``.

    ``t_vars`` defaults to the forcing block of ``h``'s ring.
    """
    if not h:
        raise ValueError("content of the zero polynomial")
    ring = h.ring
    if t_vars is None:
        t_vars = ring.forcing_vars
    t_idx = [ring.index(v) for v in t_vars]
    groups = {}
    for e, c in h.items():
        tk = tuple(e[i] for i in t_idx)
        stripped = list(e)
        for i in t_idx:
            stripped[i] = 0
        groups.setdefault(tk, {})[tuple(stripped)] = c
    coeffs = [Polynomial._make(ring, terms) for _, terms in sorted(groups.items())]
    coeffs.sort(key=lambda q: (len(q), q.total_degree))
    content = coeffs[0].monic()
    for q in coeffs[1:]:
        if content.is_constant():
            break
        content = gcd(content, q)
    return content
