"""Multivariate division and Buchberger's algorithm.

``buchberger`` returns the unique reduced Groebner basis of an ideal for a
given monomial order. Pairs are chosen by the normal strategy (smallest lcm
first) and pruned with Buchberger's coprime and chain criteria.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from operator import add, sub

from .orders import GREVLEX, MonomialOrder
from .poly import Polynomial, RingMismatchError, monomial_divides, monomial_lcm

__all__ = [
    "GroebnerBasis",
    "DegreeCapExceeded",
    "buchberger",
    "normal_form",
    "s_polynomial",
    "default_degree_cap",
]

DEFAULT_DEGREE_CAP = 60


class DegreeCapExceeded(RuntimeError):
    """An intermediate polynomial exceeded the configured total-degree cap."""

    def __init__(self, degree, cap, basis_size, pairs_left):
        self.degree = degree
        self.cap = cap
        self.basis_size = basis_size
        self.pairs_left = pairs_left
        super().__init__(
            f"intermediate degree {degree} exceeds cap {cap} "
            f"(basis size {basis_size}, {pairs_left} pairs pending)"
        )

    def diagnostics(self) -> dict:
        return {
            "degree": self.degree,
            "cap": self.cap,
            "basis_size": self.basis_size,
            "pairs_left": self.pairs_left,
        }


def default_degree_cap() -> int:
    env = os.environ.get("FORCEALG_DEGREE_CAP")
    if env:
        return int(env)
    return DEFAULT_DEGREE_CAP


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced Groebner basis: monic, inter-reduced, sorted by leading monomial
    (ascending)."""

    ring: object
    order: MonomialOrder
    elements: tuple

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def is_unit(self) -> bool:
        return len(self.elements) == 1 and self.elements[0].is_constant()

    def is_zero(self) -> bool:
        return not self.elements

    def leading_monomials(self):
        return [g.leading_monomial(self.order) for g in self.elements]

    def reduce(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self.elements, self.order)

    def contains(self, f: Polynomial) -> bool:
        return not self.reduce(f)

    def __str__(self):
        return "[" + ", ".join(str(g) for g in self.elements) + "]"


# -- internal term-map helpers ---------------------------------------------------


def _sub_scaled(work, terms, coef, shift, p):
    """work -= coef * x^shift * terms, in place."""
    for e, c in terms:
        t = tuple(map(add, e, shift))
        v = work.get(t, 0) - coef * c
        if p:
            v %= p
        if v:
            work[t] = v
        else:
            work.pop(t, None)


def _reduce(terms: dict, basis, key, p, full=True):
    """Normal form of a term map against ``basis`` = [(lm, [(e, c), ...]), ...].

    Basis elements must be monic. With ``full=False`` only the leading term
    is reduced (top reduction).
    """
    work = dict(terms)
    rem = {}
    while work:
        m = max(work, key=key)
        c = work[m]
        for lm, gterms in basis:
            if monomial_divides(lm, m):
                _sub_scaled(work, gterms, c, tuple(map(sub, m, lm)), p)
                break
        else:
            if not full:
                rem.update(work)
                return rem
            rem[m] = c
            del work[m]
    return rem


def _monic(terms: dict, key, F):
    lm = max(terms, key=key)
    lc = terms[lm]
    if lc == 1:
        return lm, terms
    inv = F.inv(lc)
    p = F.characteristic
    if p:
        return lm, {e: c * inv % p for e, c in terms.items()}
    return lm, {e: c * inv for e, c in terms.items()}


def _check_ring(polys, ring=None):
    for g in polys:
        if ring is None:
            ring = g.ring
        elif g.ring != ring:
            raise RingMismatchError(f"{g.ring} vs {ring}")
    return ring


# -- public operations ---------------------------------------------------------------


def normal_form(f: Polynomial, G, order: MonomialOrder = GREVLEX) -> Polynomial:
    """Remainder of multivariate division of ``f`` by the list ``G``.

    No remainder term is divisible by a leading monomial of ``G``, and
    ``f - remainder`` lies in the ideal generated by ``G``.
    """
    G = [g for g in G if g]
    ring = _check_ring(G, f.ring)
    F = ring.field
    key = order.key
    basis = []
    for g in G:
        lm, terms = _monic(g._terms, key, F)
        basis.append((lm, list(terms.items())))
    return Polynomial._make(ring, _reduce(f._terms, basis, key, F.characteristic))


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder = GREVLEX) -> Polynomial:
    """``(L/lt(f))*f - (L/lt(g))*g`` where L is the lcm of the leading monomials."""
    if not f or not g:
        raise ValueError("S-polynomial of a zero polynomial")
    _check_ring([f, g])
    F = f.field
    (mf, cf), (mg, cg) = f.leading(order), g.leading(order)
    L = monomial_lcm(mf, mg)
    left = f.mul_monomial(tuple(map(sub, L, mf)), F.inv(cf))
    right = g.mul_monomial(tuple(map(sub, L, mg)), F.inv(cg))
    return left - right


def buchberger(gens, order: MonomialOrder = GREVLEX, degree_cap: int | None = None,
               ring=None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``."""
    gens = list(gens)
    ring = _check_ring(gens, ring)
    if ring is None:
        raise ValueError("cannot infer the ring of an empty generator list")
    cap = default_degree_cap() if degree_cap is None else degree_cap
    F = ring.field
    p = F.characteristic
    key = order.key

    # G[i] = (lm, term dict); dropped[i] marks elements made redundant
    G = []
    pairs = set()

    def degree(terms):
        return max(sum(e) for e in terms)

    def add_element(terms):
        d = degree(terms)
        if d > cap:
            raise DegreeCapExceeded(d, cap, len(G), len(pairs))
        lm, terms = _monic(terms, key, F)
        t = len(G)
        G.append((lm, terms))
        for i in range(t):
            pairs.add((i, t))
        return lm

    for g in gens:
        if not g:
            continue
        basis = [(lm, list(t.items())) for lm, t in G]
        r = _reduce(g._terms, basis, key, p)
        if r:
            add_element(r)

    def is_constant(lm):
        return not any(lm)

    while pairs and not any(is_constant(lm) for lm, _ in G):
        i, j = min(
            pairs,
            key=lambda ij: (
                sum(monomial_lcm(G[ij[0]][0], G[ij[1]][0])),
                key(monomial_lcm(G[ij[0]][0], G[ij[1]][0])),
                ij,
            ),
        )
        pairs.discard((i, j))
        (li, ti), (lj, tj) = G[i], G[j]
        L = monomial_lcm(li, lj)
        # coprime criterion
        if all(a == 0 or b == 0 for a, b in zip(li, lj)):
            continue
        # chain criterion
        chained = False
        for k, (lk, _) in enumerate(G):
            if k in (i, j) or not monomial_divides(lk, L):
                continue
            if (min(i, k), max(i, k)) not in pairs and (min(j, k), max(j, k)) not in pairs:
                chained = True
                break
        if chained:
            continue
        spoly = {}
        _sub_scaled(spoly, [(e, -c) for e, c in ti.items()], 1, tuple(map(sub, L, li)), p)
        _sub_scaled(spoly, list(tj.items()), 1, tuple(map(sub, L, lj)), p)
        if not spoly:
            continue
        if degree(spoly) > cap:
            raise DegreeCapExceeded(degree(spoly), cap, len(G), len(pairs))
        basis = [(lm, list(t.items())) for lm, t in G]
        r = _reduce(spoly, basis, key, p)
        if r:
            add_element(r)

    return GroebnerBasis(ring, order, _interreduce(G, ring, key, F))


def _interreduce(G, ring, key, F):
    p = F.characteristic
    if any(not any(lm) for lm, _ in G):
        return (ring.one(),)
    # minimal basis: drop elements whose leading monomial is a multiple of another's
    keep = []
    for i, (lm, t) in enumerate(G):
        redundant = False
        for j, (lm2, _) in enumerate(G):
            if i == j:
                continue
            if monomial_divides(lm2, lm) and (lm2 != lm or j < i):
                redundant = True
                break
        if not redundant:
            keep.append((lm, t))
    reduced = []
    for i, (lm, t) in enumerate(keep):
        others = [(lm2, list(t2.items())) for j, (lm2, t2) in enumerate(keep) if j != i]
        r = _reduce(t, others, key, p)
        reduced.append((lm, r))
    reduced.sort(key=lambda pair: key(pair[0]))
    return tuple(Polynomial._make(ring, t) for _, t in reduced)
