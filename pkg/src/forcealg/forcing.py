"""Single-equation forcing algebras A = R[T1..Tn]/(f1*T1 + ... + fn*Tn + f).

The decision procedures return a :class:`CriterionReport` naming the clause
that fired and the codimensions it relied on, never a bare boolean.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .ideal import UNIT, Ideal, codimension, content_wrt_block, membership, radical_membership
from .poly import PolyRing, Polynomial

__all__ = [
    "ForcingData",
    "Verdict",
    "CriterionReport",
    "FiberDescription",
    "HypothesisError",
    "forcing_equation",
    "data_ideal",
    "derivative_ideal",
    "jacobian_ideal",
    "is_domain",
    "is_irreducible",
    "is_normal",
    "jacobian_normality",
    "is_surjective",
    "has_section",
    "fiber",
    "fiber_completely_singular",
    "horizontal_component",
]


class HypothesisError(ValueError):
    """A criterion was applied outside the hypotheses it is stated under."""


class Verdict(str, Enum):
    YES = "Yes"
    NO = "No"
    PROVEN_YES = "ProvenYes"
    INCONCLUSIVE = "Inconclusive"
    DEGENERATE = "Degenerate"

    def __str__(self):
        return self.value


def witness_json(v):
    return "unit" if v is UNIT else v


@dataclass
class CriterionReport:
    verdict: Verdict
    branch: str
    witnesses: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)

    def __bool__(self):
        return self.verdict in (Verdict.YES, Verdict.PROVEN_YES)

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "branch": self.branch,
            "witnesses": {k: witness_json(v) for k, v in self.witnesses.items()},
            "notes": list(self.notes),
        }


@dataclass(frozen=True)
class FiberDescription:
    """Fiber of the forcing morphism over a rational point.

    ``residue_point`` holds the evaluated rows ``(f_i1(p), ..., f_in(p), f_i(p))``.
    """

    status: str  # "Empty" or "AffineSpace"
    dim: int | None
    rank: int
    residue_point: tuple

    @property
    def is_empty(self) -> bool:
        return self.status == "Empty"

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "dim": self.dim,
            "rank": self.rank,
            "residue_point": [[str(c) for c in row] for row in self.residue_point],
        }


class ForcingData:
    """Forcing data (f1, ..., fn; f) over a polynomial base ring.

    ``ring`` is B = base[T1..Tn] with the base variables as the leading block.
    """

    def __init__(self, base: PolyRing, fs, f, t_names=None):
        self.base = base
        self.fs = tuple(self._coerce(g) for g in fs)
        self.f = self._coerce(f)
        n = len(self.fs)
        if t_names is None:
            t_names = tuple(f"T{i + 1}" for i in range(n))
        t_names = tuple(t_names)
        if len(t_names) != n:
            raise ValueError(f"{n} forcing elements but {len(t_names)} forcing variables")
        clash = set(t_names) & set(base.vars)
        if clash:
            raise ValueError(f"forcing variables {sorted(clash)} clash with base variables")
        self.t_names = t_names
        self.ring = PolyRing(base.field, base.vars + t_names, block_split=base.nvars)
        self._h = None

    def _coerce(self, g):
        if isinstance(g, Polynomial):
            if g.ring != self.base:
                raise ValueError(f"{g} does not live in the base ring {self.base}")
            return g
        return self.base(g)

    @property
    def n(self) -> int:
        return len(self.fs)

    @property
    def field(self):
        return self.base.field

    @property
    def equation(self) -> Polynomial:
        if self._h is None:
            B = self.ring
            h = self.f.to_ring(B)
            for fi, t in zip(self.fs, self.t_names):
                h = h + fi.to_ring(B) * B.gen(t)
            self._h = h
        return self._h

    def all_coefficients_zero(self) -> bool:
        return all(not g for g in self.fs)

    def __repr__(self):
        return f"ForcingData(({', '.join(map(str, self.fs))}; {self.f}) over {self.base})"


def _char_p_notes(d: ForcingData):
    p = d.field.characteristic
    if not p:
        return []
    for g in d.fs + (d.f,):
        for e, _ in g.items():
            if any(x and x % p == 0 for x in e):
                return [
                    f"characteristic {p}: an exponent is divisible by {p}, "
                    "so derivative ideals may collapse"
                ]
    return []


def forcing_equation(d: ForcingData) -> Polynomial:
    """h = f1*T1 + ... + fn*Tn + f in B."""
    return d.equation


def data_ideal(d: ForcingData) -> Ideal:
    """I = (f1, ..., fn, f) in the base ring."""
    return Ideal(d.base, [g for g in d.fs + (d.f,) if g])


def derivative_ideal(d: ForcingData) -> Ideal:
    """D = all first partials of the fi and of f, in the base ring."""
    gens = []
    for g in d.fs + (d.f,):
        for v in d.base.vars:
            dg = g.diff(v)
            if dg:
                gens.append(dg)
    return Ideal(d.base, gens)


def jacobian_ideal(d: ForcingData) -> Ideal:
    """J = (f, fi, sum_i dfi/dxj * Ti + df/dxj) in B; cuts out the singular locus."""
    B = d.ring
    gens = [g.to_ring(B) for g in (d.f,) + d.fs]
    for v in d.base.vars:
        row = d.f.diff(v).to_ring(B)
        for fi, t in zip(d.fs, d.t_names):
            row = row + fi.diff(v).to_ring(B) * B.gen(t)
        gens.append(row)
    return Ideal(B, [g for g in gens if g])


def _geq(c, bound):
    return c is UNIT or c >= bound


def is_domain(d: ForcingData) -> CriterionReport:
    """Integrity: A is a domain iff I = R or ht I >= 2 (needs some fi != 0)."""
    notes = _char_p_notes(d)
    if d.all_coefficients_zero():
        branch = "zero equation: A = B" if not d.f else "all f_i = 0: criterion not applicable"
        return CriterionReport(Verdict.DEGENERATE, branch, {}, notes)
    c = codimension(data_ideal(d))
    if c is UNIT:
        return CriterionReport(Verdict.YES, "I = R", {"codim_I": c}, notes)
    if c >= 2:
        return CriterionReport(Verdict.YES, "ht I >= 2", {"codim_I": c}, notes)
    notes.append("h has a non-unit factor from the base ring")
    return CriterionReport(Verdict.NO, "ht I <= 1", {"codim_I": c}, notes)


def is_irreducible(d: ForcingData) -> CriterionReport:
    """Sufficient condition only: ht(f, f1..fn) >= 2 forces a single component."""
    notes = _char_p_notes(d)
    if not d.equation:
        return CriterionReport(Verdict.DEGENERATE, "zero equation: A = B", {}, notes)
    c = codimension(data_ideal(d))
    w = {"codim_I": c}
    if c is UNIT:
        if d.all_coefficients_zero():
            notes.append("h is a nonzero constant, so A = 0")
            return CriterionReport(Verdict.DEGENERATE, "A = 0", w, notes)
        notes.append("no vertical components: only the horizontal component remains")
        return CriterionReport(Verdict.PROVEN_YES, "I = R", w, notes)
    if c >= 2:
        return CriterionReport(Verdict.PROVEN_YES, "ht I >= 2", w, notes)
    notes.append("ht I <= 1: the sufficient condition does not apply")
    return CriterionReport(Verdict.INCONCLUSIVE, "hypothesis fails", w, notes)


def is_normal(d: ForcingData) -> CriterionReport:
    """Normal-domain test over a polynomial base ring.

    (a) codim(I) >= 2 or I = R, and (b) codim(I + D) > 2 or I + D = R.
    With every fi = 0 only (b) is evaluated and it decides normality of the
    ring A (which need not be a domain).
    """
    notes = _char_p_notes(d)
    if not d.equation:
        notes.append("A = B is a polynomial ring")
        return CriterionReport(Verdict.YES, "zero equation: A = B", {}, notes)
    I = data_ideal(d)
    c_i = codimension(I)
    c_id = codimension(I + derivative_ideal(d))
    w = {"codim_I": c_i, "codim_I_plus_D": c_id}
    cond_a = _geq(c_i, 2)
    cond_b = c_id is UNIT or c_id > 2
    if d.all_coefficients_zero():
        notes.append("all f_i = 0: verdict concerns normality of the ring A, not integrity")
        if c_i is UNIT:
            notes.append("f is a unit, so A = 0")
        verdict = Verdict.YES if cond_b else Verdict.NO
        return CriterionReport(verdict, "homogeneous: normal ring", w, notes)
    if cond_a and cond_b:
        return CriterionReport(Verdict.YES, "(a) and (b) hold", w, notes)
    if not cond_a and not cond_b:
        branch = "(a) and (b) fail"
    elif not cond_a:
        branch = "(a) fails"
    else:
        branch = "(b) fails"
    return CriterionReport(Verdict.NO, branch, w, notes)


def jacobian_normality(d: ForcingData) -> CriterionReport:
    """Normality of the ring A read off the Jacobian ideal directly:
    codim(J, B) >= 3 or J = B."""
    notes = _char_p_notes(d)
    if not d.equation:
        return CriterionReport(Verdict.DEGENERATE, "zero equation: A = B", {}, notes)
    c = codimension(jacobian_ideal(d))
    w = {"codim_J": c}
    if c is UNIT:
        return CriterionReport(Verdict.YES, "J = B", w, notes)
    if c >= 3:
        return CriterionReport(Verdict.YES, "codim J >= 3", w, notes)
    return CriterionReport(Verdict.NO, "codim J <= 2", w, notes)


def is_surjective(d: ForcingData) -> bool:
    """The forcing morphism is surjective iff f lies in rad(f1, ..., fn)."""
    return radical_membership(d.f, Ideal(d.base, d.fs))


def has_section(d: ForcingData) -> bool:
    """A section of the forcing morphism exists iff f lies in (f1, ..., fn)."""
    return membership(d.f, Ideal(d.base, d.fs))


def _rational_point(base: PolyRing, point: dict) -> dict:
    missing = [v for v in base.vars if v not in point]
    if missing:
        raise ValueError(f"point does not assign {', '.join(missing)}")
    extra = [v for v in point if v not in base.vars]
    if extra:
        raise ValueError(f"point assigns unknown variables {', '.join(extra)}")
    return {v: base.field(point[v]) for v in base.vars}


def fiber(d: ForcingData, point: dict) -> FiberDescription:
    """Fiber over a rational point: empty or affine space of dimension n - rank."""
    pt = _rational_point(d.base, point)
    coeffs = tuple(g.evaluate(pt) for g in d.fs)
    const = d.f.evaluate(pt)
    rank = 1 if any(coeffs) else 0
    row = (coeffs + (const,),)
    if rank == 0 and const:
        return FiberDescription("Empty", None, 0, row)
    return FiberDescription("AffineSpace", d.n - rank, rank, row)


def fiber_completely_singular(d: ForcingData, point: dict) -> bool:
    """Whether the whole (nonempty) fiber lies in the singular locus, i.e. the
    point lies on V(I + D)."""
    pt = _rational_point(d.base, point)
    if fiber(d, pt).is_empty:
        raise HypothesisError("the fiber over this point is empty")
    gens = data_ideal(d).gens + derivative_ideal(d).gens
    return all(not g.evaluate(pt) for g in gens)


def horizontal_component(d: ForcingData) -> Ideal:
    """Prime of the component dominating the base: h with its base content removed.

    Vertical components sit over minimal primes of the data ideal and are not
    enumerated.
    """
    h = d.equation
    if not h:
        raise ValueError("the zero equation has no horizontal component")
    if d.all_coefficients_zero():
        # no forcing coefficients: nothing dominates, keep (f) as is
        return Ideal(d.ring, [h])
    content = content_wrt_block(h, d.t_names)
    return Ideal(d.ring, [h.exact_div(content)])
