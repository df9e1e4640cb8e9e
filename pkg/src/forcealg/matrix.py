"""Forcing algebras with several equations: M * (T1..Tn)^t + (f1..fm)^t.

Row operations keep the forcing ideal; column operations change it by an
affine-linear automorphism of B, which is returned alongside the new matrix.
"""

from __future__ import annotations

from dataclasses import dataclass

from .forcing import CriterionReport, FiberDescription, ForcingData, Verdict, _rational_point
from .ideal import UNIT, Ideal, codimension, ideal_quotient, membership
from .poly import PolyRing, Polynomial

__all__ = [
    "ForcingMatrix",
    "RowSwap",
    "RowScale",
    "RowAdd",
    "ColSwap",
    "ColScale",
    "ColAdd",
    "forcing_ideal",
    "row_op",
    "col_op",
    "determinant",
    "fitting_ideal",
    "is_regular_sequence",
    "regular_sequence_necessary_check",
    "adjoint_membership_check",
    "matrix_fiber",
    "rank_over_field",
]


class ForcingMatrix:
    """An m x n matrix of base-ring polynomials plus an inhomogeneous vector."""

    def __init__(self, base: PolyRing, entries, vec=None, t_names=None):
        self.base = base
        rows = [tuple(self._coerce(e) for e in row) for row in entries]
        if not rows:
            raise ValueError("a forcing matrix needs at least one row")
        n = len(rows[0])
        if any(len(r) != n for r in rows):
            raise ValueError("forcing matrix rows have different lengths")
        self.entries = tuple(rows)
        if vec is None:
            vec = [base.zero()] * len(rows)
        self.vec = tuple(self._coerce(v) for v in vec)
        if len(self.vec) != len(rows):
            raise ValueError("inhomogeneous vector length differs from the row count")
        if t_names is None:
            t_names = tuple(f"T{j + 1}" for j in range(n))
        self.t_names = tuple(t_names)
        if len(self.t_names) != n:
            raise ValueError(f"{n} columns but {len(self.t_names)} forcing variables")
        if set(self.t_names) & set(base.vars):
            raise ValueError("forcing variables clash with base variables")
        self.ring = PolyRing(base.field, base.vars + self.t_names, block_split=base.nvars)

    def _coerce(self, g):
        if isinstance(g, Polynomial):
            if g.ring != self.base:
                raise ValueError(f"{g} does not live in the base ring {self.base}")
            return g
        return self.base(g)

    @classmethod
    def from_forcing_data(cls, d: ForcingData) -> ForcingMatrix:
        return cls(d.base, [d.fs], [d.f], d.t_names)

    @property
    def shape(self):
        return len(self.entries), len(self.entries[0])

    @property
    def m(self) -> int:
        return len(self.entries)

    @property
    def n(self) -> int:
        return len(self.entries[0])

    def is_homogeneous(self) -> bool:
        return all(not v for v in self.vec)

    def equations(self):
        B = self.ring
        ts = [B.gen(t) for t in self.t_names]
        out = []
        for row, v in zip(self.entries, self.vec):
            h = v.to_ring(B)
            for e, t in zip(row, ts):
                h = h + e.to_ring(B) * t
            out.append(h)
        return out

    def _replace(self, entries, vec):
        return ForcingMatrix(self.base, entries, vec, self.t_names)

    def __repr__(self):
        rows = "; ".join(", ".join(map(str, r)) for r in self.entries)
        return f"ForcingMatrix([{rows}] | [{', '.join(map(str, self.vec))}])"


# -- elementary operations --------------------------------------------------------


@dataclass(frozen=True)
class RowSwap:
    i: int
    j: int


@dataclass(frozen=True)
class RowScale:
    """Row i times a unit c."""

    i: int
    c: object


@dataclass(frozen=True)
class RowAdd:
    """Row ``target`` += c * row ``source`` for any c in the base ring."""

    target: int
    source: int
    c: object = 1


@dataclass(frozen=True)
class ColSwap:
    i: int
    j: int


@dataclass(frozen=True)
class ColScale:
    i: int
    c: object


@dataclass(frozen=True)
class ColAdd:
    """Column ``target`` += c * column ``source``."""

    target: int
    source: int
    c: object = 1


def _unit_scalar(M, c):
    c = c if isinstance(c, Polynomial) else M.base(c)
    if not c.is_constant() or not c:
        raise ValueError(f"scale factor {c} is not a unit of the base ring")
    return c


def _ring_elem(M, c):
    return c if isinstance(c, Polynomial) else M.base(c)


def row_op(M: ForcingMatrix, op) -> ForcingMatrix:
    rows = [list(r) for r in M.entries]
    vec = list(M.vec)
    if isinstance(op, RowSwap):
        rows[op.i], rows[op.j] = rows[op.j], rows[op.i]
        vec[op.i], vec[op.j] = vec[op.j], vec[op.i]
    elif isinstance(op, RowScale):
        c = _unit_scalar(M, op.c)
        rows[op.i] = [e * c for e in rows[op.i]]
        vec[op.i] = vec[op.i] * c
    elif isinstance(op, RowAdd):
        if op.target == op.source:
            raise ValueError("row addition needs two distinct rows")
        c = _ring_elem(M, op.c)
        rows[op.target] = [a + c * b for a, b in zip(rows[op.target], rows[op.source])]
        vec[op.target] = vec[op.target] + c * vec[op.source]
    else:
        raise TypeError(f"not a row operation: {op!r}")
    return M._replace(rows, vec)


def col_op(M: ForcingMatrix, op):
    """Apply a column operation.

    Returns ``(new_matrix, substitution)``. The substitution maps forcing
    variables to linear forms; the automorphism of B it induces sends each old
    forcing equation to the corresponding new one.
    """
    B = M.ring
    T = M.t_names
    rows = [list(r) for r in M.entries]
    if isinstance(op, ColSwap):
        for r in rows:
            r[op.i], r[op.j] = r[op.j], r[op.i]
        subst = {T[op.i]: B.gen(T[op.j]), T[op.j]: B.gen(T[op.i])}
    elif isinstance(op, ColScale):
        c = _unit_scalar(M, op.c)
        for r in rows:
            r[op.i] = r[op.i] * c
        # old f*T_i becomes (c*f)*T_i under T_i -> c*T_i
        subst = {T[op.i]: B.gen(T[op.i]).scale(c.constant_value())}
    elif isinstance(op, ColAdd):
        if op.target == op.source:
            raise ValueError("column addition needs two distinct columns")
        c = _ring_elem(M, op.c)
        for r in rows:
            r[op.target] = r[op.target] + c * r[op.source]
        # T_source -> T_source + c*T_target
        subst = {T[op.source]: B.gen(T[op.source]) + c.to_ring(B) * B.gen(T[op.target])}
    else:
        raise TypeError(f"not a column operation: {op!r}")
    return M._replace(rows, M.vec), subst


# -- ideals -----------------------------------------------------------------------------


def forcing_ideal(M: ForcingMatrix) -> Ideal:
    """H = (h1, ..., hm) with hi = sum_j f_ij T_j + f_i."""
    return Ideal(M.ring, M.equations())


def determinant(rows) -> Polynomial:
    """Cofactor expansion along the first row (exact, no division)."""
    k = len(rows)
    if k == 1:
        return rows[0][0]
    total = None
    for j, a in enumerate(rows[0]):
        if not a:
            continue
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        term = a * determinant(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    if total is None:
        return rows[0][0].ring.zero()
    return total


def minors(M: ForcingMatrix, j: int):
    from itertools import combinations

    out = []
    for rs in combinations(range(M.m), j):
        for cs in combinations(range(M.n), j):
            sub = [[M.entries[r][c] for c in cs] for r in rs]
            out.append(determinant(sub))
    return out


def fitting_ideal(M: ForcingMatrix, j: int) -> Ideal:
    """Ideal of the j x j minors of the coefficient matrix, in the base ring."""
    if not 1 <= j <= min(M.shape):
        raise ValueError(f"minor size {j} outside 1..{min(M.shape)}")
    return Ideal(M.base, [d for d in minors(M, j) if d])


# -- regular sequences ---------------------------------------------------------------


def _colon_chain_is_regular(H):
    """Each h_k is a nonzerodivisor modulo (h_1..h_{k-1}) and H is proper."""
    ring = H.ring
    for k, h in enumerate(H.gens):
        prev = Ideal(ring, H.gens[:k])
        if not ideal_quotient(prev, h) == prev:
            return False
    return not H.is_unit()


def is_regular_sequence(M: ForcingMatrix) -> CriterionReport:
    """Yes iff codim(H) = m, the number of forcing equations.

    Also runs the order-sensitive colon-ideal check and records whether it
    agrees.
    """
    H = forcing_ideal(M)
    m = M.m
    if any(not h for h in H.gens):
        return CriterionReport(Verdict.DEGENERATE, "some h_i = 0", {"m": m}, [])
    c = codimension(H)
    w = {"codim_H": c, "m": m}
    notes = []
    if c is UNIT:
        return CriterionReport(Verdict.NO, "H = B", w, ["the equations generate the unit ideal"])
    colon = _colon_chain_is_regular(H)
    verdict = Verdict.YES if c == m else Verdict.NO
    branch = "codim H = m" if c == m else "codim H < m"
    if colon != (verdict is Verdict.YES):
        notes.append(
            "colon-ideal check in the given order disagrees: "
            + ("sequence is regular" if colon else "sequence is not regular in this order")
        )
    else:
        notes.append("colon-ideal check in the given order agrees")
    return CriterionReport(verdict, branch, w, notes)


def regular_sequence_necessary_check(M: ForcingMatrix) -> CriterionReport:
    """Necessary condition for a homogeneous regular sequence: m <= n and the
    top Fitting ideal is nonzero. Never a proof of regularity."""
    m, n = M.shape
    k = min(m, n)
    notes = ["a regular sequence of m homogeneous equations in n forcing variables needs m <= n"]
    if not M.is_homogeneous():
        return CriterionReport(
            Verdict.DEGENERATE, "inhomogeneous data", {"m": m, "n": n}, notes
        )
    fit_nonzero = not fitting_ideal(M, k).is_zero()
    w = {"m": m, "n": n, "fitting_size": k, "fitting_nonzero": int(fit_nonzero)}
    if m > n:
        return CriterionReport(Verdict.NO, "m > n", w, notes)
    if not fit_nonzero:
        return CriterionReport(Verdict.NO, "top Fitting ideal is zero", w, notes)
    notes.append("necessary condition only; regularity is not implied")
    return CriterionReport(Verdict.YES, "necessary condition holds", w, notes)


def adjoint_membership_check(M: ForcingMatrix) -> bool:
    """det(M) * T_i lies in the forcing ideal for every i (square, homogeneous)."""
    if M.m != M.n:
        raise ValueError("adjoint check needs a square matrix")
    if not M.is_homogeneous():
        raise ValueError("adjoint check needs homogeneous data")
    H = forcing_ideal(M)
    det = determinant([list(r) for r in M.entries]).to_ring(M.ring)
    return all(membership(det * M.ring.gen(t), H) for t in M.t_names)


# -- fibers --------------------------------------------------------------------------------


def rank_over_field(rows, F) -> int:
    """Rank of a matrix of field elements by Gaussian elimination."""
    A = [list(r) for r in rows]
    if not A:
        return 0
    p = F.characteristic
    rank = 0
    ncols = len(A[0])
    for col in range(ncols):
        piv = next((i for i in range(rank, len(A)) if A[i][col]), None)
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        inv = F.inv(A[rank][col])
        for i in range(len(A)):
            if i != rank and A[i][col]:
                factor = A[i][col] * inv
                A[i] = [a - factor * b for a, b in zip(A[i], A[rank])]
                if p:
                    A[i] = [a % p for a in A[i]]
        rank += 1
    return rank


def matrix_fiber(M: ForcingMatrix, point: dict) -> FiberDescription:
    """Solve the evaluated linear system: empty, or affine space of dim n - rank."""
    pt = _rational_point(M.base, point)
    F = M.base.field
    coeffs = [[e.evaluate(pt) for e in row] for row in M.entries]
    consts = [v.evaluate(pt) for v in M.vec]
    aug = [row + [c] for row, c in zip(coeffs, consts)]
    r = rank_over_field(coeffs, F)
    r_aug = rank_over_field(aug, F)
    residue = tuple(tuple(row) for row in aug)
    if r_aug > r:
        return FiberDescription("Empty", None, r, residue)
    return FiberDescription("AffineSpace", M.n - r, r, residue)
