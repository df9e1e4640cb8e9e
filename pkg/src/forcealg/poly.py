"""Sparse multivariate polynomials over an exact field.

A :class:`Polynomial` maps exponent tuples to nonzero field elements. Two
polynomials are equal exactly when their term maps are identical, so
equality and hashing are structural. Display and :attr:`Polynomial.terms`
use GrevLex-descending order; algorithms pick their own order.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field
from operator import add

from .field import Field
from .orders import GREVLEX, MonomialOrder

__all__ = [
    "PolyRing",
    "Polynomial",
    "ParseError",
    "RingMismatchError",
    "MAX_EXPONENT",
    "monomial_divides",
    "monomial_lcm",
]

MAX_EXPONENT = 2**63 - 1

_VAR_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")
_RESERVED_RE = re.compile(r"__[a-z]+[0-9]*\Z")


class RingMismatchError(ValueError):
    pass


class ParseError(ValueError):
    def __init__(self, message, position=None, text=None):
        self.position = position
        self.text = text
        where = f" at position {position}" if position is not None else ""
        super().__init__(f"{message}{where}")


def monomial_divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def monomial_lcm(a, b):
    return tuple(x if x >= y else y for x, y in zip(a, b))


def _check_exponent(e):
    if e > MAX_EXPONENT:
        raise OverflowError(f"exponent {e} exceeds the machine-word limit")


@dataclass(frozen=True)
class PolyRing:
    """k[vars]. ``block_split`` marks the first ``block_split`` variables as
    the base block (x's) and the rest as forcing variables (T's)."""

    field: Field
    vars: tuple
    block_split: int | None = dc_field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "vars", tuple(self.vars))
        if len(set(self.vars)) != len(self.vars):
            raise ValueError(f"duplicate variable names in {self.vars}")
        for v in self.vars:
            if not (_VAR_RE.match(v) or _RESERVED_RE.match(v)):
                raise ValueError(f"invalid variable name {v!r}")
        if self.block_split is not None and not 0 <= self.block_split <= len(self.vars):
            raise ValueError("block_split out of range")
        object.__setattr__(self, "_index", {v: i for i, v in enumerate(self.vars)})

    @property
    def nvars(self) -> int:
        return len(self.vars)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise ValueError(f"unknown variable {name!r} in ring {self}") from None

    @property
    def base_vars(self):
        return self.vars if self.block_split is None else self.vars[: self.block_split]

    @property
    def forcing_vars(self):
        return () if self.block_split is None else self.vars[self.block_split :]

    def __str__(self):
        return f"{self.field.name}[{', '.join(self.vars)}]"

    # -- element construction -------------------------------------------------

    def zero(self) -> Polynomial:
        return Polynomial(self)

    def one(self) -> Polynomial:
        return self.constant(1)

    def constant(self, c) -> Polynomial:
        return Polynomial(self, {(0,) * self.nvars: c})

    def gen(self, name: str) -> Polynomial:
        exps = [0] * self.nvars
        exps[self.index(name)] = 1
        return Polynomial._make(self, {tuple(exps): self.field.one})

    def gens(self):
        return tuple(self.gen(v) for v in self.vars)

    def __call__(self, value) -> Polynomial:
        if isinstance(value, Polynomial):
            return value.to_ring(self)
        if isinstance(value, str):
            return self.parse(value)
        return self.constant(value)

    def parse(self, text: str) -> Polynomial:
        return _Parser(text, self).parse()

    # -- ring extension -------------------------------------------------------

    def fresh_names(self, stem: str, count: int = 1):
        """Reserved auxiliary names (``__z``, ``__z1``, ...) absent from the ring."""
        names, i = [], 0
        while len(names) < count:
            cand = f"__{stem}" if i == 0 else f"__{stem}{i}"
            if cand not in self._index:
                names.append(cand)
            i += 1
        return names

    def extend(self, names, front: bool = True) -> PolyRing:
        names = tuple(names)
        new_vars = names + self.vars if front else self.vars + names
        return PolyRing(self.field, new_vars)


class Polynomial:
    """An immutable sparse polynomial in a :class:`PolyRing`."""

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: PolyRing, terms=None):
        F = ring.field
        clean = {}
        if terms:
            n = ring.nvars
            for exps, c in dict(terms).items():
                exps = tuple(int(e) for e in exps)
                if len(exps) != n or any(e < 0 for e in exps):
                    raise ValueError(f"bad exponent vector {exps} for {ring}")
                for e in exps:
                    _check_exponent(e)
                c = F(c)
                if c:
                    clean[exps] = c
        self.ring = ring
        self._terms = clean
        self._hash = None

    @classmethod
    def _make(cls, ring, terms):
        # trusted: coefficients already reduced and nonzero
        p = object.__new__(cls)
        p.ring = ring
        p._terms = terms
        p._hash = None
        return p

    # -- inspection -----------------------------------------------------------

    @property
    def field(self) -> Field:
        return self.ring.field

    def items(self):
        return self._terms.items()

    def as_dict(self) -> dict:
        return dict(self._terms)

    @property
    def terms(self):
        """``[(exps, coeff), ...]`` sorted GrevLex-descending."""
        return sorted(self._terms.items(), key=lambda t: GREVLEX.key(t[0]), reverse=True)

    def coefficient(self, exps):
        return self._terms.get(tuple(exps), self.field.zero)

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def is_constant(self) -> bool:
        zero = (0,) * self.ring.nvars
        return not self._terms or (len(self._terms) == 1 and zero in self._terms)

    def constant_value(self):
        return self._terms.get((0,) * self.ring.nvars, self.field.zero)

    @property
    def total_degree(self) -> int:
        """Maximum term degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def degree(self, var: str) -> int:
        i = self.ring.index(var)
        return max((e[i] for e in self._terms), default=-1)

    def support(self):
        """Names of the variables that actually occur."""
        used = [False] * self.ring.nvars
        for exps in self._terms:
            for i, e in enumerate(exps):
                if e:
                    used[i] = True
        return tuple(v for v, u in zip(self.ring.vars, used) if u)

    def leading(self, order: MonomialOrder = GREVLEX):
        """``(exps, coeff)`` of the leading term; raises on zero."""
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self._terms, key=order.key)
        return m, self._terms[m]

    def leading_monomial(self, order: MonomialOrder = GREVLEX):
        return self.leading(order)[0]

    def monic(self, order: MonomialOrder = GREVLEX) -> Polynomial:
        if not self._terms:
            return self
        _, lc = self.leading(order)
        return self.scale(self.field.inv(lc))

    # -- arithmetic -----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring is not self.ring and other.ring != self.ring:
                raise RingMismatchError(f"{self.ring} vs {other.ring}")
            return other
        try:
            return self.ring.constant(other)
        except TypeError:
            return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.field.characteristic
        res = dict(self._terms)
        for e, c in other._terms.items():
            v = res.get(e, 0) + c
            if p:
                v %= p
            if v:
                res[e] = v
            else:
                res.pop(e, None)
        return Polynomial._make(self.ring, res)

    __radd__ = __add__

    def __neg__(self):
        p = self.field.characteristic
        if p:
            return Polynomial._make(self.ring, {e: p - c for e, c in self._terms.items()})
        return Polynomial._make(self.ring, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.field.characteristic
        res = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(map(add, e1, e2))
                res[e] = res.get(e, 0) + c1 * c2
        if p:
            res = {e: c % p for e, c in res.items()}
        return Polynomial._make(self.ring, {e: c for e, c in res.items() if c})

    __rmul__ = __mul__

    def scale(self, c) -> Polynomial:
        c = self.field(c)
        if not c:
            return self.ring.zero()
        p = self.field.characteristic
        if p:
            return Polynomial._make(self.ring, {e: v * c % p for e, v in self._terms.items()})
        return Polynomial._make(self.ring, {e: v * c for e, v in self._terms.items()})

    def mul_monomial(self, exps, c=1) -> Polynomial:
        return Polynomial._make(
            self.ring, {tuple(map(add, e, exps)): v for e, v in self._terms.items()}
        ).scale(c)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        if self.is_constant() or len(self._terms) == 1:
            # monomial fast path, also guards exponent overflow
            if not self._terms:
                return self.ring.one() if k == 0 else self
            (e, c), = self._terms.items()
            for x in e:
                _check_exponent(x * k)
            return Polynomial(self.ring, {tuple(x * k for x in e): c**k})
        _check_exponent(self.total_degree * k)
        result, base = self.ring.one(), self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def exact_div(self, other: Polynomial) -> Polynomial:
        """Quotient ``self / other``; raises ValueError if it leaves a remainder."""
        other = self._coerce(other)
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        q, r = _divide_single(self, other)
        if r:
            raise ValueError(f"{other} does not divide {self}")
        return q

    # -- calculus, evaluation, substitution -----------------------------------

    def diff(self, var: str) -> Polynomial:
        """Formal partial derivative; in characteristic p, p | e kills the term."""
        i = self.ring.index(var)
        p = self.field.characteristic
        res = {}
        for e, c in self._terms.items():
            k = e[i]
            if k == 0:
                continue
            v = c * k
            if p:
                v %= p
            if v:
                res[e[:i] + (k - 1,) + e[i + 1 :]] = v
        return Polynomial._make(self.ring, res)

    def evaluate(self, point: dict, partial: bool = False):
        """Substitute field values for variables.

        Returns a field element when every variable is assigned; with
        ``partial=True`` returns a polynomial in the unassigned variables.
        """
        ring, F = self.ring, self.field
        values = {}
        for name, v in point.items():
            values[ring.index(name)] = F(v)
        if not partial:
            missing = [v for i, v in enumerate(ring.vars) if i not in values]
            if missing:
                raise ValueError(f"no value assigned to {', '.join(missing)}")
        p = F.characteristic
        res = {}
        for e, c in self._terms.items():
            v = c
            rest = list(e)
            for i, x in values.items():
                if e[i]:
                    v = v * values[i] ** e[i]
                    rest[i] = 0
            if p:
                v %= p
            rest = tuple(rest)
            res[rest] = res.get(rest, 0) + v
        if p:
            res = {k: c % p for k, c in res.items()}
        poly = Polynomial._make(ring, {k: c for k, c in res.items() if c})
        return poly if partial else poly.constant_value()

    def substitute(self, mapping: dict) -> Polynomial:
        """Replace variables by polynomials of the same ring (simultaneously)."""
        ring = self.ring
        images = {}
        for name, val in mapping.items():
            images[ring.index(name)] = val if isinstance(val, Polynomial) else ring.constant(val)
        for img in images.values():
            self._coerce(img)
        powers = {}

        def power(i, k):
            key = (i, k)
            if key not in powers:
                powers[key] = images[i] ** k
            return powers[key]

        result = ring.zero()
        for e, c in self._terms.items():
            kept = tuple(0 if i in images else x for i, x in enumerate(e))
            term = Polynomial._make(ring, {kept: c})
            for i, x in enumerate(e):
                if x and i in images:
                    term = term * power(i, x)
            result = result + term
        return result

    def to_ring(self, target: PolyRing) -> Polynomial:
        """Re-express in ``target`` by matching variable names."""
        if target is self.ring:
            return self
        if target.field != self.field:
            raise RingMismatchError(f"field {self.field} vs {target.field}")
        src = self.ring.vars
        pos = []
        for i, name in enumerate(src):
            pos.append(target._index.get(name))
        n = target.nvars
        res = {}
        for e, c in self._terms.items():
            new = [0] * n
            for i, x in enumerate(e):
                if x:
                    j = pos[i]
                    if j is None:
                        raise RingMismatchError(f"variable {src[i]!r} not in {target}")
                    new[j] = x
            res[tuple(new)] = c
        return Polynomial._make(target, res)

    # -- comparison and display -----------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring.vars, frozenset(self._terms.items())))
        return self._hash

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r}, {self.ring})"


def _divide_single(f: Polynomial, g: Polynomial, order: MonomialOrder = GREVLEX):
    """Multivariate division by one polynomial: returns (quotient, remainder)."""
    F = f.field
    p = F.characteristic
    key = order.key
    glm, glc = g.leading(order)
    ginv = F.inv(glc)
    gterms = list(g._terms.items())
    work = dict(f._terms)
    quot, rem = {}, {}
    while work:
        m = max(work, key=key)
        c = work[m]
        if monomial_divides(glm, m):
            shift = tuple(a - b for a, b in zip(m, glm))
            coef = c * ginv
            if p:
                coef %= p
            quot[shift] = coef
            for e, gc in gterms:
                t = tuple(map(add, e, shift))
                v = work.get(t, 0) - coef * gc
                if p:
                    v %= p
                if v:
                    work[t] = v
                else:
                    work.pop(t, None)
        else:
            rem[m] = c
            del work[m]
    return Polynomial._make(f.ring, quot), Polynomial._make(f.ring, rem)


# -- text I/O -------------------------------------------------------------------


def _format_monomial(exps, names):
    parts = []
    for name, e in zip(names, exps):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_polynomial(f: Polynomial) -> str:
    if not f._terms:
        return "0"
    names = f.ring.vars
    out = []
    for exps, c in f.terms:
        mono = _format_monomial(exps, names)
        if not mono:
            s = str(c)
        elif c == 1:
            s = mono
        elif c == -1:
            s = "-" + mono
        else:
            s = f"{c}*{mono}"
        if not out:
            out.append(s)
        elif s.startswith("-"):
            out.append(" - " + s[1:])
        else:
            out.append(" + " + s)
    return "".join(out)


class _Parser:
    # expr   := sign? term (('+'|'-') term)*
    # term   := coeff? ('*'? factor)*      (coeff or at least one factor)
    # factor := var ('^' uint)?
    # coeff  := uint ('/' uint)?

    _ident = re.compile(r"[A-Za-z][A-Za-z0-9_]*")
    _uint = re.compile(r"[0-9]+")

    def __init__(self, text, ring):
        if not isinstance(text, str):
            raise ParseError(f"expected a string, got {type(text).__name__}")
        self.text = text
        self.ring = ring
        self.pos = 0

    def _skip(self):
        t = self.text
        while self.pos < len(t) and t[self.pos].isspace():
            self.pos += 1

    def _peek(self):
        self._skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def _error(self, msg):
        raise ParseError(msg, self.pos, self.text)

    def _uint_token(self):
        self._skip()
        m = self._uint.match(self.text, self.pos)
        if not m:
            self._error("expected an unsigned integer")
        self.pos = m.end()
        return int(m.group())

    def parse(self) -> Polynomial:
        ring = self.ring
        result = {}
        F = ring.field
        sign = 1
        if self._peek() in "+-" and self._peek():
            sign = -1 if self._peek() == "-" else 1
            self.pos += 1
        while True:
            exps, c = self._term()
            c = F(c * sign)
            result[exps] = result.get(exps, F.zero) + c
            ch = self._peek()
            if ch == "":
                break
            if ch not in "+-":
                self._error(f"unexpected character {ch!r}")
            sign = -1 if ch == "-" else 1
            self.pos += 1
        return Polynomial(ring, result)

    def _term(self):
        from fractions import Fraction

        ring = self.ring
        exps = [0] * ring.nvars
        coeff = Fraction(1)
        seen = False
        ch = self._peek()
        if ch.isdigit():
            num = self._uint_token()
            if self._peek() == "/":
                self.pos += 1
                den = self._uint_token()
                if den == 0:
                    self._error("zero denominator")
                coeff = Fraction(num, den)
            else:
                coeff = Fraction(num)
            seen = True
        while True:
            ch = self._peek()
            if ch == "*":
                if not seen:
                    self._error("'*' needs a left operand")
                self.pos += 1
                ch = self._peek()
                if not (ch.isalpha()):
                    self._error("expected a variable after '*'")
            if not ch.isalpha() or not ch.isascii():
                break
            start = self.pos
            m = self._ident.match(self.text, self.pos)
            name = m.group()
            if name not in ring._index:
                raise ParseError(f"unknown variable {name!r}", start, self.text)
            self.pos = m.end()
            e = 1
            if self._peek() == "^":
                self.pos += 1
                e = self._uint_token()
                _check_exponent(e)
            exps[ring._index[name]] += e
            seen = True
        if not seen:
            self._error("expected a term")
        return tuple(exps), coeff
