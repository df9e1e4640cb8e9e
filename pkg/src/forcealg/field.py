"""Exact coefficient fields: the rationals and prime fields GF(p).

Elements are plain numbers. Rationals are ``gmpy2.mpq`` (always in lowest
terms); residues mod p are Python ints in ``[0, p)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

import gmpy2

__all__ = ["Field", "QQ", "GF"]


@dataclass(frozen=True)
class Field:
    """A perfect coefficient field: characteristic 0 means QQ, otherwise GF(p)."""

    characteristic: int = 0

    def __post_init__(self):
        p = self.characteristic
        if p < 0 or (p and not gmpy2.is_prime(p)):
            raise ValueError(f"GF(p) requires a prime p, got {p}")

    @property
    def is_rational(self) -> bool:
        return self.characteristic == 0

    @property
    def name(self) -> str:
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"

    def __repr__(self):
        return self.name

    # -- element construction -------------------------------------------------

    def __call__(self, value):
        """Coerce an int, Fraction, mpq, or ``"a/b"`` string into the field."""
        p = self.characteristic
        if isinstance(value, str):
            value = Fraction(value.strip())
        if isinstance(value, bool):
            value = int(value)
        if p == 0:
            if isinstance(value, (int, Rational)) or type(value).__name__ in ("mpz", "mpq"):
                return gmpy2.mpq(value)
            raise TypeError(f"cannot coerce {value!r} into QQ")
        if isinstance(value, int) or type(value).__name__ == "mpz":
            return int(value) % p
        num, den = int(value.numerator), int(value.denominator)
        if den % p == 0:
            raise ZeroDivisionError(f"denominator {den} vanishes in GF({p})")
        return num * pow(den, -1, p) % p

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    # -- arithmetic helpers (hot loops inline the char-p reduction instead) ---

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        p = self.characteristic
        if p == 0:
            return 1 / gmpy2.mpq(a)
        return pow(int(a), -1, p)

    def div(self, a, b):
        p = self.characteristic
        if p == 0:
            return gmpy2.mpq(a) / b
        return a * self.inv(b) % p

    def neg(self, a):
        p = self.characteristic
        return (-a) % p if p else -a

    def to_json(self):
        return "QQ" if self.characteristic == 0 else {"GF": self.characteristic}

    def format_scalar(self, a) -> str:
        return str(a)


QQ = Field(0)


def GF(p: int) -> Field:
    return Field(int(p))
