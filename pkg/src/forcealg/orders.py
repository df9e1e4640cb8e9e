"""Monomial orders on exponent tuples.

Each order exposes ``key(exps)``: a sort key such that a larger key means a
larger monomial. Orders are frozen dataclasses so they can key caches.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = ["MonomialOrder", "Lex", "GrevLex", "BlockElim", "LEX", "GREVLEX"]


def _grevlex_key(exps):
    return (sum(exps), tuple(-e for e in reversed(exps)))


class MonomialOrder:
    """Base class; subclasses implement :meth:`key`."""

    def key(self, exps):
        raise NotImplementedError

    def less(self, a, b) -> bool:
        return self.key(a) < self.key(b)

    def max(self, monomials):
        return max(monomials, key=self.key)


@dataclass(frozen=True)
class Lex(MonomialOrder):
    def key(self, exps):
        return exps

    def __str__(self):
        return "lex"


@dataclass(frozen=True)
class GrevLex(MonomialOrder):
    def key(self, exps):
        return _grevlex_key(exps)

    def __str__(self):
        return "grevlex"


@dataclass(frozen=True)
class BlockElim(MonomialOrder):
    """Two GrevLex blocks; the first ``k`` variables are eliminated.

    Any monomial containing one of the first ``k`` variables is larger than
    every monomial free of them.
    """

    k: int

    def key(self, exps):
        k = self.k
        return (_grevlex_key(exps[:k]), _grevlex_key(exps[k:]))

    def __str__(self):
        return f"block-elim({self.k})"


LEX = Lex()
GREVLEX = GrevLex()
