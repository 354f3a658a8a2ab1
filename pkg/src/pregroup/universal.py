"""Exact arithmetic in the universal group of a pregroup.

Every group element is stored as the canonical form of its reduced words,
so equality and hashing are plain tuple comparisons.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .table import PregroupTable
from .words import Word, canonical_form, make_word, reduce_leftmost

__all__ = [
    "TableMismatch",
    "UElement",
    "u_embed",
    "u_identity",
    "u_from_word",
    "u_mul",
    "u_inv",
    "u_eq",
    "u_len",
]


class TableMismatch(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class UElement:
    table: PregroupTable
    word: Word

    def _check(self, other: "UElement") -> None:
        if self.table is not other.table and self.table != other.table:
            raise TableMismatch("elements belong to different pregroups")

    def __eq__(self, other) -> bool:
        if not isinstance(other, UElement):
            return NotImplemented
        self._check(other)
        return self.word == other.word

    def __hash__(self) -> int:
        return hash(self.word)

    def __mul__(self, other: "UElement") -> "UElement":
        return u_mul(self, other)

    def __invert__(self) -> "UElement":
        return u_inv(self)

    def __len__(self) -> int:
        return len(self.word)

    def __repr__(self) -> str:
        return f"UElement({self.table.show(self.word)!r})"


def u_from_word(t: PregroupTable, w: Sequence[int]) -> UElement:
    return UElement(t, canonical_form(t, reduce_leftmost(t, make_word(w))))


def u_embed(t: PregroupTable, x: int) -> UElement:
    return UElement(t, (x,))


def u_identity(t: PregroupTable) -> UElement:
    return UElement(t, (t.identity,))


def u_mul(g: UElement, h: UElement) -> UElement:
    g._check(h)
    return u_from_word(g.table, g.word + h.word)


def u_inv(g: UElement) -> UElement:
    t = g.table
    # inverses of a reduced word, reversed, stay reduced by the axiom (xy)^-1 = y^-1 x^-1
    return UElement(t, canonical_form(t, tuple(t.inv(x) for x in reversed(g.word))))


def u_eq(g: UElement, h: UElement) -> bool:
    return g == h


def u_len(g: UElement) -> int:
    return len(g.word)
