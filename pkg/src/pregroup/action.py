"""Left action of pregroup elements on reduced words (van der Waerden's device)."""

from __future__ import annotations

from typing import Sequence

from .table import PregroupTable
from .words import Word, _require_reduced, make_word

__all__ = ["base_word", "act_case", "act", "lambda_fold"]


def base_word(t: PregroupTable) -> Word:
    return (t.identity,)


def act_case(t: PregroupTable, a: int, x: Sequence[int]) -> int:
    """Which of the three defining cases applies to ``act(t, a, x)``.

    1: a x_1 undefined (prepend); 2: a x_1 defined but not (a x_1) x_2, or
    x has length one (replace head); 3: both defined (fuse first two).
    """
    if not t.is_defined(a, x[0]):
        return 1
    if len(x) == 1 or not t.is_defined(t.mul(a, x[0]), x[1]):
        return 2
    return 3


def act(t: PregroupTable, a: int, x: Sequence[int]) -> Word:
    """Apply the action of ``a`` to the reduced word ``x``; the result is reduced."""
    x = tuple(x)
    _require_reduced(t, x)
    case = act_case(t, a, x)
    if case == 1:
        return (a,) + x
    ax = t.mul(a, x[0])
    if case == 2:
        return (ax,) + x[1:]
    if case == 3:
        return (t.mul(ax, x[1]),) + x[2:]
    raise AssertionError(f"no case applies to {a} acting on {x}; table is not a pregroup")


def lambda_fold(t: PregroupTable, w: Sequence[int]) -> Word:
    """Act on the base word (1) by x_n, then x_{n-1}, ..., then x_1.

    Gives a reduced representative for the group element x_1 x_2 ... x_n
    without ever multiplying out the word itself.
    """
    cur = base_word(t)
    for x in reversed(make_word(w)):
        cur = act(t, x, cur)
    return cur
