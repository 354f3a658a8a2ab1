"""Words over a pregroup: reduction, interleaving and the equivalence of reduced words.

A word is a nonempty tuple of element ids.  An interleaver for a word of
length n is a tuple (a_1, ..., a_{n-1}); the boundary entries a_0 and a_n
are always the identity and never stored.

Two reduced words X, Y are equivalent when Y = interleave(X, A) for some
interleaver A.  Because a_i is pinned down by a_{i-1}, x_i and y_i through
cancellation, deciding equivalence needs no search; ``equivalent_bruteforce``
keeps the exhaustive definition around as an oracle.
"""

from __future__ import annotations

import itertools
from collections import deque
from typing import Iterable, Sequence

from .table import PregroupTable, UndefinedProduct

__all__ = [
    "Word",
    "Interleaver",
    "EmptyWord",
    "NotReduced",
    "LengthMismatch",
    "CapExceeded",
    "make_word",
    "is_reduced",
    "reduce_leftmost",
    "reduce_all",
    "interleave",
    "interleaver_product",
    "interleaver_inverse",
    "equivalent",
    "equivalent_bruteforce",
    "class_slots",
    "enumerate_class",
    "canonical_form",
    "reduced_words",
    "all_words",
]

Word = tuple[int, ...]
Interleaver = tuple[int, ...]


class EmptyWord(ValueError):
    pass


class NotReduced(ValueError):
    def __init__(self, word: Sequence[int]):
        self.word = tuple(word)
        super().__init__(f"word {self.word} is not reduced")


class LengthMismatch(ValueError):
    pass


class CapExceeded(RuntimeError):
    pass


def make_word(elems: Iterable[int]) -> Word:
    w = tuple(elems)
    if not w:
        raise EmptyWord("words must have length at least 1")
    return w


def _require_reduced(t: PregroupTable, *words: Sequence[int]) -> None:
    for w in words:
        make_word(w)
        if not is_reduced(t, w):
            raise NotReduced(w)


def is_reduced(t: PregroupTable, w: Sequence[int]) -> bool:
    return not any(t.is_defined(x, y) for x, y in zip(w, w[1:]))


def reduce_leftmost(t: PregroupTable, w: Sequence[int]) -> Word:
    """Repeatedly multiply out the leftmost defined adjacent pair.

    Implemented as a single left-to-right pass with a stack: the stack is
    always a reduced prefix, so the leftmost defined pair can only involve
    the top of the stack and the incoming letter.
    """
    stack: list[int] = []
    for y in make_word(w):
        while stack and t.is_defined(stack[-1], y):
            y = t.mul(stack.pop(), y)
        stack.append(y)
    return tuple(stack)


def reduce_all(t: PregroupTable, w: Sequence[int], cap: int = 100_000) -> set[Word]:
    """Every reduced word reachable from ``w`` by some order of single reductions."""
    start = make_word(w)
    seen = {start}
    queue = deque([start])
    out: set[Word] = set()
    while queue:
        cur = queue.popleft()
        moved = False
        for i in range(len(cur) - 1):
            x, y = cur[i], cur[i + 1]
            if t.is_defined(x, y):
                moved = True
                nxt = cur[:i] + (t.mul(x, y),) + cur[i + 2 :]
                if nxt not in seen:
                    if len(seen) >= cap:
                        raise CapExceeded(f"more than {cap} words explored from {start}")
                    seen.add(nxt)
                    queue.append(nxt)
        if not moved:
            out.add(cur)
    return out


def interleave(t: PregroupTable, x: Sequence[int], a: Sequence[int]) -> Word:
    """Return (x_1 a_1, a_1^-1 x_2 a_2, ..., a_{n-1}^-1 x_n).

    Raises ``UndefinedProduct`` (with ``position`` set, 0-based) when any of
    x_i a_i, a_{i-1}^-1 x_i or the triple product is missing from D.
    """
    x = make_word(x)
    a = tuple(a)
    if len(a) != len(x) - 1:
        raise LengthMismatch(f"interleaver of length {len(a)} for word of length {len(x)}")
    e = t.identity
    bounds = (e, *a, e)
    out = []
    for i, xi in enumerate(x):
        before, after = t.inv(bounds[i]), bounds[i + 1]
        for p, q in ((xi, after), (before, xi)):
            if not t.is_defined(p, q):
                raise UndefinedProduct(
                    p, q, f"position {i}: {t.name(p)}*{t.name(q)} is not defined", position=i
                )
        head = t.mul(before, xi)
        if not t.is_defined(head, after):
            raise UndefinedProduct(
                head,
                after,
                f"position {i}: ({t.name(before)}*{t.name(xi)})*{t.name(after)} is not defined",
                position=i,
            )
        out.append(t.mul(head, after))
    return tuple(out)


def interleaver_product(t: PregroupTable, a: Sequence[int], b: Sequence[int]) -> Interleaver:
    if len(a) != len(b):
        raise LengthMismatch(f"interleavers of lengths {len(a)} and {len(b)}")
    out = []
    for i, (ai, bi) in enumerate(zip(a, b)):
        if not t.is_defined(ai, bi):
            raise UndefinedProduct(
                ai, bi, f"position {i}: {t.name(ai)}*{t.name(bi)} is not defined", position=i
            )
        out.append(t.mul(ai, bi))
    return tuple(out)


def interleaver_inverse(t: PregroupTable, a: Sequence[int]) -> Interleaver:
    return tuple(t.inv(ai) for ai in a)


def equivalent(t: PregroupTable, x: Sequence[int], y: Sequence[int]) -> Interleaver | None:
    """The interleaver A with y = interleave(x, A), or None if x, y are not equivalent.

    a_i is forced: y_i = (a_{i-1}^-1 x_i) a_i, so a_i = (a_{i-1}^-1 x_i)^-1 y_i.
    """
    _require_reduced(t, x, y)
    if len(x) != len(y):
        return None
    n = len(x)
    prev = t.identity
    a: list[int] = []
    for i in range(n):
        left = (t.inv(prev), x[i])
        if not t.is_defined(*left):
            return None
        u = t.mul(*left)
        if i == n - 1:
            if u != y[i]:
                return None
            break
        iu = t.inv(u)
        if not t.is_defined(iu, y[i]):
            return None
        prev = t.mul(iu, y[i])
        a.append(prev)
    try:
        if interleave(t, x, a) != tuple(y):
            return None
    except UndefinedProduct:
        return None
    return tuple(a)


def equivalent_bruteforce(t: PregroupTable, x: Sequence[int], y: Sequence[int]) -> bool:
    """Try every interleaver in P^(n-1)."""
    x, y = tuple(x), tuple(y)
    if len(x) != len(y):
        return False
    for a in itertools.product(t.elements, repeat=len(x) - 1):
        try:
            if interleave(t, x, a) == y:
                return True
        except UndefinedProduct:
            continue
    return False


def class_slots(t: PregroupTable, x: Sequence[int]) -> list[list[int]]:
    """S_i = {a : x_i a and a^-1 x_{i+1} defined} for i = 1 .. n-1."""
    return [
        [a for a in t.right_partners(x[i]) if t.is_defined(t.inv(a), x[i + 1])]
        for i in range(len(x) - 1)
    ]


def enumerate_class(t: PregroupTable, x: Sequence[int]) -> set[Word]:
    """The whole equivalence class of the reduced word ``x``."""
    _require_reduced(t, x)
    return {interleave(t, x, a) for a in itertools.product(*class_slots(t, x))}


def canonical_form(t: PregroupTable, x: Sequence[int]) -> Word:
    """Lexicographically least member of the class of ``x`` (declaration order).

    Greedy works because y_1 .. y_{i-1} fix a_1 .. a_{i-1}, and y_i then
    determines a_i by cancellation.
    """
    _require_reduced(t, x)
    slots = class_slots(t, x)
    prev = t.identity
    out = []
    for i, slot in enumerate(slots):
        u = t.mul(t.inv(prev), x[i])
        yi, prev = min((t.mul(u, a), a) for a in slot)
        out.append(yi)
    out.append(t.mul(t.inv(prev), x[-1]))
    return tuple(out)


def all_words(t: PregroupTable, max_len: int) -> Iterable[Word]:
    """Every word of length 1 .. max_len, shortest first."""
    for n in range(1, max_len + 1):
        yield from itertools.product(t.elements, repeat=n)


def reduced_words(t: PregroupTable, max_len: int) -> list[Word]:
    """Every reduced word of length 1 .. max_len, built by extension."""
    out: list[Word] = []
    layer: list[Word] = [(x,) for x in t.elements]
    for _ in range(max_len):
        out.extend(layer)
        layer = [w + (y,) for w in layer for y in t.elements if not t.is_defined(w[-1], y)]
    return out
