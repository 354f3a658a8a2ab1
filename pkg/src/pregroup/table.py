"""Finite pregroup tables: carrier, involution, partial product, axiom checks.

Elements are plain ``int`` indices into ``PregroupTable.names``.  The
declaration order of the names is the total order used for scanning and
canonical forms everywhere in the package.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence

__all__ = [
    "TableError",
    "UndefinedProduct",
    "PregroupTable",
    "new_table",
    "AxiomResult",
    "AxiomReport",
    "LemmaReport",
    "check_axioms",
    "check_lemmas",
    "relabel",
    "find_isomorphism",
]


class TableError(ValueError):
    """Shape violation while building a table."""


class UndefinedProduct(ValueError):
    """Raised by ``mul`` (and word operations) when a pair is not in D."""

    def __init__(self, x: int, y: int, message: str | None = None, position: int | None = None):
        self.x = x
        self.y = y
        self.position = position
        super().__init__(message or f"product ({x}, {y}) is not defined")


class PregroupTable:
    """A finite set with identity, involution and a partial product.

    The product is stored as an explicit mapping ``(x, y) -> xy`` over the
    domain D.  Instances are immutable by convention; nothing in the package
    mutates one after construction.
    """

    __slots__ = ("names", "identity", "inverse", "product", "_index", "_right", "_left", "_hash")

    def __init__(
        self,
        names: Sequence[str],
        identity: int,
        inverse: Sequence[int],
        product: Mapping[tuple[int, int], int],
    ):
        self.names: tuple[str, ...] = tuple(names)
        self.identity = identity
        self.inverse: tuple[int, ...] = tuple(inverse)
        self.product: dict[tuple[int, int], int] = dict(product)
        self._index = {name: i for i, name in enumerate(self.names)}
        n = len(self.names)
        right: list[list[int]] = [[] for _ in range(n)]
        left: list[list[int]] = [[] for _ in range(n)]
        for x, y in self.product:
            right[x].append(y)
            left[y].append(x)
        # sorted partner lists give lexicographic scan order for free
        self._right = tuple(tuple(sorted(r)) for r in right)
        self._left = tuple(tuple(sorted(l)) for l in left)
        self._hash = None

    def __len__(self) -> int:
        return len(self.names)

    def __repr__(self) -> str:
        return f"PregroupTable({len(self)} elements, |D|={len(self.product)})"

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, PregroupTable):
            return NotImplemented
        return (
            self.names == other.names
            and self.identity == other.identity
            and self.inverse == other.inverse
            and self.product == other.product
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.names, self.identity, self.inverse, frozenset(self.product.items())))
        return self._hash

    @property
    def elements(self) -> range:
        return range(len(self.names))

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise TableError(f"unknown element name {name!r}") from None

    def name(self, x: int) -> str:
        return self.names[x]

    def is_defined(self, x: int, y: int) -> bool:
        return (x, y) in self.product

    def mul(self, x: int, y: int) -> int:
        try:
            return self.product[x, y]
        except KeyError:
            raise UndefinedProduct(
                x, y, f"product {self.names[x]}*{self.names[y]} is not defined"
            ) from None

    def inv(self, x: int) -> int:
        return self.inverse[x]

    def right_partners(self, x: int) -> tuple[int, ...]:
        """All y with (x, y) in D, ascending."""
        return self._right[x]

    def left_partners(self, y: int) -> tuple[int, ...]:
        """All x with (x, y) in D, ascending."""
        return self._left[y]

    def word(self, text: str | Iterable[str]) -> tuple[int, ...]:
        """Parse a space-separated word (or an iterable of names) into ids."""
        parts = text.split() if isinstance(text, str) else list(text)
        if not parts:
            raise TableError("words must be nonempty")
        return tuple(self.index(p) for p in parts)

    def show(self, word: Iterable[int]) -> str:
        return " ".join(self.names[x] for x in word)

    def triples(self) -> list[tuple[str, str, str]]:
        """The product as name triples, sorted by (x, y) id."""
        return [
            (self.names[x], self.names[y], self.names[z])
            for (x, y), z in sorted(self.product.items())
        ]


def new_table(
    names: Sequence[str],
    identity_name: str,
    inverse_pairs: Mapping[str, str] | Iterable[tuple[str, str]],
    product_triples: Iterable[tuple[str, str, str]],
) -> PregroupTable:
    """Build a table from names, validating shape only (not the axioms)."""
    names = list(names)
    seen: set[str] = set()
    for name in names:
        if not isinstance(name, str) or not name:
            raise TableError(f"element names must be nonempty strings, got {name!r}")
        if any(ch.isspace() for ch in name):
            raise TableError(f"element name {name!r} contains whitespace")
        if name in seen:
            raise TableError(f"duplicate element name {name!r}")
        seen.add(name)
    index = {name: i for i, name in enumerate(names)}

    def lookup(name: str, what: str) -> int:
        if name not in index:
            raise TableError(f"{what} references unknown element {name!r}")
        return index[name]

    identity = lookup(identity_name, "identity")

    pairs = inverse_pairs.items() if isinstance(inverse_pairs, Mapping) else inverse_pairs
    inverse: list[int | None] = [None] * len(names)
    for x, y in pairs:
        i, j = lookup(x, "inverse"), lookup(y, "inverse")
        if inverse[i] is not None and inverse[i] != j:
            raise TableError(f"conflicting inverses for {x!r}")
        inverse[i] = j
    missing = [names[i] for i, v in enumerate(inverse) if v is None]
    if missing:
        raise TableError(f"inverse is not total: missing {', '.join(missing)}")

    product: dict[tuple[int, int], int] = {}
    for triple in product_triples:
        if len(triple) != 3:
            raise TableError(f"product entry must have 3 names, got {triple!r}")
        x, y, z = (lookup(n, "product") for n in triple)
        if (x, y) in product and product[x, y] != z:
            raise TableError(f"conflicting product entries for ({triple[0]}, {triple[1]})")
        product[x, y] = z

    return PregroupTable(names, identity, inverse, product)  # type: ignore[arg-type]


def relabel(t: PregroupTable, mapping: Mapping[str, str]) -> PregroupTable:
    """Rename elements; names not in ``mapping`` are kept."""
    return PregroupTable([mapping.get(n, n) for n in t.names], t.identity, t.inverse, t.product)


def find_isomorphism(t: PregroupTable, u: PregroupTable) -> dict[int, int] | None:
    """Search for a bijection t -> u preserving identity, inverse and product.

    Plain backtracking; intended for small tables in tests and cross-checks.
    """
    n = len(t)
    if n != len(u) or len(t.product) != len(u.product):
        return None

    def signature(s: PregroupTable, x: int) -> tuple[int, int, bool]:
        return (len(s.right_partners(x)), len(s.left_partners(x)), s.inv(x) == x)

    candidates = [[y for y in u.elements if signature(u, y) == signature(t, x)] for x in t.elements]
    assignment: dict[int, int] = {t.identity: u.identity}
    used = {u.identity}
    order = sorted((x for x in t.elements if x != t.identity), key=lambda x: len(candidates[x]))

    def consistent(x: int) -> bool:
        fx = assignment[x]
        ix = t.inv(x)
        if ix in assignment and assignment[ix] != u.inv(fx):
            return False
        for y, fy in assignment.items():
            for a, b, fa, fb in ((x, y, fx, fy), (y, x, fy, fx)):
                d = (a, b) in t.product
                if d != ((fa, fb) in u.product):
                    return False
                if d:
                    z = t.product[a, b]
                    if z in assignment and assignment[z] != u.product[fa, fb]:
                        return False
        return True

    def extend(k: int) -> bool:
        if k == len(order):
            return True
        x = order[k]
        for y in candidates[x]:
            if y in used:
                continue
            assignment[x] = y
            used.add(y)
            if consistent(x) and extend(k + 1):
                return True
            del assignment[x]
            used.discard(y)
        return False

    if signature(t, t.identity) != signature(u, u.identity):
        return None
    return dict(assignment) if extend(0) else None


# -- axiom and lemma verification ------------------------------------------------


@dataclass(frozen=True)
class AxiomResult:
    """Outcome for one axiom or lemma; ``witness`` is a tuple of element ids."""

    passed: bool
    witness: tuple[int, ...] | None = None
    reason: str | None = None


@dataclass(frozen=True)
class AxiomReport:
    results: dict[int, AxiomResult] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results.values())

    def failures(self) -> dict[int, AxiomResult]:
        return {k: r for k, r in self.results.items() if not r.passed}


@dataclass(frozen=True)
class LemmaReport:
    """Keys are lemma labels "2.1" .. "2.6"."""

    results: dict[str, AxiomResult] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results.values())

    def failures(self) -> dict[str, AxiomResult]:
        return {k: r for k, r in self.results.items() if not r.passed}


def _first(violations: Iterator[tuple[tuple[int, ...], str]]) -> AxiomResult:
    for witness, reason in violations:
        return AxiomResult(False, witness, reason)
    return AxiomResult(True)


def _axiom1(t: PregroupTable):
    e = t.identity
    for x in t.elements:
        if not t.is_defined(e, x):
            yield (x,), "identity-left-undefined"
        elif not t.is_defined(x, e):
            yield (x,), "identity-right-undefined"
        elif t.mul(e, x) != x:
            yield (x,), "identity-left-wrong"
        elif t.mul(x, e) != x:
            yield (x,), "identity-right-wrong"


def _axiom2(t: PregroupTable):
    e = t.identity
    for x in t.elements:
        ix = t.inv(x)
        if not t.is_defined(x, ix):
            yield (x,), "inverse-right-undefined"
        elif not t.is_defined(ix, x):
            yield (x,), "inverse-left-undefined"
        elif t.mul(x, ix) != e:
            yield (x,), "inverse-right-wrong"
        elif t.mul(ix, x) != e:
            yield (x,), "inverse-left-wrong"


def _axiom3(t: PregroupTable):
    for (x, y), xy in sorted(t.product.items()):
        iy, ix = t.inv(y), t.inv(x)
        if not t.is_defined(iy, ix):
            yield (x, y), "reversed-inverse-undefined"
        elif t.inv(xy) != t.mul(iy, ix):
            yield (x, y), "reversed-inverse-wrong"


def _axiom4(t: PregroupTable):
    for x in t.elements:
        for y in t.right_partners(x):
            xy = t.mul(x, y)
            for z in t.right_partners(y):
                yz = t.mul(y, z)
                left, right = t.is_defined(x, yz), t.is_defined(xy, z)
                if left != right:
                    yield (x, y, z), "associativity-definedness"
                elif left and t.mul(x, yz) != t.mul(xy, z):
                    yield (x, y, z), "associativity-value"


def _axiom5(t: PregroupTable):
    for w in t.elements:
        for x in t.right_partners(w):
            for y in t.right_partners(x):
                xy = t.mul(x, y)
                for z in t.right_partners(y):
                    if not (t.is_defined(w, xy) or t.is_defined(xy, z)):
                        yield (w, x, y, z), "chain-condition"


def check_axioms(t: PregroupTable) -> AxiomReport:
    """Exhaustively verify the five pregroup axioms.

    Every axiom is scanned even after another one fails.  Witnesses are the
    lexicographically least violating tuples.
    """
    checks = (_axiom1, _axiom2, _axiom3, _axiom4, _axiom5)
    return AxiomReport({k: _first(check(t)) for k, check in enumerate(checks, start=1)})


def _reduced3(t: PregroupTable, x: int, y: int, z: int) -> bool:
    return not t.is_defined(x, y) and not t.is_defined(y, z)


def _lemma21(t: PregroupTable):
    for x in t.elements:
        if t.inv(t.inv(x)) != x:
            yield (x,), "inverse-not-involution"


def _lemma22(t: PregroupTable):
    for (a, x), ax in sorted(t.product.items()):
        # left cancellation of a, right cancellation of x
        ia, ix = t.inv(a), t.inv(x)
        if not t.is_defined(ia, ax) or t.mul(ia, ax) != x:
            yield (a, x), "left-cancellation"
        elif not t.is_defined(ax, ix) or t.mul(ax, ix) != a:
            yield (a, x), "right-cancellation"


def _lemma23(t: PregroupTable):
    for x in t.elements:
        for a in t.right_partners(x):
            xa, ia = t.mul(x, a), t.inv(a)
            for y in t.right_partners(ia):
                ay = t.mul(ia, y)
                d1, d2 = t.is_defined(x, y), t.is_defined(xa, ay)
                if d1 != d2:
                    yield (x, a, y), "transfer-definedness"
                elif d1 and t.mul(x, y) != t.mul(xa, ay):
                    yield (x, a, y), "transfer-value"


def _lemma24(t: PregroupTable):
    for x in t.elements:
        for a in t.right_partners(x):
            xa, ia = t.mul(x, a), t.inv(a)
            for y in t.right_partners(ia):
                ay = t.mul(ia, y)
                for z in t.elements:
                    if _reduced3(t, x, y, z) != _reduced3(t, xa, ay, z):
                        yield (x, a, y, z), "reducedness-right"
                    elif _reduced3(t, z, x, y) != _reduced3(t, z, xa, ay):
                        yield (x, a, y, z), "reducedness-left"


def _lemma25(t: PregroupTable):
    for x in t.elements:
        for a in t.right_partners(x):
            ia = t.inv(a)
            for y in t.right_partners(ia):
                if t.is_defined(x, y):
                    continue
                ay = t.mul(ia, y)
                for b in t.right_partners(y):
                    if not t.is_defined(ay, b):
                        yield (x, y, a, b), "conjugate-extension"


def _lemma26(t: PregroupTable):
    for x in t.elements:
        for a in t.right_partners(x):
            xa, ia = t.mul(x, a), t.inv(a)
            for y in t.right_partners(ia):
                if t.is_defined(x, y):
                    continue
                ay = t.mul(ia, y)
                for b in t.right_partners(xa):
                    if t.is_defined(t.inv(b), ay) and not t.is_defined(a, b):
                        yield (x, y, a, b), "interleaver-composition"


def check_lemmas(t: PregroupTable) -> LemmaReport:
    """Exhaustively verify the consequences 2.1 through 2.6 of the axioms.

    These hold in every pregroup, so a failure on a table that passed
    ``check_axioms`` points at a bug somewhere.
    """
    checks = {
        "2.1": _lemma21,
        "2.2": _lemma22,
        "2.3": _lemma23,
        "2.4": _lemma24,
        "2.5": _lemma25,
        "2.6": _lemma26,
    }
    return LemmaReport({k: _first(check(t)) for k, check in checks.items()})
