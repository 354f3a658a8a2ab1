"""Finite groups, monomorphisms, and the standard ways of building pregroups from them.

Every constructor certifies its output with ``check_axioms`` and
``check_lemmas`` and raises ``ConstructionError`` if either fails.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .table import PregroupTable, check_axioms, check_lemmas
from .universal import u_from_word, u_inv, u_mul

__all__ = [
    "NotAGroup",
    "NotAMonomorphism",
    "ConstructionError",
    "FiniteGroup",
    "Monomorphism",
    "TreeOfGroups",
    "group_from_table",
    "group_cyclic",
    "group_s3",
    "subgroup_of",
    "monomorphism",
    "tree_of_groups",
    "certify",
    "amalgam_pregroup",
    "tree_pregroup",
    "bab_pregroup",
    "subgroup_pregroup",
    "hnn_pregroup",
    "amalgam_normal_form",
    "amalgam_oracle_eq",
    "HNN_LISTED_SHAPE_PAIRS",
]


class NotAGroup(ValueError):
    def __init__(self, message: str, witness: tuple[str, ...] = ()):
        self.witness = witness
        super().__init__(message)


class NotAMonomorphism(ValueError):
    pass


class ConstructionError(RuntimeError):
    pass


@dataclass(frozen=True)
class FiniteGroup:
    names: tuple[str, ...]
    identity: int
    table: tuple[tuple[int, ...], ...]
    inverse: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.names)

    @property
    def elements(self) -> range:
        return range(len(self.names))

    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]

    def inv(self, x: int) -> int:
        return self.inverse[x]

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise NotAGroup(f"unknown group element {name!r}") from None

    def triples(self) -> list[tuple[str, str, str]]:
        n = self.names
        return [(n[x], n[y], n[self.table[x][y]]) for x in self.elements for y in self.elements]


@dataclass(frozen=True)
class Monomorphism:
    source: FiniteGroup
    target: FiniteGroup
    map: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.map[x]

    @property
    def image(self) -> frozenset[int]:
        return frozenset(self.map)


@dataclass(frozen=True)
class TreeOfGroups:
    """Groups on a tree-shaped poset with compatible monomorphisms.

    ``maps`` holds a monomorphism for every comparable pair lo < hi (the
    composites are derived from the given edges by ``tree_of_groups``).
    ``nodes`` lists the root first.
    """

    nodes: tuple[str, ...]
    groups: Mapping[str, FiniteGroup]
    maps: Mapping[tuple[str, str], Monomorphism]

    def below(self, lo: str, hi: str) -> bool:
        return lo == hi or (lo, hi) in self.maps


def group_from_table(
    names: Sequence[str],
    identity: str,
    products: Iterable[tuple[str, str, str]] | Mapping[tuple[str, str], str],
) -> FiniteGroup:
    """Validate a full multiplication table and return the group."""
    names = tuple(names)
    if len(set(names)) != len(names):
        raise NotAGroup("duplicate element names")
    idx = {n: i for i, n in enumerate(names)}
    if identity not in idx:
        raise NotAGroup(f"identity {identity!r} is not an element")
    items = products.items() if isinstance(products, Mapping) else ((p[:2], p[2]) for p in products)
    n = len(names)
    table: list[list[int | None]] = [[None] * n for _ in range(n)]
    for (x, y), z in items:
        for name in (x, y, z):
            if name not in idx:
                raise NotAGroup(f"unknown element {name!r} in product table", (name,))
        i, j = idx[x], idx[y]
        if table[i][j] is not None and table[i][j] != idx[z]:
            raise NotAGroup(f"conflicting entries for {x}*{y}", (x, y))
        table[i][j] = idx[z]
    for i, j in itertools.product(range(n), repeat=2):
        if table[i][j] is None:
            raise NotAGroup(f"product {names[i]}*{names[j]} missing", (names[i], names[j]))
    e = idx[identity]
    for x in range(n):
        if table[e][x] != x or table[x][e] != x:
            raise NotAGroup(f"{identity} is not an identity for {names[x]}", (names[x],))
    inverse = []
    for x in range(n):
        inv = [y for y in range(n) if table[x][y] == e and table[y][x] == e]
        if not inv:
            raise NotAGroup(f"{names[x]} has no inverse", (names[x],))
        inverse.append(inv[0])
    for x, y, z in itertools.product(range(n), repeat=3):
        if table[table[x][y]][z] != table[x][table[y][z]]:
            raise NotAGroup("associativity fails", (names[x], names[y], names[z]))
    return FiniteGroup(names, e, tuple(tuple(row) for row in table), tuple(inverse))  # type: ignore[arg-type]


def group_cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise NotAGroup("cyclic group order must be at least 1")
    table = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    return FiniteGroup(
        tuple(str(i) for i in range(n)), 0, table, tuple((-i) % n for i in range(n))
    )


def group_s3() -> FiniteGroup:
    """The symmetric group on three points, elements e, r, r2, s, rs, r2s.

    r is the 3-cycle 0->1->2->0 and s the transposition of 0 and 1.
    """

    def compose(p, q):  # p after q
        return tuple(p[q[i]] for i in range(3))

    r, s, e = (1, 2, 0), (1, 0, 2), (0, 1, 2)
    r2 = compose(r, r)
    perms = [e, r, r2, s, compose(r, s), compose(r2, s)]
    names = ["e", "r", "r2", "s", "rs", "r2s"]
    lookup = {p: i for i, p in enumerate(perms)}
    triples = [(names[i], names[j], names[lookup[compose(p, q)]])
               for i, p in enumerate(perms) for j, q in enumerate(perms)]
    return group_from_table(names, "e", triples)


def subgroup_of(g: FiniteGroup, names: Iterable[str]) -> FiniteGroup:
    """The subgroup on ``names`` (kept in the parent's order), validated."""
    members = sorted({g.index(n) for n in names})
    if g.identity not in members:
        raise NotAGroup("subgroup must contain the identity")
    pos = {x: i for i, x in enumerate(members)}
    for x in members:
        if g.inv(x) not in pos:
            raise NotAGroup(f"subgroup not closed under inverse at {g.names[x]}", (g.names[x],))
        for y in members:
            if g.mul(x, y) not in pos:
                raise NotAGroup(
                    f"subgroup not closed: {g.names[x]}*{g.names[y]}", (g.names[x], g.names[y])
                )
    return FiniteGroup(
        tuple(g.names[x] for x in members),
        pos[g.identity],
        tuple(tuple(pos[g.mul(x, y)] for y in members) for x in members),
        tuple(pos[g.inv(x)] for x in members),
    )


def monomorphism(
    source: FiniteGroup, target: FiniteGroup, images: Mapping[str, str] | None = None
) -> Monomorphism:
    """Build an injective homomorphism from images of (at least) a generating set.

    The identity is sent to the identity automatically; the rest is filled in
    by closing the given assignments under multiplication.  An empty
    ``images`` on the trivial group, or a full element map, both work.
    """
    known = {source.identity: target.identity}
    for x, y in (images or {}).items():
        i, j = source.index(x), target.index(y)
        if known.get(i, j) != j:
            raise NotAMonomorphism(f"conflicting images for {x}")
        known[i] = j
    changed = True
    while changed:
        changed = False
        for x, y in list(itertools.product(list(known), repeat=2)):
            z, fz = source.mul(x, y), target.mul(known[x], known[y])
            if z in known:
                if known[z] != fz:
                    raise NotAMonomorphism(
                        f"not a homomorphism at {source.names[x]}*{source.names[y]}"
                    )
            else:
                known[z] = fz
                changed = True
    if len(known) != len(source):
        missing = [source.names[x] for x in source.elements if x not in known]
        raise NotAMonomorphism(f"images do not generate the source; missing {missing}")
    if len(set(known.values())) != len(source):
        raise NotAMonomorphism("map is not injective")
    return Monomorphism(source, target, tuple(known[x] for x in source.elements))


def tree_of_groups(
    groups: Mapping[str, FiniteGroup], edges: Mapping[tuple[str, str], Monomorphism]
) -> TreeOfGroups:
    """Validate the poset generated by ``edges`` and derive all composite maps."""
    for (lo, hi), m in edges.items():
        for node in (lo, hi):
            if node not in groups:
                raise ConstructionError(f"edge references unknown node {node!r}")
        if m.source != groups[lo] or m.target != groups[hi]:
            raise ConstructionError(f"map on edge {lo}<{hi} has the wrong source or target")
    maps: dict[tuple[str, str], tuple[int, ...]] = {k: m.map for k, m in edges.items()}
    changed = True
    while changed:
        changed = False
        for (i, j), f in list(maps.items()):
            for (j2, k), g in list(edges.items()):
                if j2 != j:
                    continue
                if i == k:
                    raise ConstructionError(f"cycle through {i!r}")
                comp = tuple(g.map[f[x]] for x in range(len(f)))
                if (i, k) in maps:
                    if maps[i, k] != comp:
                        raise ConstructionError(f"maps along different paths {i}<{k} disagree")
                else:
                    maps[i, k] = comp
                    changed = True

    def le(a: str, b: str) -> bool:
        return a == b or (a, b) in maps

    nodes = list(groups)
    roots = [r for r in nodes if all(le(r, n) for n in nodes)]
    if not roots:
        raise ConstructionError("the poset has no least element")
    for k in nodes:
        below = [n for n in nodes if (n, k) in maps]
        for i, j in itertools.combinations(below, 2):
            if not (le(i, j) or le(j, i)):
                raise ConstructionError(f"nodes {i!r} and {j!r} below {k!r} are incomparable")
    ordered = [roots[0]] + [n for n in nodes if n != roots[0]]
    full = {k: Monomorphism(groups[k[0]], groups[k[1]], f) for k, f in maps.items()}
    return TreeOfGroups(tuple(ordered), dict(groups), full)


def certify(t: PregroupTable, what: str = "table") -> PregroupTable:
    axioms = check_axioms(t)
    if not axioms.ok:
        raise ConstructionError(f"{what} fails axioms {sorted(axioms.failures())}")
    lemmas = check_lemmas(t)
    if not lemmas.ok:
        raise ConstructionError(f"{what} fails lemmas {sorted(lemmas.failures())}")
    return t


def _from_ids(
    names: Sequence[str],
    identity: int,
    inverse: Sequence[int],
    product: Mapping[tuple[int, int], int],
) -> PregroupTable:
    if len(set(names)) != len(names) or any(not n or any(c.isspace() for c in n) for n in names):
        raise ConstructionError(f"generated element names are not usable: {list(names)}")
    return PregroupTable(names, identity, inverse, product)


# -- amalgamated free products ------------------------------------------------------


def _check_span(phi: Monomorphism, psi: Monomorphism) -> None:
    if phi.source != psi.source:
        raise NotAMonomorphism("the two monomorphisms must share their source group")


def _amalgam_carrier(a: FiniteGroup, b: FiniteGroup, phi: Monomorphism, psi: Monomorphism):
    """List of (name, index in A or None, index in B or None) in canonical order.

    Identity first, then elements of A only, then the shared subgroup, then
    elements of B only.  Shared elements are called "c" followed by the name
    of the element of C, or just "c" when C has order two.
    """
    _check_span(phi, psi)
    c = phi.source
    shared_a, shared_b = phi.image, psi.image
    carrier = [("e", a.identity, b.identity)]
    carrier += [("a" + a.names[x], x, None) for x in a.elements if x not in shared_a]
    for z in c.elements:
        if z != c.identity:
            label = "c" if len(c) == 2 else "c" + c.names[z]
            carrier.append((label, phi(z), psi(z)))
    carrier += [("b" + b.names[y], None, y) for y in b.elements if y not in shared_b]
    return carrier


def amalgam_pregroup(
    a: FiniteGroup, b: FiniteGroup, phi: Monomorphism, psi: Monomorphism
) -> PregroupTable:
    """A and B glued along the images of C; xy is defined iff x, y lie in a common factor."""
    carrier = _amalgam_carrier(a, b, phi, psi)
    from_a = {ia: k for k, (_, ia, _) in enumerate(carrier) if ia is not None}
    from_b = {ib: k for k, (_, _, ib) in enumerate(carrier) if ib is not None}
    product = {}
    inverse = []
    for u, (_, ua, ub) in enumerate(carrier):
        inverse.append(from_a[a.inv(ua)] if ua is not None else from_b[b.inv(ub)])
        for v, (_, va, vb) in enumerate(carrier):
            if ua is not None and va is not None:
                product[u, v] = from_a[a.mul(ua, va)]
            elif ub is not None and vb is not None:
                product[u, v] = from_b[b.mul(ub, vb)]
    t = _from_ids([n for n, _, _ in carrier], 0, inverse, product)
    return certify(t, "amalgam")


@functools.lru_cache(maxsize=32)
def _oracle_context(a: FiniteGroup, b: FiniteGroup, phi: Monomorphism, psi: Monomorphism):
    """Carrier lookup and, per factor, h -> (c, least element of the coset C h)."""
    by_name = {n: (ia, ib) for n, ia, ib in _amalgam_carrier(a, b, phi, psi)}
    c = phi.source
    factors = {"A": (a, phi), "B": (b, psi)}
    splits = {}
    for key, (g, m) in factors.items():
        back = {m(z): z for z in c.elements}
        split = {}
        for h in g.elements:
            rep = min(g.mul(m(z), h) for z in c.elements)
            split[h] = (back[g.mul(h, g.inv(rep))], rep)
        splits[key] = split
    return by_name, factors, splits


def amalgam_normal_form(
    a: FiniteGroup,
    b: FiniteGroup,
    phi: Monomorphism,
    psi: Monomorphism,
    word: Sequence[str],
) -> tuple[int, tuple[tuple[str, int], ...]]:
    """Classical normal form c * r_1 * ... * r_k of a word in the amalgam.

    The r_i are nontrivial right coset representatives of C, alternating
    between A and B, each the least element of its coset.  Computed from the
    groups alone; never touches the pregroup machinery.
    """
    by_name, factors, splits = _oracle_context(a, b, phi, psi)
    c = phi.source
    coset_part = c.identity
    reps: list[tuple[str, int]] = []
    for name in reversed(list(word)):
        if name not in by_name:
            raise ValueError(f"unknown amalgam element {name!r}")
        ia, ib = by_name[name]
        key = "A" if ia is not None else "B"
        g, m = factors[key]
        h = g.mul(ia if key == "A" else ib, m(coset_part))
        if reps and reps[0][0] == key:
            h = g.mul(h, reps[0][1])
            reps = reps[1:]
        coset_part, rep = splits[key][h]
        if rep != g.identity:
            reps.insert(0, (key, rep))
    return coset_part, tuple(reps)


def amalgam_oracle_eq(
    a: FiniteGroup,
    b: FiniteGroup,
    phi: Monomorphism,
    psi: Monomorphism,
    w1: Sequence[str],
    w2: Sequence[str],
) -> bool:
    """Equality in the amalgamated product by comparing classical normal forms."""
    return amalgam_normal_form(a, b, phi, psi, w1) == amalgam_normal_form(a, b, phi, psi, w2)


# -- trees of groups --------------------------------------------------------------


def tree_pregroup(tree: TreeOfGroups) -> PregroupTable:
    """Union of the groups with x in G_i identified with its image in every G_j above i.

    xy is defined iff x and y both live in some common G_j; the value is
    computed there (and checked to be the same in every common node).
    """
    parent: dict[tuple[str, int], tuple[str, int]] = {}

    def find(p):
        while parent.setdefault(p, p) != p:
            parent[p] = parent[parent[p]]
            p = parent[p]
        return p

    for node in tree.nodes:
        for x in tree.groups[node].elements:
            find((node, x))
    for (lo, hi), m in tree.maps.items():
        for x in m.source.elements:
            ra, rb = find((lo, x)), find((hi, m(x)))
            if ra != rb:
                parent[ra] = rb

    classes: dict[tuple[str, int], dict[str, int]] = {}
    for node in tree.nodes:
        for x in tree.groups[node].elements:
            members = classes.setdefault(find((node, x)), {})
            if node in members:
                raise ConstructionError(f"two elements of {node!r} were identified")
            members[node] = x

    rank = {n: i for i, n in enumerate(tree.nodes)}

    def least(members: dict[str, int]) -> str:
        lows = [n for n in members if all(tree.below(n, m) for m in members)]
        if len(lows) != 1:
            raise ConstructionError(f"element supported on {sorted(members)} has no least node")
        return lows[0]

    root = tree.nodes[0]
    carrier = sorted(
        classes.values(),
        key=lambda ms: (
            ms.get(root) != tree.groups[root].identity,
            rank[least(ms)],
            ms[least(ms)],
        ),
    )
    lookup = {(node, x): k for k, ms in enumerate(carrier) for node, x in ms.items()}
    names = []
    for k, ms in enumerate(carrier):
        low = least(ms)
        names.append("e" if k == 0 else low + tree.groups[low].names[ms[low]])

    inverse = []
    product = {}
    for u, us in enumerate(carrier):
        low = least(us)
        inverse.append(lookup[low, tree.groups[low].inv(us[low])])
        for v, vs in enumerate(carrier):
            values = {
                lookup[node, tree.groups[node].mul(us[node], vs[node])]
                for node in us.keys() & vs.keys()
            }
            if len(values) > 1:
                raise ConstructionError(f"product of {names[u]} and {names[v]} depends on the node")
            if values:
                product[u, v] = values.pop()
    return certify(_from_ids(names, 0, inverse, product), "tree")


# -- the bab pregroup inside an amalgam ---------------------------------------------


def bab_pregroup(
    a: FiniteGroup, b: FiniteGroup, phi: Monomorphism, psi: Monomorphism
) -> PregroupTable:
    """Elements b a b' of the amalgamated product; xy defined iff it is again of that form.

    Element names are the canonical amalgam words joined by ".", so the
    elements of A and B keep their amalgam names.
    """
    q = amalgam_pregroup(a, b, phi, psi)
    carrier_a = [k for k, (_, ia, _) in enumerate(_amalgam_carrier(a, b, phi, psi)) if ia is not None]
    carrier_b = [k for k, (_, _, ib) in enumerate(_amalgam_carrier(a, b, phi, psi)) if ib is not None]
    elems = {
        u_from_word(q, (x, y, z))
        for x in carrier_b
        for y in carrier_a
        for z in carrier_b
    }
    ordered = sorted(elems, key=lambda g: (len(g.word), g.word))
    pos = {g: k for k, g in enumerate(ordered)}
    product = {}
    for u, g in enumerate(ordered):
        for v, h in enumerate(ordered):
            k = pos.get(u_mul(g, h))
            if k is not None:
                product[u, v] = k
    inverse = [pos[u_inv(g)] for g in ordered]
    names = [".".join(q.names[x] for x in g.word) for g in ordered]
    return certify(_from_ids(names, pos[u_from_word(q, (q.identity,))], inverse, product), "bab")


# -- subgroup pregroup ------------------------------------------------------------------


def subgroup_pregroup(g: FiniteGroup, h: Iterable[str]) -> PregroupTable:
    """G with xy defined iff at least one of x, y, xy lies in the subgroup H."""
    members = {g.index(n) for n in subgroup_of(g, h).names}
    product = {
        (x, y): g.mul(x, y)
        for x in g.elements
        for y in g.elements
        if x in members or y in members or g.mul(x, y) in members
    }
    return certify(_from_ids(g.names, g.identity, g.inverse, product), "subgroup pregroup")


# -- HNN pregroup -------------------------------------------------------------------------

# shapes: 0 = g, 1 = x^-1 g, 2 = g x, 3 = x^-1 g x
_SYLLABLES = {0: ((0,), ()), 1: ((None, 0), (-1,)), 2: ((0, None), (1,)), 3: ((None, 0, None), (-1, 1))}

#: the shape pairs whose products are defined by cancelling x x^-1 alone
HNN_LISTED_SHAPE_PAIRS = ((0, 0), (0, 2), (1, 0), (1, 2), (2, 1), (2, 3), (3, 1), (3, 3))


def _hnn_name(g: FiniteGroup, shape: int, x: int) -> str:
    n = g.names[x]
    return (n, "X'" + n, n + "X", "X'" + n + "X")[shape]


def hnn_pregroup(
    g: FiniteGroup,
    h: Iterable[str],
    phi: Mapping[str, str] | Monomorphism | None = None,
) -> PregroupTable:
    """Four copies G, x^-1 G, G x, x^-1 G x with h identified with x^-1 phi(h) x.

    ``phi`` maps the subgroup H into G; it may be a Monomorphism from
    ``subgroup_of(g, h)``, a name mapping on generators, or None for the
    inclusion.  A product is defined iff the formal product, after cancelling
    pinches x h x^-1 -> phi(h) and x^-1 phi(h) x -> h, lands in one of the
    four shapes.
    """
    hg = subgroup_of(g, h)
    if isinstance(phi, Monomorphism):
        if phi.source != hg or phi.target != g:
            raise NotAMonomorphism("phi must map the given subgroup into G")
        mono = phi
    else:
        mono = monomorphism(hg, g, phi if phi is not None else {n: n for n in hg.names})
    into = {g.index(hg.names[k]): mono(k) for k in hg.elements}  # H (as G ids) -> G
    back = {v: k for k, v in into.items()}  # phi(H) -> H

    carrier = [(0, x) for x in g.elements]
    carrier += [(1, x) for x in g.elements]
    carrier += [(2, x) for x in g.elements]
    carrier += [(3, x) for x in g.elements if x not in back]
    pos = {el: k for k, el in enumerate(carrier)}

    def syllables(el):
        shape, x = el
        gs, es = _SYLLABLES[shape]
        return [x if s is not None else g.identity for s in gs], list(es)

    def canonical(gs, es):
        if not es:
            return (0, gs[0])
        if es == [-1] and gs[0] in into:
            return (1, g.mul(into[gs[0]], gs[1]))
        if es == [1] and gs[1] in into:
            return (2, g.mul(gs[0], into[gs[1]]))
        if es == [-1, 1] and gs[0] in into and gs[2] in into:
            k = g.mul(g.mul(into[gs[0]], gs[1]), into[gs[2]])
            return (0, back[k]) if k in back else (3, k)
        return None

    def multiply(u, v):
        gu, eu = syllables(u)
        gv, ev = syllables(v)
        gs = gu[:-1] + [g.mul(gu[-1], gv[0])] + gv[1:]
        es = eu + ev
        i = 0
        while i < len(es) - 1:
            mid = gs[i + 1]
            if es[i] == 1 and es[i + 1] == -1 and mid in into:
                new = into[mid]
            elif es[i] == -1 and es[i + 1] == 1 and mid in back:
                new = back[mid]
            else:
                i += 1
                continue
            gs[i : i + 3] = [g.mul(g.mul(gs[i], new), gs[i + 2])]
            del es[i : i + 2]
            i = max(i - 1, 0)
        return canonical(gs, es)

    product = {}
    for u, el in enumerate(carrier):
        for v, fl in enumerate(carrier):
            r = multiply(el, fl)
            if r is not None:
                product[u, v] = pos[r]
    inverse = []
    for el in carrier:
        shape, x = el
        ix = g.inv(x)
        inv_el = {0: (0, ix), 1: (2, ix), 2: (1, ix), 3: (3, ix)}[shape]
        inverse.append(pos[inv_el])
    names = [_hnn_name(g, s, x) for s, x in carrier]
    t = _from_ids(names, pos[(0, g.identity)], inverse, product)
    for u, (su, _) in enumerate(carrier):
        for v, (sv, _) in enumerate(carrier):
            if (su, sv) in HNN_LISTED_SHAPE_PAIRS and (u, v) not in product:
                raise ConstructionError(f"listed product {names[u]}*{names[v]} came out undefined")
    return certify(t, "hnn")
