"""Exhaustive invariant suite over all short words of a table.

Each check returns a ``CheckResult``; ``run_selftest`` runs them all.  The
brute-force sides (every interleaver in P^(n-1), every reduction order) are
deliberately naive so they stay independent of the fast paths they check.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable

from .action import act, act_case, lambda_fold
from .table import PregroupTable, UndefinedProduct, check_axioms, check_lemmas
from .universal import u_embed, u_from_word, u_mul
from .words import (
    canonical_form,
    enumerate_class,
    equivalent,
    interleave,
    interleaver_inverse,
    interleaver_product,
    is_reduced,
    reduce_all,
    reduce_leftmost,
    reduced_words,
    all_words,
)

__all__ = ["CheckResult", "brute_classes", "CHECKS", "run_selftest"]

MAX_REPORTED = 5


@dataclass
class CheckResult:
    name: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, message: str) -> None:
        if len(self.failures) < MAX_REPORTED:
            self.failures.append(message)
        else:
            self.failures[-1] = f"... and more (last: {message})"


def _valid_interleavings(t: PregroupTable, x):
    """(A, X*A) for every A in P^(n-1) for which the interleaving is defined."""
    for a in itertools.product(t.elements, repeat=len(x) - 1):
        try:
            yield a, interleave(t, x, a)
        except UndefinedProduct:
            continue


def brute_classes(t: PregroupTable, max_len: int) -> dict[tuple[int, ...], frozenset]:
    """Brute-force equivalence class of every reduced word up to ``max_len``."""
    return {
        x: frozenset(y for _, y in _valid_interleavings(t, x)) for x in reduced_words(t, max_len)
    }


def check_axioms_all(t, max_len, _classes) -> CheckResult:
    res = CheckResult("axioms")
    for k, r in check_axioms(t).results.items():
        res.cases += 1
        if not r.passed:
            res.fail(f"axiom {k}: {r.reason} at {t.show(r.witness)}")
    return res


def check_lemmas_all(t, max_len, _classes) -> CheckResult:
    res = CheckResult("lemmas 2.1-2.6")
    for k, r in check_lemmas(t).results.items():
        res.cases += 1
        if not r.passed:
            res.fail(f"lemma {k}: {r.reason} at {t.show(r.witness)}")
    return res


def check_interleave_reduced(t, max_len, _classes) -> CheckResult:
    res = CheckResult("interleaving preserves reducedness")
    for x in reduced_words(t, max_len):
        for a, y in _valid_interleavings(t, x):
            res.cases += 1
            if not is_reduced(t, y):
                res.fail(f"{t.show(x)} * ({t.show(a)}) = {t.show(y)} is not reduced")
    return res


def check_equivalence_relation(t, max_len, classes) -> CheckResult:
    res = CheckResult("equivalence is reflexive, symmetric, transitive")
    for x, cls in classes.items():
        res.cases += 1
        if x not in cls:
            res.fail(f"not reflexive at {t.show(x)}")
        for y in cls:
            res.cases += 1
            if x not in classes[y]:
                res.fail(f"not symmetric: {t.show(x)} ~ {t.show(y)}")
            if not classes[y] <= cls:
                res.fail(f"not transitive through {t.show(x)} ~ {t.show(y)}")
    return res


def check_interleaver_composition(t, max_len, _classes) -> CheckResult:
    res = CheckResult("composing interleavers")
    for x in reduced_words(t, max_len):
        for a, y in _valid_interleavings(t, x):
            for b, z in _valid_interleavings(t, y):
                res.cases += 1
                try:
                    ab = interleaver_product(t, a, b)
                except UndefinedProduct:
                    res.fail(f"AB undefined for A=({t.show(a)}), B=({t.show(b)})")
                    continue
                if interleave(t, x, ab) != z:
                    res.fail(f"(X*A)*B != X*(AB) at X={t.show(x)}")
                if interleave(t, y, interleaver_inverse(t, a)) != x:
                    res.fail(f"Y*A^-1 != X at X={t.show(x)}")
    return res


def check_decision_procedure(t, max_len, classes) -> CheckResult:
    res = CheckResult("equivalence decision agrees with brute force")
    by_len: dict[int, list] = {}
    for x in classes:
        by_len.setdefault(len(x), []).append(x)
    for x, cls in classes.items():
        if enumerate_class(t, x) != cls:
            res.fail(f"class enumeration differs at {t.show(x)}")
        if canonical_form(t, x) != min(cls):
            res.fail(f"canonical form is not the class minimum at {t.show(x)}")
        for y in by_len[len(x)]:
            res.cases += 1
            a = equivalent(t, x, y)
            if (a is not None) != (y in cls):
                res.fail(f"decision wrong for {t.show(x)} vs {t.show(y)}")
            elif a is not None and interleave(t, x, a) != y:
                res.fail(f"bad witness for {t.show(x)} vs {t.show(y)}")
    return res


def check_action(t, max_len, classes) -> CheckResult:
    """Reducedness, composition up to equivalence, class invariance, inverses."""
    res = CheckResult("action on reduced words")

    def same_class(u, v):
        return canonical_form(t, u) == canonical_form(t, v)

    for x in classes:
        for a in t.elements:
            res.cases += 1
            ax = act(t, a, x)
            if not is_reduced(t, ax):
                res.fail(f"act({t.name(a)}, {t.show(x)}) not reduced")
                continue
            if not same_class(act(t, t.inv(a), ax), x):
                res.fail(f"inverse action fails at {t.name(a)}, {t.show(x)}")
            for b in t.right_partners(a):
                if not same_class(act(t, t.mul(a, b), x), act(t, a, act(t, b, x))):
                    res.fail(f"act(ab) != act(a)act(b) at a={t.name(a)}, b={t.name(b)}, X={t.show(x)}")
                # b x_1 and (b x_1) x_2 defined with a (b x_1) undefined cannot happen
                if act_case(t, b, x) == 3 and not t.is_defined(a, t.mul(b, x[0])):
                    res.fail(f"impossible subcase reached at a={t.name(a)}, b={t.name(b)}, X={t.show(x)}")
            for y in classes[x]:
                if not same_class(ax, act(t, a, y)):
                    res.fail(f"action not class-invariant at {t.name(a)}, {t.show(x)} ~ {t.show(y)}")
    return res


def check_normal_forms(t, max_len, _classes) -> CheckResult:
    res = CheckResult("reduction and action give the same normal form")
    for w in all_words(t, max_len):
        res.cases += 1
        left = reduce_leftmost(t, w)
        if canonical_form(t, left) != canonical_form(t, lambda_fold(t, w)):
            res.fail(f"normal forms differ for {t.show(w)}")
        ends = reduce_all(t, w)
        if left not in ends:
            res.fail(f"leftmost reduction of {t.show(w)} not among all reductions")
        if len({canonical_form(t, v) for v in ends}) != 1:
            res.fail(f"reductions of {t.show(w)} are not all equivalent")
    return res


def check_embedding(t, max_len, _classes) -> CheckResult:
    res = CheckResult("embedding into the universal group")
    embedded = [u_embed(t, x) for x in t.elements]
    for x, y in itertools.combinations(t.elements, 2):
        res.cases += 1
        if embedded[x] == embedded[y]:
            res.fail(f"{t.name(x)} and {t.name(y)} collapse")
    for (x, y), z in sorted(t.product.items()):
        res.cases += 1
        if u_mul(embedded[x], embedded[y]) != embedded[z]:
            res.fail(f"embedding does not preserve {t.name(x)}*{t.name(y)}")
        if u_from_word(t, (x, y)) != embedded[z]:
            res.fail(f"word ({t.name(x)} {t.name(y)}) is not {t.name(z)}")
    return res


CHECKS: list[Callable[..., CheckResult]] = [
    check_axioms_all,
    check_lemmas_all,
    check_interleave_reduced,
    check_equivalence_relation,
    check_interleaver_composition,
    check_decision_procedure,
    check_action,
    check_normal_forms,
    check_embedding,
]


def run_selftest(t: PregroupTable, max_len: int = 3) -> list[CheckResult]:
    axioms = check_axioms(t)
    if not axioms.ok:
        # everything downstream assumes a pregroup
        return [check_axioms_all(t, max_len, None)]
    classes = brute_classes(t, max_len)
    return [check(t, max_len, classes) for check in CHECKS]
