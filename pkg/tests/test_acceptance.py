"""Acceptance criteria, each at its stated scale and tolerance."""

import itertools
import random
import time

import pytest

from pregroup import (
    act,
    amalgam_oracle_eq,
    amalgam_pregroup,
    bab_pregroup,
    canonical_form,
    check_axioms,
    check_lemmas,
    enumerate_class,
    equivalent,
    equivalent_bruteforce,
    hnn_pregroup,
    interleave,
    is_reduced,
    lambda_fold,
    reduce_all,
    reduce_leftmost,
    subgroup_pregroup,
    tree_of_groups,
    tree_pregroup,
    u_embed,
    u_from_word,
    u_identity,
    u_inv,
    u_mul,
)
from pregroup.cli import main
from pregroup.table import UndefinedProduct, find_isomorphism
from pregroup.tablefile import parse_table, serialize_table
from pregroup.words import all_words, reduced_words


@pytest.fixture(scope="module")
def reduced3(p8):
    return reduced_words(p8, 3)


@pytest.fixture(scope="module")
def brute_relation(p8, reduced3):
    """All (X, Y) with equivalent_bruteforce(X, Y), for reduced words of length <= 3."""
    return {
        (x, y)
        for x, y in itertools.product(reduced3, repeat=2)
        if len(x) == len(y) and equivalent_bruteforce(p8, x, y)
    }


@pytest.mark.criterion(1, "amalgam Z4 *_Z2 Z6: 8 elements, axioms 1-5 and lemmas 2.1-2.6, < 1 s")
def test_c01_axiom_certification(span):
    start = time.perf_counter()
    t = amalgam_pregroup(*span)
    axioms, lemmas = check_axioms(t), check_lemmas(t)
    elapsed = time.perf_counter() - start
    assert len(t) == 8
    assert axioms.ok and sorted(axioms.results) == [1, 2, 3, 4, 5]
    assert lemmas.ok and sorted(lemmas.results) == ["2.1", "2.2", "2.3", "2.4", "2.5", "2.6"]
    assert elapsed < 1.0


@pytest.mark.criterion(2, "interleaving a reduced word (|X| <= 3, every interleaver) stays reduced")
def test_c02_lemma_one(p8, reduced3):
    checked = 0
    for x in reduced3:
        for a in itertools.product(p8.elements, repeat=len(x) - 1):
            try:
                y = interleave(p8, x, a)
            except UndefinedProduct:
                continue
            checked += 1
            assert is_reduced(p8, y), (x, a, y)
    assert checked > len(reduced3)


@pytest.mark.criterion(3, "brute-force equivalence is reflexive, symmetric, transitive (|X| <= 3)")
def test_c03_lemma_two(reduced3, brute_relation):
    related = {}
    for x, y in brute_relation:
        related.setdefault(x, set()).add(y)
    for x in reduced3:
        assert (x, x) in brute_relation
    for x, y in brute_relation:
        assert (y, x) in brute_relation
        for z in related[y]:
            assert (x, z) in brute_relation


@pytest.mark.criterion(4, "equivalent and enumerate_class agree with brute force on all pairs (|X| <= 3)")
def test_c04_decision_procedure(p8, reduced3, brute_relation):
    pairs = 0
    for x, y in itertools.product(reduced3, repeat=2):
        pairs += 1
        a = equivalent(p8, x, y)
        assert (a is not None) == ((x, y) in brute_relation), (x, y)
        if a is not None:
            assert interleave(p8, x, a) == y
    assert pairs == len(reduced3) ** 2 >= 1000
    for x in reduced3:
        assert enumerate_class(p8, x) == {y for y in reduced3 if (x, y) in brute_relation}


@pytest.mark.criterion(5, "action: results reduced, act(ab) ~ act(a)act(b), class invariant (|X| <= 3), < 10 s")
def test_c05_lemmas_three_four(p8, reduced3):
    start = time.perf_counter()

    def same(u, v):
        return equivalent(p8, u, v) is not None

    for x in reduced3:
        for a in p8.elements:
            ax = act(p8, a, x)
            assert is_reduced(p8, ax)
            for b in p8.right_partners(a):
                assert same(act(p8, p8.mul(a, b), x), act(p8, a, act(p8, b, x))), (a, b, x)
            for y in enumerate_class(p8, x):
                assert same(ax, act(p8, a, y)), (a, x, y)
    assert time.perf_counter() - start < 10.0


@pytest.mark.criterion(6, "reduction and action fold give the same normal form for all words |W| <= 4")
def test_c06_cross_path(p8):
    count = 0
    for w in all_words(p8, 4):
        count += 1
        assert canonical_form(p8, reduce_leftmost(p8, w)) == canonical_form(p8, lambda_fold(p8, w))
        ends = sorted(reduce_all(p8, w))
        for u, v in itertools.combinations(ends, 2):
            assert equivalent(p8, u, v) is not None, (w, u, v)
    assert count == 8**4 + 8**3 + 8**2 + 8


@pytest.mark.criterion(7, "embedding into U(P8) is injective (28 pairs) and preserves every defined product")
def test_c07_faithful_embedding(p8):
    pairs = list(itertools.combinations(p8.elements, 2))
    assert len(pairs) == 28
    for x, y in pairs:
        assert u_embed(p8, x) != u_embed(p8, y)
    for (x, y), z in p8.product.items():
        assert u_mul(u_embed(p8, x), u_embed(p8, y)) == u_embed(p8, z)


@pytest.mark.criterion(8, "group laws hold exactly on >= 1000 sampled triples from words |W| <= 4")
def test_c08_group_laws(p8):
    rng = random.Random(20240601)
    e = u_identity(p8)

    def sample():
        n = rng.randint(1, 4)
        return u_from_word(p8, [rng.randrange(len(p8)) for _ in range(n)])

    for _ in range(1000):
        g, h, k = sample(), sample(), sample()
        assert u_mul(u_mul(g, h), k) == u_mul(g, u_mul(h, k))
        assert u_mul(g, e) == g == u_mul(e, g)
        assert u_mul(g, u_inv(g)) == e == u_mul(u_inv(g), g)


@pytest.mark.criterion(9, "classical amalgam normal form agrees with U(P8) equality on all pairs |W| <= 3")
def test_c09_classical_oracle(p8, span):
    words = list(all_words(p8, 3))
    named = {w: [p8.name(x) for x in w] for w in words}
    elems = {w: u_from_word(p8, w) for w in words}
    for w1, w2 in itertools.product(words, repeat=2):
        assert amalgam_oracle_eq(*span, named[w1], named[w2]) == (elems[w1] == elems[w2]), (w1, w2)


@pytest.mark.criterion(10, "subgroup, HNN, bab and tree constructors certified; tree = amalgam; HNN has 14 elements")
def test_c10_constructors(span, s3, z2, z4, p8):
    _, z6, phi, psi = span
    tables = {
        "subgroup transposition": subgroup_pregroup(s3, ["e", "s"]),
        "subgroup index two": subgroup_pregroup(s3, ["e", "r", "r2"]),
        "hnn": hnn_pregroup(z4, ["0", "2"]),
        "bab": bab_pregroup(*span),
        "tree": tree_pregroup(tree_of_groups({"C": z2, "A": z4, "B": z6}, {("C", "A"): phi, ("C", "B"): psi})),
    }
    for name, t in tables.items():
        assert check_axioms(t).ok, name
        assert check_lemmas(t).ok, name
    assert find_isomorphism(tables["tree"], p8) is not None
    index_two = tables["subgroup index two"]
    for x, y in itertools.product(index_two.elements, repeat=2):
        assert not is_reduced(index_two, (x, y))
    assert reduced_words(index_two, 4) == [(x,) for x in index_two.elements]
    assert len(tables["hnn"]) == 14


@pytest.mark.criterion(11, "CLI examples give the stated output and exit codes; table files round-trip byte-identically")
def test_c11_cli(tmp_path, capsys, s3, span, z2, z4):
    path = tmp_path / "p8.json"
    assert main(["gen", "amalgam", "--a", "cyclic:4", "--b", "cyclic:6", "--c", "cyclic:2",
                 "--phi", "1:2", "--psi", "1:3", "-o", str(path)]) == 0
    capsys.readouterr()
    assert main(["reduce", str(path), "a1 a1 b1"]) == 0
    assert capsys.readouterr().out == "b4\n"
    assert main(["equiv", str(path), "a1 b1", "a3 b4"]) == 0
    assert capsys.readouterr().out == "c\n"
    assert main(["equiv", str(path), "a1", "a3"]) == 1

    _, z6, phi, psi = span
    generated = [
        amalgam_pregroup(*span),
        bab_pregroup(*span),
        tree_pregroup(tree_of_groups({"C": z2, "A": z4, "B": z6}, {("C", "A"): phi, ("C", "B"): psi})),
        subgroup_pregroup(s3, ["e", "s"]),
        subgroup_pregroup(s3, ["e", "r", "r2"]),
        hnn_pregroup(z4, ["0", "2"]),
    ]
    for t in generated:
        data = serialize_table(t)
        back = parse_table(data)
        assert back == t
        assert serialize_table(back) == data
