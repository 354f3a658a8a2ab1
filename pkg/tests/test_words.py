import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pregroup import (
    UndefinedProduct,
    canonical_form,
    enumerate_class,
    equivalent,
    equivalent_bruteforce,
    interleave,
    interleaver_product,
    is_reduced,
    reduce_all,
    reduce_leftmost,
)
from pregroup.words import (
    CapExceeded,
    EmptyWord,
    LengthMismatch,
    NotReduced,
    make_word,
    reduced_words,
)


def literal_leftmost(t, w):
    """Rescan from the left after every single reduction."""
    w = list(w)
    while True:
        for i in range(len(w) - 1):
            if t.is_defined(w[i], w[i + 1]):
                w[i : i + 2] = [t.mul(w[i], w[i + 1])]
                break
        else:
            return tuple(w)


def test_is_reduced(p8):
    assert is_reduced(p8, p8.word("a1 b1"))
    assert not is_reduced(p8, p8.word("a1 a1"))
    for x in p8.elements:
        assert is_reduced(p8, (x,))


def test_empty_words_rejected(p8):
    with pytest.raises(EmptyWord):
        make_word(())
    with pytest.raises(EmptyWord):
        reduce_leftmost(p8, ())


def test_reduce_leftmost_examples(p8):
    assert reduce_leftmost(p8, p8.word("a1 a1 b1")) == p8.word("b4")
    assert reduce_leftmost(p8, p8.word("a1 a3")) == p8.word("e")
    w = p8.word("a1 b1 a3")
    assert reduce_leftmost(p8, w) == w


def test_reduce_all_examples(p8):
    assert reduce_all(p8, p8.word("a1 a3")) == {p8.word("e")}
    assert reduce_all(p8, p8.word("a1 a1 b1")) == {p8.word("b4")}
    w = p8.word("a1 b1")
    assert reduce_all(p8, w) == {w}
    with pytest.raises(CapExceeded):
        reduce_all(p8, p8.word("a1 a1 a1 a1 a1"), cap=2)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(0, 7), min_size=1, max_size=7))
def test_stack_reduction_is_leftmost(p8, w):
    assert reduce_leftmost(p8, w) == literal_leftmost(p8, w)


def test_interleave_examples(p8):
    x = p8.word("a1 b1")
    assert interleave(p8, x, p8.word("c")) == p8.word("a3 b4")
    assert interleave(p8, x, (p8.identity,)) == x
    with pytest.raises(UndefinedProduct) as err:
        interleave(p8, x, p8.word("a1"))
    assert err.value.position == 1
    with pytest.raises(LengthMismatch):
        interleave(p8, x, ())
    assert interleave(p8, p8.word("b2"), ()) == p8.word("b2")


def direct_interleave(t, x, a):
    bounds = (t.identity, *a, t.identity)
    out = []
    for i, xi in enumerate(x):
        before, after = t.inv(bounds[i]), bounds[i + 1]
        if not (t.is_defined(xi, after) and t.is_defined(before, xi)):
            return None
        head = t.mul(before, xi)
        if not t.is_defined(head, after):
            return None
        out.append(t.mul(head, after))
    return tuple(out)


def test_interleave_on_arbitrary_words(p8):
    for x in itertools.product(p8.elements, repeat=3):
        for a in itertools.product(p8.elements, repeat=2):
            expected = direct_interleave(p8, x, a)
            if expected is None:
                with pytest.raises(UndefinedProduct):
                    interleave(p8, x, a)
            else:
                assert interleave(p8, x, a) == expected


def test_interleaver_product_examples(p8):
    c = p8.index("c")
    assert interleaver_product(p8, (c,), (c,)) == (p8.identity,)
    b = p8.word("a3 b5")
    assert interleaver_product(p8, (p8.identity,) * 2, b) == b
    with pytest.raises(UndefinedProduct):
        interleaver_product(p8, p8.word("a1"), p8.word("b1"))


def test_equivalent_examples(p8):
    assert equivalent(p8, p8.word("a1 b1"), p8.word("a3 b4")) == p8.word("c")
    x = p8.word("b1 a1 b2")
    assert equivalent(p8, x, x) == (p8.identity,) * 2
    assert equivalent(p8, p8.word("a1 b1"), p8.word("a1 b2")) is None
    assert equivalent(p8, p8.word("a1 b1"), p8.word("a1")) is None
    with pytest.raises(NotReduced):
        equivalent(p8, p8.word("a1 a1"), p8.word("c"))


def test_equivalent_bruteforce_examples(p8):
    assert equivalent_bruteforce(p8, p8.word("a1 b1"), p8.word("a3 b4"))
    assert equivalent_bruteforce(p8, p8.word("a1 b1"), p8.word("a1 b1"))
    assert not equivalent_bruteforce(p8, p8.word("a1"), p8.word("a3"))


def test_enumerate_class_examples(p8):
    assert enumerate_class(p8, p8.word("a1 b1")) == {p8.word("a1 b1"), p8.word("a3 b4")}
    for x in p8.elements:
        assert enumerate_class(p8, (x,)) == {(x,)}


def test_canonical_form_examples(p8):
    assert canonical_form(p8, p8.word("a3 b4")) == p8.word("a1 b1")
    for x in p8.elements:
        assert canonical_form(p8, (x,)) == (x,)
    with pytest.raises(NotReduced):
        canonical_form(p8, p8.word("a1 a1"))


@pytest.fixture(scope="module")
def p8_reduced(p8):
    return reduced_words(p8, 3)


def test_reduced_words_enumeration(p8, p8_reduced):
    expected = [w for n in (1, 2, 3) for w in itertools.product(p8.elements, repeat=n) if is_reduced(p8, w)]
    assert sorted(p8_reduced) == sorted(expected)


def test_class_structure_against_bruteforce(p8, p8_reduced):
    by_len = {}
    for w in p8_reduced:
        by_len.setdefault(len(w), []).append(w)
    for x in p8_reduced:
        cls = enumerate_class(p8, x)
        brute = {y for y in by_len[len(x)] if equivalent_bruteforce(p8, x, y)}
        assert cls == brute
        canon = canonical_form(p8, x)
        assert canon == min(brute)
        assert canonical_form(p8, canon) == canon
        assert len(canon) == len(x)


def test_symmetry_via_inverse_interleaver(p8, p8_reduced):
    for x in p8_reduced:
        for y in enumerate_class(p8, x):
            a = equivalent(p8, x, y)
            assert interleave(p8, y, tuple(p8.inv(v) for v in a)) == x


def test_subgroup_pregroup_classes(s3):
    from pregroup import subgroup_pregroup

    t = subgroup_pregroup(s3, ["e", "s"])
    words = reduced_words(t, 3)
    for x in words:
        assert enumerate_class(t, x) == {
            y for y in words if len(y) == len(x) and equivalent_bruteforce(t, x, y)
        }
