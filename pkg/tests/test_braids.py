import random

import pytest
from hypothesis import given, strategies as st

from singbt.braids import (
    GenTok,
    Word,
    closure_components,
    conjugate,
    conjugate_by,
    parse_token,
    random_word,
    stabilize,
    underlying_permutation,
)
from singbt.partitions import Permutation


def test_parse_tokens():
    assert parse_token("s3") == GenTok("sigma", 3)
    assert parse_token("s2^-1") == GenTok("sigma_inv", 2)
    assert parse_token("t1") == GenTok("tau", 1)
    assert parse_token("e4") == GenTok("tie", 4)
    for bad in ("x", "t1^-1", "s0", "s"):
        with pytest.raises(ValueError):
            parse_token(bad)


def test_word_strands():
    assert Word.parse("s1 s3").n == 4
    assert Word.parse("").n == 1
    with pytest.raises(ValueError):
        Word.parse("s3", 3)


def test_underlying_permutation():
    assert underlying_permutation(Word.parse("s1")) == Permutation.transposition(2, 1)
    assert underlying_permutation(Word.parse("t1 s1^-1")).is_identity()
    three = underlying_permutation(Word.parse("s1 s2"))
    assert three.cycles() == [(1, 2, 3)]


def test_closure_components():
    assert closure_components(Word(1)) == (1, [1])
    assert closure_components(Word.parse("s1 s1 s1"))[0] == 1
    assert closure_components(Word.parse("t1 s1^-1")) == (2, [1, 2])
    assert closure_components(Word.parse("s2", 4)) == (3, [1, 2, 2, 3])


def test_random_words():
    assert random_word(2, 0, ["sigma"], 7) == Word(2)
    assert random_word(3, 9, ["sigma", "tau"], 5) == random_word(3, 9, ["sigma", "tau"], 5)
    word = random_word(3, 6, ["sigma", "sigma_inv", "tau"], 42)
    assert len(word) == 6 and word.n == 3
    assert all(1 <= t.index <= 2 and t.kind in ("sigma", "sigma_inv", "tau") for t in word.toks)


def test_markov_moves():
    word = Word.parse("s1 t2 s2^-1")
    assert str(conjugate(word, 1)) == "t2 s2^-1 s1"
    assert str(conjugate_by(word, GenTok("sigma", 1))) == "s1^-1 s1 t2 s2^-1 s1"
    assert stabilize(word, False) == Word.parse("s1 t2 s2^-1 s3^-1")


words = st.builds(
    lambda n, data: Word(n, [GenTok(k, i) for k, i in data]),
    st.just(4),
    st.lists(st.tuples(st.sampled_from(["sigma", "sigma_inv", "tau", "tie"]), st.integers(1, 3)),
             max_size=8),
)


@given(words, words)
def test_permutation_is_a_homomorphism(p, q):
    assert underlying_permutation(p + q) == underlying_permutation(p) * underlying_permutation(q)


@given(words, st.integers(0, 10))
def test_rotation_preserves_component_count(word, k):
    assert closure_components(conjugate(word, k))[0] == closure_components(word)[0]


@given(words)
def test_stabilization_preserves_component_count(word):
    for positive in (True, False):
        assert closure_components(stabilize(word, positive))[0] == closure_components(word)[0]


@given(st.integers(0, 1000))
def test_random_words_are_reproducible(seed):
    rng1, rng2 = random.Random(seed), random.Random(seed)
    from singbt.braids import random_singular_word

    w1 = random_singular_word(rng1, 3, 8, 2)
    assert w1 == random_singular_word(rng2, 3, 8, 2)
    assert w1.singular_degree() <= 2
