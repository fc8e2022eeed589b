"""The package pipeline against the independently coded one-parameter oracle."""

import random

import pytest

import oracle_one_param as oracle
from singbt import btalgebra as bt
from singbt.braids import Word, random_singular_word, random_word
from singbt.scalars import VARIABLES


def to_field(rf):
    """RationalFunction in u, a, b, x, y -> oracle field element."""
    gens = {"u": oracle.u, "a": oracle.a, "b": oracle.b, "x": oracle.x, "y": oracle.y}

    def poly(p):
        total = oracle.K.zero
        for exps, c in p.terms.items():
            term = oracle.K(c.numerator) / c.denominator if hasattr(c, "numerator") else oracle.K(c)
            for name, e in zip(VARIABLES, exps):
                if e:
                    if name not in gens:
                        raise AssertionError(f"unexpected variable {name}")
                    term *= gens[name] ** e
            total += term
        return total

    return poly(rf.num) / poly(rf.den)


def as_pair(value):
    return to_field(value.f0), to_field(value.f1)


def tokens(word):
    return [(t.kind, t.index) for t in word.toks]


def psi_pair(word):
    return as_pair(bt.specialize_invariant(bt.invariant(word), "psi"))


def test_oracle_trace_rules():
    assert oracle.trace(2, oracle.word_element(2, [("sigma", 1)])) == oracle.a
    assert oracle.trace(2, oracle.word_element(2, [("tie", 1)])) == oracle.b


@pytest.mark.parametrize("text", ["", "s1", "s1 s1 s1", "s1^-1 s2 s1^-1 s2", "s1 s2 s3 s1^-1"])
def test_psi_on_fixed_words(text):
    word = Word.parse(text)
    assert psi_pair(word) == oracle.psi(word.n, tokens(word))


def test_psi_on_random_classical_words():
    rng = random.Random(2024)
    for k in range(30):
        n = rng.randint(2, 4)
        word = random_word(n, rng.randint(1, 8), ["sigma", "sigma_inv"], rng.randrange(10 ** 6))
        assert psi_pair(word) == oracle.psi(n, tokens(word)), str(word)


def test_psi_on_random_singular_words():
    rng = random.Random(7)
    for _ in range(15):
        n = rng.randint(2, 4)
        word = random_singular_word(rng, n, rng.randint(1, 6), 2)
        assert psi_pair(word) == oracle.invariant(n, tokens(word), "psi"), str(word)


@pytest.mark.expected
def test_phi_recovered_from_upsilon_prime():
    """Holds by construction; not an acceptance gate."""
    rng = random.Random(11)
    for _ in range(15):
        n = rng.randint(2, 4)
        word = random_singular_word(rng, n, rng.randint(1, 6), 2)
        value = bt.specialize_invariant(bt.invariant(word, mode="upsilon_prime"), "psi")
        assert as_pair(value) == oracle.invariant(n, tokens(word), "phi"), str(word)
