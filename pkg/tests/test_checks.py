"""Skein relations, Markov moves with ties, and the cases where they break."""

import random

from singbt import btalgebra as bt
from singbt.braids import Word, closure_components
from singbt.checks import (
    SkeinTriple,
    desing_plain,
    desing_prime,
    desing_tied,
    markov_suite,
    random_triple,
    run_suite,
    skein_rule3,
    smoothing_partition,
    tie_factor_suite,
)
from singbt.partitions import SetPartition, enumerate_partitions
from singbt.scalars import Scalar

P = SetPartition.parse
a, b, x, y, z = (Scalar.var(c) for c in "abxyz")
w = Scalar.w()

UNKNOT_CROSSING = SkeinTriple(Word(2), 1, Word(2))


def _triples(seed, count, classical):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(2, 3)
        t = random_triple(rng, n, 3, classical_alpha=classical, max_degree=0 if classical else 2)
        cnt, _ = closure_components(t.with_middle("sigma"))
        yield t, rng.choice(enumerate_partitions(cnt))


def test_smoothing_partition():
    assert smoothing_partition(UNKNOT_CROSSING, P("1", 1)) == (P("1,2", 2), "split")
    hopf = SkeinTriple(Word.parse("s1"), 1, Word(2))
    assert smoothing_partition(hopf, P("1|2", 2)) == (P("1", 1), "merge")


def test_tie_skein_relation():
    assert skein_rule3(UNKNOT_CROSSING, P("1", 1))
    assert all(skein_rule3(t, p) for t, p in _triples(3, 20, True))


def test_tie_skein_relation_with_swapped_coefficients_fails():
    assert not skein_rule3(UNKNOT_CROSSING, P("1", 1), printed=True)
    assert not any(skein_rule3(t, p, printed=True) for t, p in _triples(3, 20, True))


def test_desingularization_rules():
    for t, p in _triples(5, 15, False):
        assert desing_prime(t, p)
        assert desing_plain(t)


def test_tied_desingularization():
    for t, p in _triples(9, 20, True):
        assert desing_tied(t, p)


def test_tied_desingularization_needs_the_new_component_tied():
    # smoothing a self-crossing: leaving the new component untied breaks the rule
    assert desing_tied(UNKNOT_CROSSING, P("1", 1), split_rule="attach")
    assert not desing_tied(UNKNOT_CROSSING, P("1", 1), split_rule="plus")


def test_tie_factor():
    assert all(o.passed for o in tie_factor_suite())
    word = Word.parse("t1")
    assert bt.invariant(word.with_strands(3), P("1,2", 2)) == b / (a * w) * bt.invariant(word, P("1", 1))


def test_untied_markov_moves():
    assert all(o.passed for o in markov_suite(count=25, seed=3))


def test_tied_markov_moves_for_upsilon_prime():
    assert all(o.passed for o in markov_suite(count=25, seed=4, tied=True, modes=("upsilon_prime",)))


def test_tied_upsilon_is_not_conjugation_invariant():
    # rotating s1 s1 t2 t2 by three letters swaps strands 2 and 3
    before = (Word.parse("s1 s1 t2 t2"), P("1,2", 3))
    after = (Word.parse("t2 s1 s1 t2"), P("1,3", 3))
    assert bt.invariant(*before) != bt.invariant(*after)
    assert bt.invariant(*before, mode="upsilon_prime") == bt.invariant(*after, mode="upsilon_prime")


def test_ties_within_a_component():
    trefoil = Word.parse("s1 s1 s1")
    assert bt.invariant(trefoil, P("1", 1)) == bt.invariant(trefoil)
    tau = Word.parse("t1")
    assert bt.invariant(tau, P("1", 1), mode="upsilon_prime") == bt.invariant(tau, mode="upsilon_prime")
    # under rho the singular crossing sees the tie between its own strands
    assert bt.invariant(tau, P("1", 1)) == x * b / (a * w) + y + z
    assert bt.invariant(tau, P("1", 1)) != bt.invariant(tau)


def test_suite_runner():
    outcomes = run_suite("graded")
    assert outcomes and all(o.passed for o in outcomes)
    failing = {o.label.split("(")[0] for o in run_suite("relations") if not o.passed}
    assert failing == {"TSB2", "TSB3"}
