from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from singbt.partitions import (
    Permutation,
    SetPartition,
    all_permutations,
    apply_permutation,
    attach,
    bell,
    drop,
    enumerate_partitions,
    join,
    merge,
    plus,
)

P = SetPartition.parse


def test_join_examples():
    assert join(P("1,2", 3), P("2,3", 3)) == P("1,2,3", 3)
    assert join(P("1,2|4,5", 5), P("2,4", 5)) == P("1,2,4,5", 5)
    I = P("1,3", 4)
    assert join(I, SetPartition.discrete(4)) == I


def test_action_examples():
    s1 = Permutation.transposition(3, 1)
    assert apply_permutation(s1, P("1,3", 3)) == P("2,3", 3)
    assert apply_permutation(Permutation.identity(3), P("1,3", 3)) == P("1,3", 3)
    s2 = Permutation.transposition(3, 2)
    assert apply_permutation(s2 * s1, P("2,3", 3)) == P("1,2", 3)


def test_skein_operations():
    assert plus(P("1,2", 2)) == P("1,2", 3)
    assert merge(P("1,2", 3), 1, 3) == P("1,2,3", 3)
    assert drop(P("1,2|3,4", 4), 1, 2) == P("2,3", 3)
    assert attach(P("1,2", 2), 2) == P("1,2,3", 3)


def test_bell_counts():
    assert [len(enumerate_partitions(n)) for n in range(6)] == [1, 1, 2, 5, 15, 52]
    assert [bell(n) for n in range(8)] == [1, 1, 2, 5, 15, 52, 203, 877]


def test_parse_and_render():
    p = P("1,2|4,6", 6)
    assert str(p) == "1,2|4,6"
    assert p.num_blocks() == 4
    assert p.block_of(4) == (4, 6)
    with pytest.raises(ValueError):
        P("1,7", 6)


def test_reduced_word_and_cycles():
    w = Permutation([2, 3, 1])
    assert w.length() == len(w.reduced_word()) == 2
    prod = Permutation.identity(3)
    for j in w.reduced_word():
        prod = prod * Permutation.transposition(3, j)
    assert prod == w
    assert w.cycles() == [(1, 2, 3)]


# -- properties --------------------------------------------------------------


@st.composite
def partitions(draw, n=None):
    n = n if n is not None else draw(st.integers(1, 5))
    return draw(st.sampled_from(enumerate_partitions(n)))


@st.composite
def same_size(draw, k):
    n = draw(st.integers(1, 5))
    return [draw(st.sampled_from(enumerate_partitions(n))) for _ in range(k)]


@given(same_size(3))
def test_join_is_a_semilattice(ps):
    p, q, r = ps
    assert join(p, q) == join(q, p)
    assert join(join(p, q), r) == join(p, join(q, r))
    assert join(p, p) == p
    assert p.refines(join(p, q))


@given(same_size(2), st.data())
def test_action_is_a_lattice_automorphism(ps, data):
    p, q = ps
    w = data.draw(st.sampled_from(all_permutations(p.n)))
    assert apply_permutation(w, join(p, q)) == join(apply_permutation(w, p), apply_permutation(w, q))
    assert apply_permutation(w.inverse(), apply_permutation(w, p)) == p


@given(partitions(), st.data())
def test_action_composes(p, data):
    w = data.draw(st.sampled_from(all_permutations(p.n)))
    v = data.draw(st.sampled_from(all_permutations(p.n)))
    assert apply_permutation(w * v, p) == apply_permutation(w, apply_permutation(v, p))


@given(st.integers(1, 5))
def test_enumeration_has_no_repeats(n):
    parts = enumerate_partitions(n)
    assert len(set(parts)) == len(parts) == bell(n)


@given(st.integers(1, 5))
def test_permutation_group(n):
    perms = all_permutations(n)
    assert len(perms) == len(list(permutations(range(n))))
    for w in perms[:10]:
        assert (w * w.inverse()).is_identity()
