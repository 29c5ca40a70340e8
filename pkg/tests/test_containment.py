from itertools import combinations, permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_contains, brute_exact, rotations
from superpatterns.containment import (
    Witness,
    contains_circular,
    contains_pattern,
    exact_cyclic_subsequence,
    exact_subsequence,
    witness_is_valid,
)
from superpatterns.perm import Permutation, rotate
from superpatterns.zigzag import zz

perms = st.integers(1, 8).flatmap(lambda n: st.permutations(range(1, n + 1))).map(tuple)
small_perms = st.integers(1, 4).flatmap(lambda n: st.permutations(range(1, n + 1))).map(tuple)
words = st.lists(st.integers(1, 5), max_size=10)


def test_contains_pattern_examples():
    w = contains_pattern((3, 2, 1, 4, 5), (2, 1, 3, 4))
    # {2,3,4,5} also works; the lexicographically least witness is returned
    assert w == Witness(indices=(1, 2, 4, 5))
    assert witness_is_valid((3, 2, 1, 4, 5), (2, 1, 3, 4), Witness(indices=(2, 3, 4, 5)))
    assert contains_pattern((3, 2, 1, 4, 5), (3, 2, 1, 4, 5)).indices == (1, 2, 3, 4, 5)
    assert contains_pattern((1, 2, 3), (2, 1)) is None
    assert contains_pattern((1, 2), (1, 2, 3)) is None
    assert contains_pattern((1, 2), ()) == Witness(indices=())


def test_contains_pattern_in_words_never_uses_ties():
    # (1 1) cannot host (1 2) or (2 1)
    assert contains_pattern((1, 1), (1, 2)) is None
    assert contains_pattern((1, 1), (2, 1)) is None
    assert contains_pattern((1, 3, 3, 2), (1, 3, 2)).indices == (1, 2, 4)


@pytest.mark.parametrize("n", range(1, 7))
@pytest.mark.parametrize("k", range(1, 5))
def test_contains_pattern_matches_brute_force(n, k):
    if k > n:
        return
    for host in permutations(range(1, n + 1)):
        for sigma in permutations(range(1, k + 1)):
            w = contains_pattern(host, sigma)
            expected = brute_contains(host, sigma)
            assert (None if w is None else w.indices) == expected


@settings(max_examples=300)
@given(words, small_perms)
def test_contains_pattern_in_words_matches_brute_force(word, sigma):
    w = contains_pattern(word, sigma)
    assert (None if w is None else w.indices) == brute_contains(word, sigma)


@given(perms, small_perms)
def test_circular_witness_sound_and_rotation_invariant(host, sigma):
    w = contains_circular(host, sigma)
    hits = [brute_contains(host, r) for r in rotations(sigma)]
    assert (w is None) == all(h is None for h in hits)
    if w is not None:
        assert witness_is_valid(host, sigma, w)
        assert w.rotation == next(i for i, h in enumerate(hits) if h is not None)
    for r in range(len(sigma)):
        assert (contains_circular(host, rotate(sigma, r)) is None) == (w is None)


def test_contains_circular_examples():
    host = (8, 4, 6, 2, 7, 1, 3, 5, 9)
    for sigma in permutations(range(1, 6)):
        w = contains_circular(host, sigma)
        assert w is not None and witness_is_valid(host, sigma, w)
    assert contains_circular(host, (1,)) == Witness(indices=(1,), rotation=0)
    # an increasing host only holds increasing patterns; no rotation of 213 is increasing
    assert contains_circular((1, 2, 3, 4, 5), (2, 1, 3)) is None
    assert contains_circular((1, 2, 3, 4, 5), (2, 3, 1)) == Witness(indices=(1, 2, 3), rotation=2)


def test_exact_subsequence_examples():
    w = zz(3, 4)
    assert tuple(w) == (1, 3, 4, 2, 1, 3)
    assert exact_subsequence(w, (2, 1)) == (4, 5)
    assert exact_subsequence(w, ()) == ()
    assert exact_subsequence((1, 3, 4, 2), (2, 1)) is None


@given(words, st.lists(st.integers(1, 5), max_size=4))
def test_exact_subsequence_is_least_witness(word, s):
    assert exact_subsequence(word, s) == brute_exact(word, s)


def test_exact_cyclic_subsequence_examples():
    w = zz(2, 4)
    assert exact_cyclic_subsequence(w, (3, 1, 2)) is None
    assert exact_cyclic_subsequence(w, (4, 2, 3)) == Witness(indices=(2, 3, 4), rotation=2)
    assert exact_cyclic_subsequence(w, (4,)) == Witness(indices=(3,), rotation=0)
    assert exact_cyclic_subsequence((1, 3, 2, 1, 3), (2, 1, 3)) == Witness(indices=(3, 4, 5))


def test_word_cyclic_witness_reports_shift():
    hit = exact_cyclic_subsequence((3, 1, 2), (1, 2, 3), word_cyclic=True)
    # smallest pattern rotation first, then the smallest word shift
    assert hit == Witness(indices=(1, 2, 3), rotation=0, word_shift=1)
    assert exact_cyclic_subsequence((3, 1, 2), (1, 2, 3)) == Witness(indices=(1, 2, 3), rotation=2)
    assert witness_is_valid((3, 1, 2), (1, 2, 3), hit, exact=True)


@given(words, st.lists(st.integers(1, 5), min_size=1, max_size=4))
def test_cyclic_semantics_agree_on_presence(word, s):
    # a match A.B read across the end of the word puts B before A, so the
    # rotation B.A already matches linearly
    linear = exact_cyclic_subsequence(word, s)
    wrapped = exact_cyclic_subsequence(word, s, word_cyclic=True)
    assert (linear is None) == (wrapped is None)


@given(words, st.lists(st.integers(1, 5), min_size=1, max_size=4), st.booleans())
def test_exact_cyclic_witness_valid(word, s, cyclic):
    hit = exact_cyclic_subsequence(word, s, word_cyclic=cyclic)
    brute_any = any(
        brute_exact(word[t:] + word[:t], r) is not None
        for r in rotations(s)
        for t in (range(max(1, len(word))) if cyclic else (0,))
    )
    assert (hit is not None) == brute_any
    if hit is not None:
        assert witness_is_valid(word, s, hit, exact=True)
        if not cyclic:
            assert hit.word_shift == 0


def test_witness_is_valid_rejects_wrong_witnesses():
    host = (3, 2, 1, 4, 5)
    assert witness_is_valid(host, (2, 1, 3, 4), Witness((2, 3, 4, 5)))
    assert not witness_is_valid(host, (2, 1, 3, 4), Witness((1, 2, 3, 4)))
    assert not witness_is_valid(host, (2, 1, 3, 4), Witness((2, 3, 4, 9)))
    assert not witness_is_valid(host, (1, 2), Witness((2, 1)))


def test_every_subset_of_small_host_is_found():
    host = Permutation((2, 5, 3, 1, 4))
    for J in combinations(range(5), 3):
        vals = [host[j] for j in J]
        sigma = tuple(sorted(vals).index(v) + 1 for v in vals)
        assert contains_pattern(host, sigma) is not None
