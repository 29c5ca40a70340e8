from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import brute_exact
from superpatterns.perm import lift, rotate
from superpatterns.zigzag import (
    ScoreReport,
    ZigzagSpec,
    break_ties,
    circular_score,
    greedy_place,
    initial_cost,
    local_cost,
    min_runs,
    parity_sign,
    run,
    score,
    shifted_score,
    zz,
)

perms = st.integers(1, 7).flatmap(lambda n: st.permutations(range(1, n + 1))).map(tuple)


def test_runs():
    assert run(1, 4) == (1, 3)
    assert run(2, 4) == (4, 2)
    assert run(3, 4) == (1, 3)
    assert run(1, 5) == (1, 3, 5)
    assert run(2, 5) == (4, 2)
    assert run(1, 2) == (1,) and run(2, 2) == (2,)
    with pytest.raises(ValueError):
        run(0, 4)
    with pytest.raises(ValueError):
        run(1, 1)


def test_zz_words():
    assert zz(3, 4) == (1, 3, 4, 2, 1, 3)
    assert zz(4, 4) == (1, 3, 4, 2, 1, 3, 4, 2)
    assert zz(5, 5) == (1, 3, 5, 4, 2, 1, 3, 5, 4, 2, 1, 3, 5)
    assert zz(ZigzagSpec(3, 4)) == zz(3, 4)
    assert zz(1, 2) == (1,)
    assert zz(4, 2) == (1, 2, 1, 2)
    assert zz(3, 4).q == 4
    with pytest.raises(ValueError):
        ZigzagSpec(0, 4)


@pytest.mark.parametrize("m", range(1, 9))
@pytest.mark.parametrize("q", range(2, 10))
def test_zz_length(m, q):
    assert len(zz(m, q)) == sum(len(run(j, q)) for j in range(1, m + 1))


@pytest.mark.parametrize("k", [3, 5, 7, 9])
def test_odd_k_short_word_length(k):
    assert len(zz(k - 1, k + 1)) == (k - 1) * (k + 1) // 2


def test_break_ties():
    assert break_ties((1, 3, 2, 1, 3)) == (2, 5, 3, 1, 4)
    assert break_ties(zz(3, 3)) == (2, 5, 3, 1, 4)
    assert break_ties((1, 3, 4, 2, 1, 3, 4, 5, 4)) == (2, 5, 8, 3, 1, 4, 7, 9, 6)
    assert break_ties((1, 2, 3)) == (1, 2, 3)
    with pytest.raises(ValueError):
        break_ties(())


@given(st.lists(st.integers(1, 6), min_size=1, max_size=12))
def test_break_ties_preserves_strict_order(word):
    zeta = break_ties(word)
    for i in range(len(word)):
        for j in range(i + 1, len(word)):
            if word[i] != word[j]:
                assert (zeta[i] < zeta[j]) == (word[i] < word[j])
            else:
                # equal letters: the later one gets the smaller rank
                assert zeta[i] > zeta[j]


def test_parity_and_costs():
    assert parity_sign(2) == 1 and parity_sign(1) == -1 and parity_sign(7) == -1
    assert local_cost(1, 3) == -1
    assert local_cost(2, 3) == 0
    assert local_cost(4, 4) == 1
    assert local_cost(4, 2) == -1
    assert local_cost(3, 1) == 1
    assert local_cost(2, 4) == 1
    assert initial_cost(1) == 0 and initial_cost(2) == 1 and initial_cost(5) == 0


def test_local_cost_case_table():
    for x in range(1, 12):
        for y in range(1, 12):
            c = local_cost(x, y)
            if x == y:
                assert c == 1
            elif x % 2 != y % 2:
                assert c == 0
            elif x % 2 == 1:
                assert c == (-1 if y > x else 1)
            else:
                assert c == (-1 if y < x else 1)


def test_lift_flips_local_cost():
    for x in range(1, 11):
        for y in range(1, 11):
            if x != y:
                assert local_cost(x + 1, y + 1) == -local_cost(x, y)


def test_score_examples():
    assert score((1, 2, 3)).total == 0
    assert score((2, 1)).total == 1
    assert score((3, 2)).total == 0
    assert score((3, 1, 2)).total == 1
    assert score((4, 2, 3)).total == 0
    report = score((3, 1, 2))
    assert report.kind == "linear" and report.initial == 0
    assert report.steps == ((3, 1, 1), (1, 2, 0))
    with pytest.raises(ValueError):
        score(())
    with pytest.raises(ValueError):
        score((1, 1))


def test_score_report_total_is_sum():
    r = ScoreReport("linear", ((1, 2, 0), (2, 4, 1)), 1)
    assert r.total == 2
    assert r.to_dict() == {"kind": "linear", "steps": [[1, 2, 0], [2, 4, 1]], "initial": 1, "total": 2}


def test_circular_score_examples():
    assert circular_score((1, 2, 3)).total == 1
    assert circular_score((2, 3, 4)).total == -1
    assert circular_score((2, 1, 4, 3)).total == 0
    assert circular_score((1, 2, 3)).initial is None
    assert len(circular_score((1, 2, 3)).steps) == 3


@given(perms)
def test_circular_score_rotation_invariant(sigma):
    total = circular_score(sigma).total
    assert all(circular_score(rotate(sigma, r)).total == total for r in range(len(sigma)))


def test_shifted_score_examples():
    assert shifted_score((1,)).total == 1
    assert shifted_score((2,)).total == 0
    # S = 0 with an even first value gives S' = -1
    pi = (4, 2, 3)
    assert score(pi).total == 0 and shifted_score(pi).total == -1
    # S = 1 with an odd first value gives S'(lift) = -1
    pi = (3, 1, 2)
    assert score(pi).total == 1 and shifted_score(lift(pi)).total == -1


def test_greedy_place_examples():
    assert greedy_place((2, 1), 4) == [2, 3]
    assert greedy_place((1, 2, 3), 4) == [1, 2, 3]
    assert greedy_place((1,), 2) == [1]
    assert greedy_place((1, 3, 4, 2, 1, 3), 4) == [1, 1, 2, 2, 3, 3]
    with pytest.raises(ValueError):
        greedy_place((5,), 4)


def test_greedy_cross_check_with_exact_subsequence():
    assert brute_exact(zz(3, 4), (2, 1)) is not None
    assert brute_exact(zz(2, 4), (2, 1)) is None


def test_min_runs_examples():
    assert min_runs((2, 1)) == 3
    assert min_runs((1,)) == 1
    assert min_runs((1, 2, 3)) == 3
    assert min_runs(()) == 0


@pytest.mark.parametrize("k", range(1, 7))
def test_score_equals_runs_minus_length(k):
    for sigma in permutations(range(1, k + 1)):
        total = score(sigma).total
        assert min_runs(sigma) == k + total
        assert max(greedy_place(sigma, k + 2)) == k + total


@pytest.mark.parametrize("k", range(1, 8))
def test_lift_identities(k):
    for sigma in permutations(range(1, k + 1)):
        assert score(sigma).total + score(lift(sigma)).total == 1
        if k >= 2:
            assert circular_score(sigma).total + circular_score(lift(sigma)).total == 0
        if k % 2:
            assert circular_score(sigma).total != 0


@pytest.mark.parametrize("k", range(1, 7))
def test_shifted_score_relations(k):
    for pi in permutations(range(1, k + 1)):
        s = score(pi).total
        even = pi[0] % 2 == 0
        if s == 0 and even:
            assert shifted_score(pi).total == -1
        elif s == 0:
            assert shifted_score(lift(pi)).total == 0
        elif s == 1 and even:
            assert shifted_score(pi).total == 0
        elif s == 1:
            assert shifted_score(lift(pi)).total == -1


def test_circular_lift_degenerates_at_length_one():
    # the only cyclic pair of (x) is (x, x), costing +1 before and after lifting
    assert circular_score((1,)).total == 1
    assert circular_score((2,)).total == 1
