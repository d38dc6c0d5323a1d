import csv
import io

import pytest

from brinthompson import (
    StepCase,
    bs_relation_check,
    classify_step,
    compose,
    equals,
    invert,
    is_root,
    make_identical_pair_element,
    monotone_growth_check,
    power,
    power_profile,
    root_search,
)
from brinthompson.dyadic import Pattern
from brinthompson.errors import ArityMismatch, ElementError, EnumerationTooLarge
from brinthompson.growth import CSV_HEADER, candidate_count
from helpers import rand2
from oracles import NaiveV, naive_power, reduced_leaf_count


def test_profile_A2(A, A2):
    prof = power_profile(A2, 12)
    naive_A = NaiveV.from_words([b[0] for b in A.domain.blocks], [b[0] for b in A.range.blocks], A.sigma)
    for i in range(1, 13):
        r = prof[i]
        assert r.m_red == i + 2 == reduced_leaf_count(naive_power(naive_A, i))
        assert r.tp_red == i + 1
        assert r.inc == r.tp - prof[1].tp
        assert r.red == r.tp - r.tp_red
        assert r.dp == r.tp - r.cp
    with pytest.raises(IndexError):
        prof[13]


def test_profile_history_invariants():
    for s in range(20):
        f = rand2(s, 3, True)
        prof = power_profile(f, 5)
        for r in prof.rows:
            assert r.m - r.m_red >= 0
            assert 0 <= r.cp <= min(r.tp, r.tp_range)


def test_profile_csv(A2):
    text = power_profile(A2, 4).to_csv()
    assert "\r" not in text
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == CSV_HEADER
    assert [int(v) for v in rows[1]] == [1, 2, 2, 1, 1, 0, 0, 3, 3]
    assert len(rows) == 5


def test_profile_rejects_bad_N(A2):
    with pytest.raises(ElementError):
        power_profile(A2, 0)


def test_classify_step_values(A2, swap):
    prof = power_profile(A2, 6)
    assert all(classify_step(prof, i) is StepCase.GROWTH for i in range(2, 7))
    sp = power_profile(swap, 2)
    assert classify_step(sp, 2) is StepCase.SHRINK
    with pytest.raises(IndexError):
        classify_step(prof, 1)


def test_classify_step_total():
    for s in range(30):
        prof = power_profile(rand2(s, 3, True), 4)
        for i in range(2, 5):
            r = prof[i]
            case = classify_step(prof, i)
            assert case in StepCase
            assert (case is StepCase.GROWTH) == (r.red < r.inc)
            assert (case is StepCase.BALANCED) == (r.red == r.inc)


def test_monotone_growth(A2, swap):
    assert monotone_growth_check(A2, 12, 4) == 1
    assert monotone_growth_check(swap, 8) is None
    with pytest.raises(ElementError):
        monotone_growth_check(A2, 3, 5)


def test_is_root(A):
    assert is_root(A, power(A, 3), 3)
    assert not is_root(A, power(A, 3), 2)
    with pytest.raises(ElementError):
        is_root(A, A, 0)


def test_root_search_finds_square_root(A):
    hits = root_search(power(A, 2), 3, 8)
    assert hits and all(t == 2 and equals(h, A) for h, t in hits)
    assert root_search(A, 3, 8) == []


def test_root_search_of_torsion_element():
    f = make_identical_pair_element(Pattern.of("0", "1"), (1, 0))
    hits = root_search(f, 3, 4)
    assert any(t == 3 and equals(power(h, 3), f) for h, t in hits)
    for h, t in hits:
        assert is_root(h, f, t)


def test_root_search_cap():
    assert candidate_count(1, 2) == 1 + 2
    with pytest.raises(EnumerationTooLarge):
        root_search(make_identical_pair_element(Pattern.trivial(2), (0,)), 5, 2, cap=100)


def test_bs_relation(A):
    # b = rigid swap of halves commutes with its conjugate structure: BS(1,1)
    b = make_identical_pair_element(Pattern.of("0", "1"), (1, 0))
    assert bs_relation_check(b, b, 1, 1)
    assert bs_relation_check(A, power(A, 2), 1, 1)
    # b^2 = e, so any conjugate of b^2 is b^4
    assert bs_relation_check(A, b, 2, 4)
    assert not bs_relation_check(A, b, 1, 1)
    with pytest.raises(ArityMismatch):
        bs_relation_check(A, compose(rand2(0), rand2(1)), 1, 1)
    with pytest.raises(ElementError):
        bs_relation_check(A, b, 0, 1)


def test_bs_relation_matches_direct_conjugation():
    for s in range(30):
        a, b = rand2(s, 2), rand2(s + 40, 2)
        direct = equals(compose(compose(invert(a), b), a), b)
        assert bs_relation_check(a, b, 1, 1) == direct
