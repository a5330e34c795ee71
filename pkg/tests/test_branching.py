from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from math import comb

import pytest

from fuscat.branching import (SECTORS, Shuffle, branching_table, enumerate_w1, kp_affine,
                              kp_weight, reversal_is_tc, verify_branching, verify_etale_dims,
                              white_reading_is_complement)
from fuscat.combinatorics import Partition, complement, to_affine
from fuscat.modular import conformal_weight
from fuscat.rootdata import CategorySpec, Label

P = Partition


def test_seven_by_six_shuffle():
    s = Shuffle.from_diagram('BBWBBBBWWWBWW')
    assert s.inv == (1, 2, 4, 5, 6, 7, 11, 3, 8, 9, 10, 12, 13)
    assert kp_weight(s) == (P((6, 6, 5, 5, 5, 5, 2)), P((5, 1, 1, 1)))
    first, second = kp_affine(s)
    assert first.marks == (0, 0, 1, 0, 0, 0, 3, 2)
    assert second.marks == (2, 4, 0, 0, 1, 0, 0)


@pytest.mark.parametrize('n,k', [(1, 1), (2, 3), (4, 2), (3, 5)])
def test_shuffle_count_matches_brute_force(n, k):
    shuffles = enumerate_w1(n, k)
    assert len(shuffles) == comb(n + k, n)
    # minimal coset representatives: s^-1 increasing on both blocks
    brute = {p for p in permutations(range(1, n + k + 1))
             if list(p[:n]) == sorted(p[:n]) and list(p[n:]) == sorted(p[n:])}
    assert {s.inv for s in shuffles} == brute


def test_extreme_shuffles():
    ident = Shuffle((1, 2, 3, 4, 5), 2, 3)
    assert ident.diagram == 'BBWWW'
    assert kp_weight(ident) == (P((3, 3)), P(()))
    rev = ident.reversed()
    assert rev.diagram == 'WWWBB'
    assert kp_weight(rev) == (P(()), P((2, 2, 2)))


@pytest.mark.parametrize('n,k', [(1, 1), (2, 2), (3, 2), (2, 5), (4, 4)])
def test_kp_weight_is_complement_pairing(n, k):
    for s in enumerate_w1(n, k):
        lam, mu = kp_weight(s)
        assert lam == s.partition
        assert mu == complement(lam, (n, k))
        assert kp_affine(s)[1] == to_affine(mu, (k, n))


@pytest.mark.parametrize('n,k', [(1, 3), (2, 3), (3, 3)])
def test_diagram_readings(n, k):
    assert reversal_is_tc(n, k)
    assert white_reading_is_complement(n, k)


@pytest.mark.parametrize('inv,n,k', [((1, 2, 2), 1, 2), ((2, 1, 3), 2, 1), ((1, 2), 0, 2)])
def test_invalid_shuffles(inv, n, k):
    with pytest.raises(ValueError):
        Shuffle(inv, n, k)


def test_invalid_diagram():
    with pytest.raises(ValueError):
        Shuffle.from_diagram('BXW')


def test_table_one_by_one():
    t = branching_table(1, 1)
    assert t.sectors == {'L0': [(P(()), P(()))], 'L1': [(P((1,)), P((1,)))],
                         'L+': [(P(()), P((1,)))], 'L-': [(P((1,)), P(()))]}
    assert t.to_json('L1') == {'n': 1, 'k': 1, 'sectors': {'L1': [[[1], [1]]]}}


def test_table_seven_by_six_row():
    t = branching_table(7, 6)
    assert ('L+', P((6, 6, 5, 5, 5, 5, 2)), P((5, 1, 1, 1))) in t.rows('L+')
    assert sum(len(t.sectors[s]) for s in SECTORS) == 2 * comb(13, 6)


def test_guards():
    with pytest.raises(ValueError):
        branching_table(8, 7)
    with pytest.raises(ValueError):
        verify_branching(5, 4)
    with pytest.raises(ValueError):
        enumerate_w1(0, 3)


@pytest.mark.parametrize('n,k', [(1, 1), (1, 2), (2, 2), (3, 2), (2, 5), (4, 4)])
def test_verify_branching(n, k):
    rep = verify_branching(n, k)
    assert rep.passed, rep.to_json()
    assert rep.counterexample is None


@pytest.mark.parametrize('n,k,plus', [(1, 1, False), (2, 1, True), (3, 3, False), (2, 3, True)])
def test_full_rectangle_sector(n, k, plus):
    t = branching_table(n, k)
    assert ((P((k,) * n), P()) in t.sectors['L+']) is plus


def test_conformal_weight_examples():
    # h = c_lam / (2 ell): sp(2)_1 has ell = 6, sp(4)_1 has ell = 8
    assert conformal_weight(CategorySpec.sp_even(1, 1), Label((1,))) == Fraction(1, 4)
    assert conformal_weight(CategorySpec.sp_even(2, 1), Label((1,))) == Fraction(5, 16)
    assert conformal_weight(CategorySpec.sp_even(2, 1), Label((1, 1))) == Fraction(1, 2)


@pytest.mark.parametrize('n,k', [(1, 1), (1, 2), (2, 3), (4, 4)])
def test_etale_dims(n, k):
    rep = verify_etale_dims(n, k)
    assert rep.passed, rep.to_json()
    sums = rep.details['sector_sums']
    assert max(sums.values()) - min(sums.values()) < 1e-9


def test_etale_sector_sum_value_small():
    sums = verify_etale_dims(1, 2).details['sector_sums']
    assert all(abs(v - 2) < 1e-12 for v in sums.values())
