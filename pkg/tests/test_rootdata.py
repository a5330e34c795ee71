from __future__ import annotations

import cmath
import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fuscat.rootdata import (CategorySpec, Family, Label, RootSystem, casimir, label_set, qpow,
                             weyl_elements)


@pytest.mark.parametrize('n', range(1, 7))
def test_vector_casimir(n):
    assert casimir(Label((1,)), RootSystem('C', n)) == 2 * n + 1
    assert casimir(Label((1,)), RootSystem('B', n)) == 4 * n


def test_rho():
    assert RootSystem('C', 3).rho == (3, 2, 1)
    assert RootSystem('B', 2).rho == (Fraction(3, 2), Fraction(1, 2))


@pytest.mark.parametrize('fam,rank,count', [('C', 1, 1), ('C', 3, 9), ('B', 2, 4), ('B', 4, 16)])
def test_positive_root_count(fam, rank, count):
    assert len(RootSystem(fam, rank).positive_roots()) == count


@pytest.mark.parametrize('rank', range(1, 5))
def test_weyl_group_order_and_signs(rank):
    elems = list(weyl_elements(rank))
    assert len(elems) == 2 ** rank * math.factorial(rank)
    assert sum(det for _, _, det in elems) == 0


def test_weyl_group_rank_guard():
    with pytest.raises(ValueError):
        next(weyl_elements(11))


@pytest.mark.parametrize('spec,count', [
    (CategorySpec.sp_even(3, 2), 10),
    (CategorySpec('sp-odd', 1, 5), 4),
    (CategorySpec('sp-odd', 2, 7), 6),
    (CategorySpec('so-odd', 1, 5), 4),
    (CategorySpec('so-odd', 2, 9), 12),
])
def test_label_counts(spec, count):
    labels = label_set(spec)
    assert len(labels) == count
    assert labels[0] == Label(())


def test_sp_odd_alcove_is_two_row_bound():
    labels = label_set(CategorySpec('sp-odd', 2, 9))
    assert all(x.partition.part(0) + x.partition.part(1) <= 5 for x in labels)
    assert Label((5,)) in labels and Label((3, 2)) in labels


def test_so_odd_spin_labels():
    labels = label_set(CategorySpec('so-odd', 2, 7))
    spin = [x for x in labels if x.spin]
    assert [str(x) for x in spin] == ['()+1/2', '(1)+1/2', '(1,1)+1/2']
    assert spin[-1].weight(2) == (Fraction(3, 2), Fraction(3, 2))
    assert spin[-1].to_json(2) == {'spin': True, 'weight': ['3/2', '3/2']}


@pytest.mark.parametrize('args', [
    (Family.SP_EVEN, 2, 7, 1),
    (Family.SP_EVEN, 2, 6, 1),
    (Family.SP_ODD, 2, 8, 1),
    (Family.SP_ODD, 2, 9, 3),
    (Family.SO_ODD, 2, 5, 1),
    (Family.SO_LEVEL1, 6, 1, 1),
])
def test_invalid_specs(args):
    with pytest.raises(ValueError):
        CategorySpec(*args)


def test_spec_json_round_trip_and_level():
    spec = CategorySpec.sp_even(2, 3, a=5)
    assert spec.ell == 12 and spec.level == 3
    assert CategorySpec.from_json(spec.to_json()) == spec
    assert CategorySpec('so-odd', 2, 9).level == 2


def test_qpow_quarter_turns_are_exact():
    assert qpow(6, 1, 6) == -1
    assert qpow(3, 1, 6) == 1j
    assert qpow(Fraction(1, 2), 3, 3) == 1j


@given(st.fractions(max_denominator=12), st.integers(1, 5), st.integers(2, 20))
def test_qpow_matches_exponential(x, a, ell):
    want = cmath.exp(1j * math.pi * float(x) * a / ell)
    assert abs(qpow(x, a, ell) - want) < 1e-9 * max(1.0, abs(float(x)))
    assert abs(qpow(x + 2 * ell, a, ell) - qpow(x, a, ell)) < 1e-12
