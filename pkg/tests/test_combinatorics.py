from __future__ import annotations

from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fuscat.combinatorics import (AffineWeight, Partition, Rectangle, all_dot_diagrams, complement,
                                  dot_diagram, enumerate_rectangle, from_affine,
                                  partition_from_dots, read_black, read_white, tc, to_affine,
                                  transpose)


@st.composite
def boxed(draw, max_side=6):
    n = draw(st.integers(1, max_side))
    k = draw(st.integers(1, max_side))
    parts = draw(st.lists(st.integers(0, k), min_size=n, max_size=n))
    return Partition(sorted(parts, reverse=True)), Rectangle(n, k)


def test_partition_strips_zeros_and_validates():
    assert Partition((5, 1, 1, 1, 0, 0)) == Partition((5, 1, 1, 1))
    assert str(Partition(())) == '()'
    assert str(Partition((2, 1, 1))) == '(2,1,1)'
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((1, -1))


def test_small_rectangle_worked_example():
    lam = Partition((2, 1, 1))
    assert transpose(lam) == (3, 1)
    assert complement(lam, (3, 2)) == (2,)
    assert tc(lam, (3, 2)) == (1, 1)


def test_seven_by_six_dot_diagram():
    lam = Partition((6, 6, 5, 5, 5, 5, 2))
    assert to_affine(lam, (7, 6)).marks == (0, 0, 1, 0, 0, 0, 3, 2)
    mu = complement(lam, (7, 6))
    assert mu == (5, 1, 1, 1)
    assert to_affine(mu, (6, 7)).marks == (2, 4, 0, 0, 1, 0, 0)
    dots = dot_diagram(lam, (7, 6))
    assert dots == 'BBWBBBBWWWBWW'
    assert partition_from_dots(dots) == (lam, Rectangle(7, 6))
    assert read_white(dots) == mu


@pytest.mark.parametrize('n,k', [(1, 1), (2, 3), (3, 2), (4, 4), (1, 7), (5, 3)])
def test_enumerate_rectangle_count_and_order(n, k):
    labels = enumerate_rectangle((n, k))
    assert len(labels) == comb(n + k, n)
    assert labels[0] == ()
    assert labels[-1] == (k,) * n
    keys = [(x.size, tuple(x)) for x in labels]
    assert keys == sorted(keys)


def test_graded_lex_order_for_three_by_two():
    assert [str(x) for x in enumerate_rectangle((3, 2))] == [
        '()', '(1)', '(1,1)', '(2)', '(1,1,1)', '(2,1)', '(2,1,1)', '(2,2)', '(2,2,1)', '(2,2,2)']


def test_complement_rejects_outside_rectangle():
    with pytest.raises(ValueError):
        complement((3,), (2, 2))
    with pytest.raises(ValueError):
        Rectangle(0, 2)


@given(boxed())
def test_transpose_is_an_involution(data):
    lam, rect = data
    assert transpose(transpose(lam)) == lam
    assert transpose(lam).fits(rect.k, rect.n)
    assert transpose(lam).size == lam.size


@given(boxed())
def test_complement_maps_between_rectangles(data):
    lam, rect = data
    mu = complement(lam, rect)
    assert mu.fits(rect.k, rect.n)
    assert lam.size + mu.size == rect.n * rect.k
    assert complement(mu, rect.transposed) == lam


@given(boxed())
def test_tc_is_an_involution(data):
    lam, rect = data
    assert tc(tc(lam, rect), rect) == lam
    assert tc(lam, rect).fits(rect.n, rect.k)


@given(boxed())
def test_affine_round_trip(data):
    lam, rect = data
    w = to_affine(lam, rect)
    assert w.level == rect.k
    assert w.rank == rect.n
    assert from_affine(w) == lam


@given(boxed())
def test_dot_diagram_readings(data):
    lam, rect = data
    dots = dot_diagram(lam, rect)
    assert dots.count('B') == rect.n and dots.count('W') == rect.k
    assert read_black(dots) == lam
    assert read_white(dots) == complement(lam, rect)
    assert read_black(dots[::-1]) == tc(lam, rect)


@pytest.mark.parametrize('n,k', [(1, 1), (2, 2), (3, 4)])
def test_dot_diagrams_biject_with_rectangle(n, k):
    diagrams = all_dot_diagrams(n, k)
    assert len(diagrams) == comb(n + k, n)
    assert sorted(read_black(d) for d in diagrams) == sorted(enumerate_rectangle((n, k)))


def test_affine_weight_validation():
    assert from_affine((0, 0, 1, 0, 0, 0, 3, 2)) == (6, 6, 5, 5, 5, 5, 2)
    with pytest.raises(ValueError):
        AffineWeight((1, -1))
    with pytest.raises(ValueError):
        read_black('BXW')
