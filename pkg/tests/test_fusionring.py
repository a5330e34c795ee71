from __future__ import annotations

import numpy as np
import pytest

from fuscat.combinatorics import Partition, tc
from fuscat.fusionring import (FusionError, FusionTable, find_ring_isomorphism, fuse_one_box,
                               fusion_table, kac_walton_table, one_box_discrepancies,
                               one_box_matrix, transpose_iso_check, verify_modularity,
                               verlinde_table)
from fuscat.modular import modular_data
from fuscat.rootdata import CategorySpec, Label, label_set

P = Partition
L = Label


def test_fuse_one_box():
    assert fuse_one_box((2, 1), (1,)) == [P(()), P((1, 1))]
    assert fuse_one_box((2, 1), (1, 1)) == [P((1,))]
    assert fuse_one_box((3, 4), ()) == [P((1,))]
    with pytest.raises(ValueError):
        fuse_one_box((2, 1), (2,))


def test_small_tables():
    t = fusion_table(CategorySpec.sp_even(1, 1))
    assert t.fuse(L((1,)), L((1,))) == {L(()): 1}
    t = fusion_table(CategorySpec.sp_even(2, 1))
    assert t.fuse(L((1,)), L((1,))) == {L(()): 1, L((1, 1)): 1}
    t = fusion_table(CategorySpec.sp_even(1, 2))
    assert t.fuse(L((1,)), L((1,))) == {L(()): 1, L((2,)): 1}
    assert t.fuse(L((1,)), L((2,))) == {L((1,)): 1}
    assert t.fuse(L((2,)), L((2,))) == {L(()): 1}


def test_multiplicity_two_appears():
    # (1,1) x (2,1) in sp(6) at level 2 contains (2,1) twice
    t = fusion_table(CategorySpec.sp_even(3, 2))
    assert t.fuse(L((1, 1)), L((2, 1)))[L((2, 1))] == 2


@pytest.mark.parametrize('spec', [CategorySpec.sp_even(n, k) for n, k in
                                  [(1, 3), (2, 2), (2, 3), (3, 2), (3, 3), (1, 6)]]
                         + [CategorySpec('sp-odd', 2, 9, 1), CategorySpec('so-odd', 2, 9, 1),
                            CategorySpec('so-odd', 3, 9, 2), CategorySpec('sp-odd', 3, 11, 2)])
def test_ring_axioms(spec):
    t = fusion_table(spec)
    md = modular_data(spec)
    assert t.has_unit() and t.is_commutative() and t.is_associative()
    assert np.all(t.N >= 0)
    lhs = np.einsum('abc,c->ab', t.N, md.dims)
    assert np.allclose(lhs, np.outer(md.dims, md.dims), atol=1e-9 * len(t))
    g = np.array(md.grading)
    for a, b, c in zip(*np.nonzero(t.N)):
        assert (g[a] + g[b]) % 2 == g[c]


@pytest.mark.parametrize('n,k', [(1, 1), (2, 2), (2, 3), (4, 1)])
def test_sp_even_invertibles_and_tc(n, k):
    spec = CategorySpec.sp_even(n, k)
    t = fusion_table(spec)
    J = L((k,) * n)
    assert t.invertibles() == [L(()), J]
    assert t.duals() == list(range(len(t)))
    for lab in t.labels:
        assert t.fuse(J, lab) == {L(tc(lab.partition, (n, k))): 1}


def test_kac_walton_generator_row_is_one_box():
    spec = CategorySpec.sp_even(3, 3)
    t = kac_walton_table(spec)
    parts = [x.partition for x in t.labels]
    assert np.array_equal(t.matrix(L((1,))), one_box_matrix(parts, (3, 3)))


def test_verlinde_rejects_non_integral():
    md = modular_data(CategorySpec.sp_even(1, 2))
    S = md.S.copy()
    S[1, 1] += 0.1
    with pytest.raises(FusionError):
        verlinde_table(S, md.labels)


@pytest.mark.parametrize('n,k', [(1, 1), (1, 2), (2, 3), (3, 3), (1, 5)])
def test_transpose_iso(n, k):
    report = transpose_iso_check(n, k)
    assert report['passed']
    assert 'counterexample' not in report


def test_iso_identity_and_ising_transpose():
    t = fusion_table(CategorySpec.sp_even(1, 1))
    iso = find_ring_isomorphism(t, L((1,)), t, L((1,)))
    assert iso.status == 'unique'
    assert iso.bijections[0] == {L(()): L(()), L((1,)): L((1,))}
    t1, t2 = fusion_table(CategorySpec.sp_even(1, 2)), fusion_table(CategorySpec.sp_even(2, 1))
    iso = find_ring_isomorphism(t1, L((1,)), t2, L((1,)))
    assert iso.bijections == [{L(()): L(()), L((1,)): L((1,)), L((2,)): L((1, 1))}]


def test_iso_odd_rank_four_rings():
    sp = fusion_table(CategorySpec('sp-odd', 1, 5, 1))
    so = fusion_table(CategorySpec('so-odd', 1, 5, 3))
    gens_so = [L((1,)), L((1,), spin=True)]
    gens_sp = [L((2,)), L((3,))]  # X_(1) (x) eta and eta
    iso = find_ring_isomorphism(so, gens_so, sp, gens_sp)
    assert iso.status == 'unique'
    phi = iso.bijections[0]
    assert len(phi) == 4 and phi[L((), spin=True)] == L((1,))


def tambara_yamagami_z3() -> FusionTable:
    # objects 0, 1, 2 (the group Z/3) and m, with m x m = 0 + 1 + 2
    N = np.zeros((4, 4, 4), dtype=np.int64)
    for a in range(3):
        for b in range(3):
            N[a, b, (a + b) % 3] = 1
        N[a, 3, 3] = N[3, a, 3] = 1
        N[3, 3, a] = 1
    return FusionTable(('0', '1', '2', 'm'), N)


def test_iso_reports_all_candidates():
    t = tambara_yamagami_z3()
    assert t.is_associative()
    iso = find_ring_isomorphism(t, 'm', t, 'm')
    assert iso.status == 'ambiguous'
    assert sorted(b['1'] for b in iso.bijections) == ['1', '2']


def test_iso_rejects_non_generating():
    t = tambara_yamagami_z3()
    with pytest.raises(ValueError):
        find_ring_isomorphism(t, '1', t, '1')


def test_iso_none_when_shapes_differ():
    a = fusion_table(CategorySpec.sp_even(1, 3))
    b = fusion_table(CategorySpec.sp_even(3, 1))
    assert find_ring_isomorphism(a, L((1,)), b, L((1,))).found
    c = fusion_table(CategorySpec('sp-odd', 1, 7, 1)).restrict(
        [x for x in label_set(CategorySpec('sp-odd', 1, 7, 1)) if x.size % 2 == 0])
    assert not find_ring_isomorphism(a, L((1,)), c, L((2,))).found


def test_odd_one_box_matches_actual():
    for spec in (CategorySpec('sp-odd', 2, 9, 1), CategorySpec('sp-odd', 3, 11, 1)):
        assert one_box_discrepancies(spec) == []


def test_table_exports():
    t = fusion_table(CategorySpec.sp_even(1, 2))
    rows = t.csv_rows()
    assert ('(1)', '(1)', '(2)', 1) in rows
    js = t.to_json()
    assert js['labels'] == [[], [1], [2]]
    assert {'a': [1], 'b': [1], 'c': [], 'N': 1} in js['N']


def test_restrict_rejects_unclosed():
    t = fusion_table(CategorySpec.sp_even(1, 2))
    with pytest.raises(ValueError):
        t.restrict([L(()), L((1,))])


@pytest.mark.parametrize('spec', [CategorySpec.sp_even(2, 2), CategorySpec('so-odd', 2, 7, 2)])
def test_verify_modularity(spec):
    assert verify_modularity(spec).passed
