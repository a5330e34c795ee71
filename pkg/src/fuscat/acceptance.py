"""The acceptance suite: eight criteria, each returning a :class:`Report`.

``max_sum`` bounds ``n + k`` for the sweeps.  The odd-``ell`` sweep runs to
``max_sum - 2`` and the shuffle sweep to ``max_sum + 2``, so ``max_sum = 8`` gives the
full suite (6 and 10 respectively).
"""
from __future__ import annotations

from math import comb
from typing import Callable

from .branching import enumerate_w1, kp_affine, reversal_is_tc, verify_branching, verify_etale_dims
from .combinatorics import (Partition, complement, dot_diagram, read_black, read_white, tc,
                            to_affine, transpose)
from .duality import (TRIPLE_TOL, closed_form_triple, eigenvalue_triple, odd_specs,
                      scalar_identity_residual, transform_triple, verify_sp_so_odd, verify_sp_sp)
from .fusionring import verify_modularity
from .modular import DEFAULT_TOL, ROUND_TOL, invertible_case_table
from .reports import Report
from .rootdata import CategorySpec, Family, Label

__all__ = ['CRITERIA', 'run_all', 'golden_combinatorics', 'modularity_sweep', 'level_rank_even',
           'eigenvalue_triples', 'level_rank_odd', 'shuffle_weights', 'branching_invariants',
           'etale_dimensions', 'expected_invertible_kind', 'gamma_twist']


def _pairs(max_sum: int):
    for s in range(2, max_sum + 1):
        for n in range(1, s):
            yield n, s - n


def _suite(name: str) -> Report:
    return Report(({'suite': name},))


def golden_combinatorics(max_sum: int = 8) -> Report:
    """Worked examples for transpose/complement and the 7 x 6 dot diagram; exact."""
    rep = _suite('combinatorics')
    lam = Partition((2, 1, 1))
    rep.add('transpose', transpose(lam) == Partition((3, 1)))
    rep.add('complement', complement(lam, (3, 2)) == Partition((2,)))
    rep.add('tc', tc(lam, (3, 2)) == Partition((1, 1)))
    big = Partition((6, 6, 5, 5, 5, 5, 2))
    rep.add('affine-7x6', to_affine(big, (7, 6)).marks == (0, 0, 1, 0, 0, 0, 3, 2))
    partner = complement(big, (7, 6))
    rep.add('complement-7x6', partner == Partition((5, 1, 1, 1)))
    rep.add('affine-6x7', to_affine(partner, (6, 7)).marks == (2, 4, 0, 0, 1, 0, 0))
    dots = dot_diagram(big, (7, 6))
    rep.add('dot-string', dots == 'BBWBBBBWWWBWW', detail=dots)
    rep.add('dot-readings', read_black(dots) == big and read_white(dots) == partner)
    return rep


def modularity_sweep(max_sum: int = 8, tol: float = DEFAULT_TOL) -> Report:
    """Every sp-even spec: unitary symmetric S, integral Verlinde, both fusion routes equal."""
    rep = _suite('modularity')
    for n, k in _pairs(max_sum):
        sub = verify_modularity(CategorySpec.sp_even(n, k), tol, ROUND_TOL)
        worst = max((c.residual for c in sub.checks if c.residual is not None), default=None)
        rep.add(f'sp-even n={n} k={k}', sub.passed, worst,
                detail=', '.join(c.name for c in sub.checks if not c.passed))
    return rep


def level_rank_even(max_sum: int = 8, tol: float = DEFAULT_TOL) -> Report:
    rep = _suite('level-rank-even')
    for n, k in _pairs(max_sum):
        sub = verify_sp_sp(n, k, tol)
        worst = max((c.residual for c in sub.checks if c.residual is not None), default=None)
        rep.add(f'n={n} k={k}', sub.passed, worst,
                detail=', '.join(c.name for c in sub.checks if not c.passed))
        anchor = scalar_identity_residual(n, k)
        rep.add(f'scalar n={n} k={k}', anchor <= 1e-12, anchor)
    return rep


def _resid(a, b) -> float:
    return float(max(abs(x - y) for x, y in zip(a, b)))


def eigenvalue_triples(max_sum: int = 8, tol: float = TRIPLE_TOL) -> Report:
    """Casimir-computed triples against the closed forms, and the swap/reverse/sign calculus."""
    rep = _suite('eigenvalue-triples')
    for n, k in _pairs(max_sum):
        s1, s2 = CategorySpec.sp_even(n, k), CategorySpec.sp_even(k, n)
        r = _resid(eigenvalue_triple(s1), closed_form_triple(s1))
        rep.add(f'sp n={n} ell={s1.ell}', r <= tol, r)
        r = _resid(transform_triple(eigenvalue_triple(s2), sign=-1), eigenvalue_triple(s1))
        rep.add(f'calculus n={n} k={k}', r <= tol, r)
        # [-q^(-2k-1), q, -q^(-1)] goes to [q^(2k+1), q, -q^(-1)]
        q = s1.q
        r = _resid(transform_triple(closed_form_triple(s2), sign=-1), (q(2 * k + 1), q(1), -q(-1)))
        rep.add(f'verbatim n={n} k={k}', r <= tol, r)
    for n, k in _pairs(max(max_sum - 2, 2)):
        for case in (1, 2):
            sC, sB = odd_specs(n, k, case)
            r = _resid(eigenvalue_triple(sB), closed_form_triple(sB))
            rep.add(f'so k={k} ell={sB.ell} case={case}', r <= tol, r)
            r = _resid(eigenvalue_triple(sC), closed_form_triple(sC))
            rep.add(f'sp-odd n={n} ell={sC.ell} case={case}', r <= tol, r)
    return rep


def expected_invertible_kind(spec: CategorySpec) -> tuple[frozenset, bool]:
    """Allowed kinds and transparency of the nontrivial invertible object.

    Depends only on ``Q^ell = (-1)^a`` and, for so-odd, the parity of the rank ``k``:
    a semion exactly when ``k`` is odd and ``Q^ell = -1``, otherwise a transparent boson
    or fermion.
    """
    q_ell = (-1) ** spec.a
    if spec.family is Family.SP_ODD:
        return frozenset({'boson' if q_ell == -1 else 'fermion'}), True
    if spec.family is Family.SO_ODD:
        if spec.rank % 2 == 1 and q_ell == -1:
            return frozenset({'semion'}), False
        return frozenset({'boson', 'fermion'}), True
    raise ValueError(f'no invertible case table for {spec.family.value}')


def gamma_twist(spec: CategorySpec) -> complex:
    """``theta_gamma = i^(a k (2n+1))``: the Casimir of ``gamma`` is ``k (2n+1) ell / 2``."""
    return 1j ** (spec.a * spec.rank * (2 * spec.level + 1) % 4)


def level_rank_odd(max_sum: int = 6, tol: float = DEFAULT_TOL) -> Report:
    rep = _suite('level-rank-odd')
    for n, k in _pairs(max_sum):
        for case in (1, 2):
            sub = verify_sp_so_odd(n, k, case, tol)
            worst = max((c.residual for c in sub.checks if c.residual is not None), default=None)
            rep.add(f'n={n} k={k} case={case}', sub.passed, worst,
                    detail=', '.join(c.name for c in sub.checks if not c.passed))
            for spec in odd_specs(n, k, case):
                table = invertible_case_table(spec, tol)
                kind, transparent = expected_invertible_kind(spec)
                q_ell = (-1) ** spec.a
                ok = table['kind'] in kind and table['transparent'] == transparent
                if spec.family is Family.SP_ODD:
                    ok = ok and abs(table['dim'] + 1) < tol and abs(table['twist'] - q_ell) < tol
                    ok = ok and table['muger_center'] == [Label(()), table['label']]
                else:
                    ok = ok and abs(abs(table['dim']) - 1) < tol
                    ok = ok and abs(table['twist'] - gamma_twist(spec)) < tol
                    want_center = [Label(()), table['label']] if transparent else [Label(())]
                    ok = ok and table['muger_center'] == want_center
                rep.add(f'case-table {spec.family.value} rank={spec.rank} a={spec.a}', ok,
                        detail=f"{table['kind']}, transparent={table['transparent']}")
    return rep


def shuffle_weights(max_sum: int = 10) -> Report:
    rep = _suite('shuffle-weights')
    for n, k in _pairs(max_sum):
        shuffles = enumerate_w1(n, k)
        got = sorted((a.marks, b.marks) for a, b in map(kp_affine, shuffles))
        want = sorted((to_affine(s.partition, (n, k)).marks,
                       to_affine(complement(s.partition, (n, k)), (k, n)).marks) for s in shuffles)
        diagrams = {s.partition for s in shuffles}
        rep.add(f'n={n} k={k}', got == want and len(shuffles) == comb(n + k, n)
                and len(diagrams) == len(shuffles))
    rep.add('reversal-is-tc', all(reversal_is_tc(n, k) for n, k in _pairs(min(max_sum, 10))))
    return rep


def branching_invariants(max_sum: int = 8) -> Report:
    rep = _suite('branching')
    for n, k in _pairs(max_sum):
        sub = verify_branching(n, k)
        rep.add(f'n={n} k={k}', sub.passed,
                detail=', '.join(c.name for c in sub.checks if not c.passed))
    return rep


def etale_dimensions(max_sum: int = 8, tol: float = DEFAULT_TOL, rel_tol: float = ROUND_TOL
                     ) -> Report:
    rep = _suite('etale')
    for n, k in _pairs(max_sum):
        sub = verify_etale_dims(n, k, tol, rel_tol)
        worst = max(c.residual for c in sub.checks)
        rep.add(f'n={n} k={k}', sub.passed, worst,
                detail=', '.join(c.name for c in sub.checks if not c.passed))
    return rep


CRITERIA: list[tuple[int, str, Callable[[int], Report], int]] = [
    # (number, title, runner, offset added to max_sum)
    (1, 'combinatorics golden values', golden_combinatorics, 0),
    (2, 'modularity suite', modularity_sweep, 0),
    (3, 'level-rank duality, even ell', level_rank_even, 0),
    (4, 'eigenvalue triples', eigenvalue_triples, 0),
    (5, 'level-rank duality, odd ell', level_rank_odd, -2),
    (6, 'shuffle weights', shuffle_weights, 2),
    (7, 'branching invariants', branching_invariants, 0),
    (8, 'etale dimensions', etale_dimensions, 0),
]


def run_all(max_sum: int = 8) -> list[tuple[int, str, Report]]:
    if max_sum < 2:
        raise ValueError('max_sum must be at least 2')
    return [(num, title, fn(max(2, max_sum + off))) for num, title, fn, off in CRITERIA]
