"""Branching for the conformal embedding sp(2n)_k + sp(2k)_n inside so(4nk)_1.

The four level-1 modules of so(4nk) decompose into pairs of labels: the vacuum and
vector into ``(lam, lam^t)`` by parity of ``|lam|``, the two half-spinors into
``(lam, lam^c)``.  The spinor decomposition is indexed by the shuffles in ``S_{n+k}``
(minimal coset representatives), and :func:`kp_weight` turns a shuffle into the pair of
highest weights.  Conformal weights are checked in exact rational arithmetic.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .combinatorics import (AffineWeight, Partition, Rectangle, complement, enumerate_rectangle,
                            read_black, read_white, tc, to_affine, transpose)
from .modular import conformal_weight, grading, modular_data, so_level1_data
from .reports import Report
from .rootdata import CategorySpec, Label

__all__ = ['Shuffle', 'enumerate_w1', 'kp_weight', 'kp_affine', 'BranchingTable',
           'branching_table', 'verify_branching', 'verify_etale_dims', 'SECTORS',
           'W1_SUM_LIMIT', 'TABLE_SUM_LIMIT', 'VERIFY_SUM_LIMIT', 'reversal_is_tc',
           'white_reading_is_complement']

SECTORS = ('L0', 'L1', 'L+', 'L-')
W1_SUM_LIMIT = 14
TABLE_SUM_LIMIT = 14
VERIFY_SUM_LIMIT = 8


@dataclass(frozen=True)
class Shuffle:
    """Permutation ``s`` of ``1..n+k`` given by ``inv = (s^-1(1), ..., s^-1(n+k))``.

    ``s^-1`` is increasing on ``1..n`` and on ``n+1..n+k``, so a shuffle is determined by
    the black positions ``inv[:n]`` of its dot diagram.
    """
    inv: tuple[int, ...]
    n: int
    k: int

    def __post_init__(self):
        object.__setattr__(self, 'inv', tuple(int(x) for x in self.inv))
        n, k, inv = self.n, self.k, self.inv
        if n < 1 or k < 1 or len(inv) != n + k or sorted(inv) != list(range(1, n + k + 1)):
            raise ValueError(f'not a permutation of 1..{n + k}: {inv}')
        if any(a > b for a, b in zip(inv[:n], inv[1:n])) or \
                any(a > b for a, b in zip(inv[n:], inv[n + 1:])):
            raise ValueError(f's^-1 must increase on both blocks: {inv}')

    @classmethod
    def from_diagram(cls, dots: str) -> Shuffle:
        blacks = [i + 1 for i, d in enumerate(dots) if d == 'B']
        whites = [i + 1 for i, d in enumerate(dots) if d == 'W']
        if len(blacks) + len(whites) != len(dots):
            raise ValueError(f'dot diagrams use only B and W: {dots!r}')
        return cls(tuple(blacks + whites), len(blacks), len(whites))

    @property
    def diagram(self) -> str:
        blacks = set(self.inv[:self.n])
        return ''.join('B' if i in blacks else 'W' for i in range(1, self.n + self.k + 1))

    @property
    def partition(self) -> Partition:
        """The partition in ``I(n, k)`` read from the black dots."""
        return read_black(self.diagram)

    def reversed(self) -> Shuffle:
        return Shuffle.from_diagram(self.diagram[::-1])


def enumerate_w1(n: int, k: int) -> list[Shuffle]:
    """All ``C(n+k, n)`` shuffles, ordered lexicographically by black positions."""
    if n < 1 or k < 1:
        raise ValueError('n and k must be positive')
    if n + k > W1_SUM_LIMIT:
        raise ValueError(f'n + k = {n + k} exceeds {W1_SUM_LIMIT}')
    out = []
    for blacks in combinations(range(1, n + k + 1), n):
        bs = set(blacks)
        whites = tuple(i for i in range(1, n + k + 1) if i not in bs)
        out.append(Shuffle(blacks + whites, n, k))
    assert len(out) == comb(n + k, n)
    return out


def kp_weight(s: Shuffle) -> tuple[Partition, Partition]:
    """``(sum_i (k + i - s^-1(i)) e_i, sum_i (n + i - s^-1(n+i)) e_{n+i})`` as partitions."""
    n, k, inv = s.n, s.k, s.inv
    first = Partition(k + i - inv[i - 1] for i in range(1, n + 1))
    second = Partition(n + i - inv[n + i - 1] for i in range(1, k + 1))
    return first, second


def kp_affine(s: Shuffle) -> tuple[AffineWeight, AffineWeight]:
    """:func:`kp_weight` as level-``k`` and level-``n`` affine weights."""
    first, second = kp_weight(s)
    return to_affine(first, (s.n, s.k)), to_affine(second, (s.k, s.n))


@dataclass(frozen=True)
class BranchingTable:
    """Sector name -> list of ``(lam, partner)`` with ``lam`` in ``I(n, k)``."""
    n: int
    k: int
    sectors: dict

    def rows(self, sector: str | None = None) -> list[tuple[str, Partition, Partition]]:
        names = SECTORS if sector is None else (sector,)
        return [(name, a, b) for name in names for a, b in self.sectors[name]]

    def to_json(self, sector: str | None = None) -> dict:
        names = SECTORS if sector is None else (sector,)
        return {'n': self.n, 'k': self.k,
                'sectors': {name: [[list(a), list(b)] for a, b in self.sectors[name]]
                            for name in names}}


def branching_table(n: int, k: int) -> BranchingTable:
    if n < 1 or k < 1:
        raise ValueError('n and k must be positive')
    if n + k > TABLE_SUM_LIMIT:
        raise ValueError(f'n + k = {n + k} exceeds {TABLE_SUM_LIMIT}')
    rect = Rectangle(n, k)
    sectors = {name: [] for name in SECTORS}
    for lam in enumerate_rectangle(rect):
        odd = lam.size % 2
        sectors['L1' if odd else 'L0'].append((lam, transpose(lam)))
        sectors['L-' if odd else 'L+'].append((lam, complement(lam, rect)))
    return BranchingTable(n, k, sectors)


def _guard(n, k):
    if n < 1 or k < 1:
        raise ValueError('n and k must be positive')
    if n + k > VERIFY_SUM_LIMIT:
        raise ValueError(f'n + k = {n + k} exceeds {VERIFY_SUM_LIMIT}')


def verify_branching(n: int, k: int) -> Report:
    """Exact conformal-weight and grading checks on the four sectors.

    (a) ``h(lam) + h'(lam^c) = nk/4 mod 1``; (b) ``h(lam) + h'(lam^t)`` is an integer for
    even ``|lam|`` and a half-integer for odd; (c) the vacuum sector has grading
    ``(0, 0)`` and the vector sector ``(1, 1)``; (d) the sector sums agree with the
    level-1 weights ``(0, 1/2, nk/4, nk/4)``.  Also checks that the full rectangle pairs
    with the empty diagram in ``L+`` exactly when ``nk`` is even.
    """
    _guard(n, k)
    s1, s2 = CategorySpec.sp_even(n, k), CategorySpec.sp_even(k, n)
    table = branching_table(n, k)
    rect = Rectangle(n, k)
    labels1, labels2 = enumerate_rectangle(rect), enumerate_rectangle(rect.transposed)
    h1 = {lam: conformal_weight(s1, Label(lam)) for lam in labels1}
    h2 = {lam: conformal_weight(s2, Label(lam)) for lam in labels2}
    g1 = dict(zip(labels1, grading(s1, [Label(x) for x in labels1])))
    g2 = dict(zip(labels2, grading(s2, [Label(x) for x in labels2])))
    level1 = so_level1_data(n, k)
    h_level1 = dict(zip(level1.labels, level1.h))
    spinor = Fraction(n * k, 4)
    rep = Report(({'family': 'sp-even', 'n': n, 'k': k}, {'family': 'sp-even', 'n': k, 'k': n}))

    bad_a = [lam for lam in labels1 if (h1[lam] + h2[complement(lam, rect)] - spinor) % 1]
    rep.add('spinor-weights', not bad_a, detail=f'{len(labels1)} labels')
    bad_b = [lam for lam in labels1
             if (h1[lam] + h2[transpose(lam)] - Fraction(lam.size % 2, 2)) % 1]
    rep.add('vector-weights', not bad_b)
    bad_c = [(name, lam) for name, want in (('L0', 0), ('L1', 1))
             for lam, mu in table.sectors[name] if (g1[lam], g2[mu]) != (want, want)]
    rep.add('sector-gradings', not bad_c)
    target = {'L0': h_level1['0'], 'L1': h_level1['v'], 'L+': h_level1['s+'], 'L-': h_level1['s-']}
    bad_d = [(name, lam) for name in SECTORS for lam, mu in table.sectors[name]
             if (h1[lam] + h2[mu] - target[name]) % 1]
    rep.add('level1-weights', not bad_d,
            detail='level-1 h = ' + ', '.join(f'{x}' for x in level1.h))
    full = Partition((k,) * n)
    in_plus = (full, Partition()) in table.sectors['L+']
    rep.add('full-rectangle', in_plus == (n * k % 2 == 0),
            detail=f'(k^n, empty) in L+: {in_plus}, nk = {n * k}')
    for name, bad in (('spinor-weights', bad_a), ('vector-weights', bad_b),
                      ('sector-gradings', bad_c), ('level1-weights', bad_d)):
        if bad:
            rep.counterexample = {'check': name, 'label': str(bad[0])}
            break
    return rep


def verify_etale_dims(n: int, k: int, tol: float = 1e-9, rel_tol: float = 1e-6) -> Report:
    """Dimension identities for the algebra of the conformal embedding.

    ``FPdim(C1) FPdim(C2) = 4 (sum_{even} d_lam d'_{lam^t})^2`` to relative `rel_tol`,
    the Lagrangian identity for the sum over all four sectors, and equality of the four
    sector sums to absolute `tol`.
    """
    _guard(n, k)
    md1, md2 = modular_data(CategorySpec.sp_even(n, k)), modular_data(CategorySpec.sp_even(k, n))
    d1 = {lab.partition: float(d) for lab, d in zip(md1.labels, md1.dims)}
    d2 = {lab.partition: float(d) for lab, d in zip(md2.labels, md2.dims)}
    table = branching_table(n, k)
    sums = {name: sum(d1[a] * d2[b] for a, b in table.sectors[name]) for name in SECTORS}
    D1, D2 = md1.global_dim_sq, md2.global_dim_sq
    rep = Report(({'family': 'sp-even', 'n': n, 'k': k}, {'family': 'sp-even', 'n': k, 'k': n}))
    lhs, rhs = D1 * D2, 4 * sums['L0'] ** 2
    rep.add('fpdim-product', abs(lhs - rhs) <= rel_tol * abs(lhs), abs(lhs - rhs) / abs(lhs))
    total = sum(sums.values())
    lag = abs(total ** 2 - 4 * D1 * D2) / (4 * D1 * D2)
    rep.add('lagrangian', lag <= rel_tol, lag)
    spread = max(sums.values()) - min(sums.values())
    rep.add('sector-sums', spread <= tol, spread)
    rep.details = {'fpdim': [D1, D2], 'sector_sums': sums}
    return rep


def reversal_is_tc(n: int, k: int) -> bool:
    """Reading a dot diagram backwards sends ``lam`` to ``lam^tc``."""
    rect = Rectangle(n, k)
    return all(s.reversed().partition == tc(s.partition, rect) for s in enumerate_w1(n, k))


def white_reading_is_complement(n: int, k: int) -> bool:
    rect = Rectangle(n, k)
    return all(read_white(s.diagram) == complement(s.partition, rect) for s in enumerate_w1(n, k))
