"""Fusion rings: Verlinde and Kac-Walton tables, the transpose isomorphism, ring matching.

For ``sp-even`` the table is computed twice, once from the S-matrix and once
combinatorially from weights, and the two must agree exactly.  At odd ``ell`` the
S-matrix is only invertible on the modular block; the rest of the ring is obtained by
tensoring with the nontrivial invertible object.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

import numpy as np

from .combinatorics import Partition, Rectangle, tc, transpose
from .modular import (DEFAULT_TOL, ROUND_TOL, ModularData, invertible_action, modular_data)
from .rootdata import CategorySpec, Family, Label, label_set
from .weights import kac_walton_row

__all__ = ['FusionTable', 'FusionError', 'fuse_one_box', 'one_box_matrix', 'verlinde_table',
           'kac_walton_table', 'fusion_table', 'transpose_iso_check', 'RingIsomorphism',
           'find_ring_isomorphism', 'one_box_discrepancies', 'verify_modularity',
           'FUSION_LABEL_LIMIT']

FUSION_LABEL_LIMIT = 300


class FusionError(RuntimeError):
    """Fusion routes disagree or Verlinde coefficients fail to be integers."""


@dataclass(frozen=True, eq=False)
class FusionTable:
    """Multiplicities ``N[a, b, c]`` of ``c`` in ``a (x) b``; labels indexed as in `labels`."""
    labels: tuple
    N: np.ndarray
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        self.N.setflags(write=False)

    def __len__(self):
        return len(self.labels)

    @property
    def _index(self) -> dict:
        cache = self.__dict__.get('_idx')
        if cache is None:
            cache = {lab: i for i, lab in enumerate(self.labels)}
            object.__setattr__(self, '_idx', cache)
        return cache

    def index(self, label) -> int:
        return self._index[label]

    def fuse(self, a, b) -> dict:
        row = self.N[self.index(a), self.index(b)]
        return {self.labels[c]: int(m) for c in np.flatnonzero(row) for m in [row[c]]}

    def matrix(self, a) -> np.ndarray:
        """Left multiplication by ``a``: ``M[b, c] = N[a, b, c]``."""
        return self.N[self.index(a)]

    def restrict(self, labels: Sequence) -> FusionTable:
        idx = [self.index(x) for x in labels]
        sub = self.N[np.ix_(idx, idx, idx)]
        full = self.N[np.ix_(idx, idx)].sum(axis=2)
        if np.any(sub.sum(axis=2) != full):
            raise ValueError('label subset is not closed under fusion')
        return FusionTable(tuple(labels), sub.copy(), dict(self.meta))

    def is_commutative(self) -> bool:
        return bool(np.array_equal(self.N, self.N.transpose(1, 0, 2)))

    def is_associative(self) -> bool:
        # (a b) c == a (b c), as sum_e N[a,b,e] N[e,c,d] == sum_e N[b,c,e] N[a,e,d]
        left = np.einsum('abe,ecd->abcd', self.N, self.N)
        right = np.einsum('bce,aed->abcd', self.N, self.N)
        return bool(np.array_equal(left, right))

    def has_unit(self) -> bool:
        return bool(np.array_equal(self.N[0], np.eye(len(self), dtype=self.N.dtype)))

    def duals(self) -> list[int]:
        out = []
        for a in range(len(self)):
            hits = np.flatnonzero(self.N[a, :, 0])
            if len(hits) != 1 or self.N[a, hits[0], 0] != 1:
                raise ValueError(f'{self.labels[a]} has no unique dual')
            out.append(int(hits[0]))
        return out

    def invertibles(self) -> list:
        duals = self.duals()
        return [self.labels[a] for a in range(len(self))
                if self.N[a, duals[a], 0] == 1 and np.all(self.N[a].sum(axis=1) == 1)]

    def to_json(self, rank: int | None = None) -> dict:
        def lab(x):
            return x.to_json(rank) if isinstance(x, Label) else x
        entries = [{'a': lab(self.labels[a]), 'b': lab(self.labels[b]), 'c': lab(self.labels[c]),
                    'N': int(self.N[a, b, c])} for a, b, c in zip(*np.nonzero(self.N))]
        return {'labels': [lab(x) for x in self.labels], 'N': entries}

    def csv_rows(self) -> list[tuple]:
        return [(str(self.labels[a]), str(self.labels[b]), str(self.labels[c]), int(self.N[a, b, c]))
                for a, b, c in zip(*np.nonzero(self.N))]


def fuse_one_box(rect, lam) -> list[Partition]:
    """Diagrams in the rectangle with one box more or one box less than ``lam``."""
    rect = rect if isinstance(rect, Rectangle) else Rectangle(*rect)
    lam = Partition(lam)
    if not lam.fits(rect.n, rect.k):
        raise ValueError(f'{lam} does not fit a {rect.n}x{rect.k} rectangle')
    p = list(lam.padded(rect.n))
    out = []
    for i in range(rect.n):
        for delta in (1, -1):
            q = p.copy()
            q[i] += delta
            if q[i] < 0 or q[i] > rect.k:
                continue
            if any(q[j] < q[j + 1] for j in range(rect.n - 1)):
                continue
            out.append(Partition(q))
    return sorted(set(out), key=lambda x: (x.size, tuple(x)))


def one_box_matrix(labels: Sequence[Partition], rect) -> np.ndarray:
    index = {Partition(x): i for i, x in enumerate(labels)}
    M = np.zeros((len(labels), len(labels)), dtype=np.int64)
    for i, lam in enumerate(labels):
        for mu in fuse_one_box(rect, lam):
            M[i, index[mu]] += 1
    return M


def verlinde_table(S: np.ndarray, labels: Sequence, tol: float = ROUND_TOL) -> FusionTable:
    """``N[a,b,c] = sum_x S[a,x] S[b,x] conj(S[c,x]) / S[0,x]`` rounded to integers."""
    if len(labels) > FUSION_LABEL_LIMIT:
        raise ValueError(f'more than {FUSION_LABEL_LIMIT} labels')
    raw = np.einsum('ax,bx,cx->abc', S, S / S[0][None, :], S.conj())
    N = np.rint(raw.real).astype(np.int64)
    resid = float(np.max(np.abs(raw - N))) if raw.size else 0.0
    if resid >= tol:
        raise FusionError(f'Verlinde coefficients not integral (residual {resid:.3g})')
    if np.any(N < 0):
        raise FusionError('Verlinde produced a negative multiplicity')
    return FusionTable(tuple(labels), N, {'route': 'verlinde', 'residual': resid})


def kac_walton_table(spec: CategorySpec) -> FusionTable:
    """Combinatorial fusion table of ``C(sp(2n))_k`` (weights folded into the alcove)."""
    if spec.family is not Family.SP_EVEN:
        raise ValueError('the weight-folding route is implemented for sp-even')
    labels = label_set(spec)
    parts = [lab.partition for lab in labels]
    n, k = spec.rank, spec.level
    N = np.stack([kac_walton_row(lam, parts, n, k) for lam in parts])
    if np.any(N < 0):
        raise FusionError('affine folding produced a negative multiplicity')
    return FusionTable(tuple(labels), N, {'route': 'kac-walton'})


@lru_cache(maxsize=256)
def fusion_table(spec: CategorySpec, md: ModularData | None = None, tol: float = ROUND_TOL
                 ) -> FusionTable:
    """Full fusion table of `spec`.

    ``sp-even``: Verlinde and weight folding, required to agree exactly, and the
    generator row is required to be the one-box rule.  Odd ``ell``: Verlinde on the
    modular block, extended by the invertible object.
    """
    md = modular_data(spec) if md is None else md
    if spec.family is Family.SP_EVEN:
        ver = verlinde_table(md.S, md.labels, tol)
        kw = kac_walton_table(spec)
        if not np.array_equal(ver.N, kw.N):
            a, b, c = (int(v[0]) for v in np.nonzero(ver.N != kw.N))
            raise FusionError(f'Verlinde and Kac-Walton disagree at '
                              f'({md.labels[a]}, {md.labels[b]}, {md.labels[c]})')
        parts = [lab.partition for lab in md.labels]
        X = md.index(Label((1,)))
        if not np.array_equal(ver.N[X], one_box_matrix(parts, (spec.rank, spec.level))):
            raise FusionError('generator row differs from the one-box rule')
        return FusionTable(ver.labels, ver.N.copy(),
                           {'routes': ['verlinde', 'kac-walton'], 'residual': ver.meta['residual']})
    if spec.family in (Family.SP_ODD, Family.SO_ODD):
        block = md.block_labels
        ver = verlinde_table(md.S, block, tol)
        act = invertible_action(spec)
        labels = list(md.labels)
        index = {x: i for i, x in enumerate(labels)}
        bindex = {x: i for i, x in enumerate(block)}
        bset = set(block)

        def split(x):
            return (x, 0) if x in bset else (act[x], 1)

        L = len(labels)
        N = np.zeros((L, L, L), dtype=np.int64)
        for a in labels:
            a0, i = split(a)
            for b in labels:
                b0, j = split(b)
                row = ver.N[bindex[a0], bindex[b0]]
                for c0 in np.flatnonzero(row):
                    c = block[c0] if (i + j) % 2 == 0 else act[block[c0]]
                    N[index[a], index[b], index[c]] = row[c0]
        return FusionTable(tuple(labels), N, {'routes': ['verlinde-block', 'invertible-extension'],
                                              'residual': ver.meta['residual']})
    raise ValueError(f'no fusion table for {spec.family.value}')


def one_box_discrepancies(spec: CategorySpec, table: FusionTable | None = None) -> list[dict]:
    """Where the naive one-box rule on the odd-``ell`` alcove differs from the actual ``X_(1)`` row."""
    if spec.family is not Family.SP_ODD:
        raise ValueError('the one-box comparison is defined for sp-odd')
    table = fusion_table(spec) if table is None else table
    labels = list(table.labels)
    parts = {lab.partition for lab in labels if not lab.spin}
    out = []
    gen = Label((1,))
    for lab in labels:
        if lab.spin:
            continue
        p = list(lab.partition.padded(spec.rank))
        naive = set()
        for i in range(spec.rank):
            for delta in (1, -1):
                q = p.copy()
                q[i] += delta
                if q[i] >= 0 and all(q[j] >= q[j + 1] for j in range(spec.rank - 1)):
                    if Partition(q) in parts:
                        naive.add(Label(Partition(q)))
        actual = {x for x, m in table.fuse(gen, lab).items()}
        if naive != actual:
            out.append({'label': str(lab), 'one_box': sorted(map(str, naive)),
                        'actual': sorted(map(str, actual))})
    return out


def transpose_iso_check(n: int, k: int) -> dict:
    """Check ``N^{(n,k)}[lam, mu, nu] == N^{(k,n)}[lam^t, mu^t, nu^t]`` for all triples."""
    t1 = fusion_table(CategorySpec.sp_even(n, k))
    t2 = fusion_table(CategorySpec.sp_even(k, n))
    perm = [t2.index(Label(transpose(lab.partition))) for lab in t1.labels]
    mapped = t2.N[np.ix_(perm, perm, perm)]
    bad = np.argwhere(mapped != t1.N)
    report = {'n': n, 'k': k, 'passed': len(bad) == 0, 'triples': int(t1.N.size)}
    if len(bad):
        a, b, c = bad[0]
        report['counterexample'] = {'labels': [str(t1.labels[i]) for i in (a, b, c)],
                                    'values': [int(t1.N[a, b, c]), int(mapped[a, b, c])]}
    return report


@dataclass
class RingIsomorphism:
    """Result of :func:`find_ring_isomorphism`; `bijections` maps labels of the first table."""
    bijections: list[dict]
    layers: list[list]

    @property
    def status(self) -> str:
        if not self.bijections:
            return 'none'
        return 'unique' if len(self.bijections) == 1 else 'ambiguous'

    @property
    def found(self) -> bool:
        return bool(self.bijections)


def _layers(table: FusionTable, gens: Sequence[int]) -> list[list[int]]:
    seen = {0}
    layers = [[0]]
    frontier = deque([0])
    dist = {0: 0}
    while frontier:
        a = frontier.popleft()
        for g in gens:
            for c in np.flatnonzero(table.N[g, a]):
                c = int(c)
                if c not in seen:
                    seen.add(c)
                    dist[c] = dist[a] + 1
                    if dist[c] == len(layers):
                        layers.append([])
                    layers[dist[c]].append(c)
                    frontier.append(c)
    if len(seen) != len(table):
        missing = [str(table.labels[i]) for i in range(len(table)) if i not in seen]
        raise ValueError(f'generators do not generate the ring; unreachable: {missing[:5]}')
    return [sorted(layer) for layer in layers]


def find_ring_isomorphism(f1: FusionTable, g1, f2: FusionTable, g2, limit: int = 1000
                          ) -> RingIsomorphism:
    """All based-ring isomorphisms ``f1 -> f2`` sending ``g1`` to ``g2``.

    `g1` and `g2` are labels or equal-length sequences of labels that generate their
    rings.  Labels are matched layer by layer outward from the unit, keeping only
    candidates whose structure constants against everything already matched agree.
    """
    gens1 = list(g1) if isinstance(g1, (list, tuple)) and not isinstance(g1, Label) else [g1]
    gens2 = list(g2) if isinstance(g2, (list, tuple)) and not isinstance(g2, Label) else [g2]
    if len(gens1) != len(gens2):
        raise ValueError('generator lists differ in length')
    i1 = [f1.index(x) for x in gens1]
    i2 = [f2.index(x) for x in gens2]
    layers1, layers2 = _layers(f1, i1), _layers(f2, i2)
    out_layers = [[f1.labels[i] for i in layer] for layer in layers1]
    if len(f1) != len(f2) or [len(x) for x in layers1] != [len(x) for x in layers2]:
        return RingIsomorphism([], out_layers)
    layer_of2 = {b: d for d, layer in enumerate(layers2) for b in layer}
    order = [a for layer in layers1 for a in layer]
    layer_of1 = {a: d for d, layer in enumerate(layers1) for a in layer}
    N1, N2 = f1.N, f2.N
    forced = {0: 0}
    for a, b in zip(i1, i2):
        if forced.get(a, b) != b:
            return RingIsomorphism([], out_layers)
        forced[a] = b

    results: list[dict] = []
    phi: dict[int, int] = {}
    used: set[int] = set()

    def consistent(a, b) -> bool:
        dom = list(phi) + [a]
        img = [phi[x] for x in phi] + [b]
        s1 = N1[np.ix_(dom, dom, dom)]
        s2 = N2[np.ix_(img, img, img)]
        return bool(np.array_equal(s1, s2))

    def rec(pos):
        if len(results) >= limit:
            return
        if pos == len(order):
            results.append({f1.labels[a]: f2.labels[b] for a, b in phi.items()})
            return
        a = order[pos]
        cands = [forced[a]] if a in forced else [b for b in layers2[layer_of1[a]] if b not in used]
        for b in cands:
            if b in used or layer_of2[b] != layer_of1[a]:
                continue
            if not consistent(a, b):
                continue
            phi[a] = b
            used.add(b)
            rec(pos + 1)
            del phi[a]
            used.discard(b)

    rec(0)
    return RingIsomorphism(results, out_layers)


def verify_modularity(spec: CategorySpec, tol: float = DEFAULT_TOL, round_tol: float = ROUND_TOL):
    """S unitary and symmetric on the modular block, Verlinde integral, fusion routes agreeing.

    Returns a :class:`~fuscat.reports.Report`; route disagreement is a failed check, not
    an exception.
    """
    from .reports import Report

    rep = Report((spec,))
    md = modular_data(spec)
    S = md.S
    unit = float(np.max(np.abs(S @ S.conj().T - np.eye(len(S)))))
    sym = float(np.max(np.abs(S - S.T)))
    rep.add('unitary', unit <= tol, unit)
    rep.add('symmetric', sym <= tol, sym)
    try:
        ver = verlinde_table(S, md.block_labels, round_tol)
        rep.add('verlinde-integral', True, ver.meta['residual'])
    except FusionError as exc:
        rep.add('verlinde-integral', False, detail=str(exc))
        return rep
    try:
        table = fusion_table(spec, md, round_tol)
    except FusionError as exc:
        rep.add('fusion-table', False, detail=str(exc))
        return rep
    rep.add('fusion-table', True, detail=', '.join(table.meta['routes']))
    rep.add('unit', table.has_unit())
    rep.add('commutative', table.is_commutative())
    if len(table) <= 80:
        rep.add('associative', table.is_associative())
    dims = md.dims
    char = float(np.max(np.abs(np.einsum('abc,c->ab', table.N, dims) - np.outer(dims, dims))))
    rep.add('dims-character', char <= tol * len(table) * max(1.0, float(np.max(np.abs(dims))) ** 2),
            char)
    if spec.family is Family.SP_EVEN:
        duals_ok = table.duals() == list(range(len(table)))
        rep.add('self-dual', duals_ok)
        inv = table.invertibles()
        J = Label((spec.level,) * spec.rank)
        rep.add('invertibles', inv == [table.labels[0], J], detail=', '.join(map(str, inv)))
        rect = (spec.rank, spec.level)
        jrow = table.matrix(J)
        want = np.zeros_like(jrow)
        for i, lab in enumerate(table.labels):
            want[i, table.index(Label(tc(lab.partition, rect)))] = 1
        rep.add('invertible-is-tc', bool(np.array_equal(jrow, want)))
    return rep
