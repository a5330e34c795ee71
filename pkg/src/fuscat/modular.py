"""Modular data of type B / C categories at roots of unity.

Dimensions, twists and conformal weights come from closed formulas on the label
weights; the S-matrix comes from the alternating Weyl sum (or, equivalently, its
determinant form).  Odd ``ell`` categories are degenerate; their S-matrix is taken on
the modular block (even-box labels for sp, integer weights for so).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np

from .combinatorics import tc
from .rootdata import (CategorySpec, Family, Label, casimir, label_set, qpow, weyl_elements)

__all__ = ['ModularData', 'DEFAULT_TOL', 'ROUND_TOL', 'SMATRIX_RANK_LIMIT', 'qdim', 'twist',
           'conformal_weight', 'conformal_weights', 'grading', 'modular_block',
           'weyl_sum_smatrix', 'det_sin_smatrix', 'unnormalized_smatrix', 'normalize_smatrix',
           'smatrix', 'modular_data', 'muger_center', 'minus_transform', 'so_level1_data',
           'invertible_label', 'invertible_action', 'invertible_case_table']

DEFAULT_TOL = 1e-9
ROUND_TOL = 1e-6
SMATRIX_RANK_LIMIT = 6

SO_LEVEL1_LABELS = ('0', 'v', 's+', 's-')


@dataclass(frozen=True, eq=False)
class ModularData:
    """Numerical shadow of a braided fusion category.

    Attributes
    ----------
    spec : CategorySpec
    labels : tuple
        Simple objects, unit first.
    dims, twists : ndarray
        Quantum dimensions (real, possibly negative) and ribbon twists, indexed like `labels`.
    h : tuple of Fraction
        Conformal weights in ``[0, 1)`` with ``twists == exp(2 pi i h)``.
    grading : tuple
        ``Z/2`` degree of every label (pairs of bits for ``so-level1``).
    block : tuple of int
        Indices of the modular block on which `S` is defined.
    S : ndarray or None
        Normalized unitary S-matrix on `block`, ``S[0, 0] > 0``.
    """
    spec: CategorySpec
    labels: tuple
    dims: np.ndarray
    twists: np.ndarray
    h: tuple
    grading: tuple
    block: tuple
    S: np.ndarray | None
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        for arr in (self.dims, self.twists, self.S):
            if arr is not None:
                arr.setflags(write=False)

    def index(self, label) -> int:
        return self._index[label]

    @property
    def _index(self) -> dict:
        cache = self.__dict__.get('_index_cache')
        if cache is None:
            cache = {lab: i for i, lab in enumerate(self.labels)}
            object.__setattr__(self, '_index_cache', cache)
        return cache

    @property
    def block_labels(self) -> list:
        return [self.labels[i] for i in self.block]

    @property
    def global_dim_sq(self) -> float:
        return float(np.sum(self.dims ** 2))

    def to_json(self) -> dict:
        d = {
            'spec': self.spec.to_json(),
            'labels': [_label_json(lab, self.spec) for lab in self.labels],
            'dims': [_num(x) for x in self.dims],
            'twists': [{'re': _num(t.real), 'im': _num(t.imag)} for t in self.twists],
            'h': [{'num': x.numerator, 'den': x.denominator} for x in self.h],
            'grading': [list(g) if isinstance(g, tuple) else g for g in self.grading],
            'block': list(self.block),
        }
        if self.S is not None:
            d['S'] = [[{'re': _num(z.real), 'im': _num(z.imag)} for z in row] for row in self.S]
        if self.meta:
            d['meta'] = self.meta
        return d

    def table_rows(self) -> list[tuple]:
        return [(str(lab), _num(d), _num(t.real), _num(t.imag), f'{h}')
                for lab, d, t, h in zip(self.labels, self.dims, self.twists, self.h)]


def _num(x: float) -> float:
    """Round to 12 significant digits; normalizes -0.0."""
    x = float(f'{float(x):.12g}')
    return 0.0 if x == 0 else x


def _label_json(lab, spec):
    return lab.to_json(spec.rank) if isinstance(lab, Label) else lab


def _sin_ratio_arg(x: Fraction, spec: CategorySpec) -> float:
    e = (x * spec.a) % (2 * spec.ell)
    return math.sin(math.pi * float(e) / spec.ell)


def qdim(spec: CategorySpec, label: Label) -> float:
    """Weyl quantum dimension ``prod sin(pi a <lam+rho, alpha> / ell) / sin(pi a <rho, alpha> / ell)``."""
    rs = spec.root_system
    lr = [w + r for w, r in zip(label.weight(rs.rank), rs.rho)]
    out = 1.0
    for alpha in rs.positive_roots():
        den = _sin_ratio_arg(Fraction(rs.inner(rs.rho, alpha)), spec)
        if abs(den) < 1e-12:
            raise ValueError(f'degenerate quantum dimension denominator for {spec}')
        out *= _sin_ratio_arg(Fraction(rs.inner(lr, alpha)), spec) / den
    return out


def twist(spec: CategorySpec, label: Label) -> complex:
    return qpow(casimir(label, spec.root_system), spec.a, spec.ell)


def conformal_weight(spec: CategorySpec, label: Label) -> Fraction:
    """``a c / (2 ell)`` reduced modulo 1."""
    return (Fraction(spec.a) * casimir(label, spec.root_system) / (2 * spec.ell)) % 1


def conformal_weights(spec: CategorySpec, labels: Sequence[Label] | None = None) -> tuple:
    labels = label_set(spec) if labels is None else labels
    return tuple(conformal_weight(spec, lab) for lab in labels)


def grading(spec: CategorySpec, labels: Sequence[Label] | None = None) -> tuple:
    labels = label_set(spec) if labels is None else labels
    if spec.family is Family.SO_ODD:
        return tuple(int(lab.spin) for lab in labels)
    return tuple(lab.size % 2 for lab in labels)


def modular_block(spec: CategorySpec, labels: Sequence[Label]) -> tuple[int, ...]:
    if spec.family is Family.SP_EVEN:
        return tuple(range(len(labels)))
    return tuple(i for i, g in enumerate(grading(spec, labels)) if g == 0)


@lru_cache(maxsize=None)
def _weyl_arrays(rank: int):
    perms, signs, dets = [], [], []
    for perm, sg, det in weyl_elements(rank):
        perms.append(perm)
        signs.append(sg)
        dets.append(det)
    return np.array(perms), np.array(signs), np.array(dets)


def _doubled_shifted(spec: CategorySpec, labels: Sequence[Label]) -> np.ndarray:
    """Integer matrix of ``2 (lam + rho)``, one row per label."""
    rs = spec.root_system
    rows = []
    for lab in labels:
        v = [2 * (w + r) for w, r in zip(lab.weight(rs.rank), rs.rho)]
        assert all(x.denominator == 1 for x in v)
        rows.append([int(x) for x in v])
    return np.array(rows, dtype=np.int64)


def _phase(spec: CategorySpec, m: np.ndarray) -> np.ndarray:
    # q ** (m / 2) with the exponent reduced exactly
    red = (spec.a * m) % (4 * spec.ell)
    return np.exp(1j * np.pi * red / (2 * spec.ell))


def weyl_sum_smatrix(spec: CategorySpec, rows: Sequence[Label], cols: Sequence[Label] | None = None
                     ) -> np.ndarray:
    """Unnormalized ``sum_w det(w) q ** (2 <w(lam+rho), mu+rho>)`` over the signed permutations."""
    cols = rows if cols is None else cols
    n = spec.rank
    if n > SMATRIX_RANK_LIMIT:
        raise ValueError(f'Weyl-sum S-matrix supports rank <= {SMATRIX_RANK_LIMIT}, got {n}')
    perms, signs, dets = _weyl_arrays(n)
    X = _doubled_shifted(spec, rows)
    Y = _doubled_shifted(spec, cols)
    s = spec.root_system.scale
    out = np.empty((len(rows), len(cols)), dtype=complex)
    for i, x in enumerate(X):
        wx = signs * x[perms]                      # (|W|, n)
        m = s * (wx @ Y.T)                         # 2 <w x, y> = m / 2
        out[i] = dets @ _phase(spec, m)
    return out


def det_sin_smatrix(spec: CategorySpec, rows: Sequence[Label], cols: Sequence[Label] | None = None
                    ) -> np.ndarray:
    """Unnormalized S as ``det[q**(2 s x_j y_i) - q**(-2 s x_j y_i)]``; equals the Weyl sum exactly."""
    cols = rows if cols is None else cols
    X = _doubled_shifted(spec, rows)
    Y = _doubled_shifted(spec, cols)
    s = spec.root_system.scale
    m = s * X[:, None, None, :] * Y[None, :, :, None]   # [row, col, i(y), j(x)]
    blocks = _phase(spec, m) - _phase(spec, -m)
    return np.linalg.det(blocks)


def unnormalized_smatrix(spec: CategorySpec, rows, cols=None, method: str = 'auto') -> np.ndarray:
    if method == 'auto':
        method = 'weyl' if spec.rank <= SMATRIX_RANK_LIMIT else 'det'
    if method == 'weyl':
        return weyl_sum_smatrix(spec, rows, cols)
    if method == 'det':
        return det_sin_smatrix(spec, rows, cols)
    raise ValueError(f'unknown S-matrix method {method!r}')


def normalize_smatrix(st: np.ndarray) -> np.ndarray:
    """Scale by a positive real to make the first row a unit vector, then rotate ``S[0, 0] > 0``."""
    norm = np.linalg.norm(st[0])
    if norm == 0 or abs(st[0, 0]) < 1e-300:
        raise ValueError('degenerate S-matrix: vanishing unit row')
    return st * (abs(st[0, 0]) / st[0, 0]) / norm


def smatrix(spec: CategorySpec, labels: Sequence[Label] | None = None, method: str = 'auto',
            tol: float = DEFAULT_TOL) -> np.ndarray:
    """Normalized S-matrix on the modular block of `spec`.

    ``sp-even`` uses the determinant-of-sines form; the odd families use the Weyl sum.
    """
    labels = label_set(spec) if labels is None else labels
    blk = [labels[i] for i in modular_block(spec, labels)]
    if method == 'auto':
        method = 'det' if spec.family is Family.SP_EVEN else 'weyl'
    S = normalize_smatrix(unnormalized_smatrix(spec, blk, method=method))
    res = np.max(np.abs(S @ S.conj().T - np.eye(len(blk))))
    if res > max(tol, 1e-7) * 1e3:
        raise ValueError(f'S-matrix on the declared modular block is degenerate '
                         f'(unitarity residual {res:.3g}); wrong block selection?')
    return S


@lru_cache(maxsize=256)
def modular_data(spec: CategorySpec, tol: float = DEFAULT_TOL) -> ModularData:
    """Modular data of `spec`, memoized per ``(spec, tol)``; results are read-only."""
    if spec.family is Family.SO_LEVEL1:
        nk = spec.rank // 4
        return so_level1_data(nk, 1)
    labels = tuple(label_set(spec))
    dims = np.array([qdim(spec, lab) for lab in labels])
    twists = np.array([twist(spec, lab) for lab in labels])
    S = smatrix(spec, labels, tol=tol)
    block = modular_block(spec, labels)
    # dimensions from the S column must match the Weyl product formula
    ratio = S[:, 0].real / S[0, 0].real
    if np.max(np.abs(ratio - dims[list(block)])) > 1e-7 * max(1.0, np.max(np.abs(dims))):
        raise ValueError(f'S-column dimensions disagree with the Weyl formula for {spec}')
    return ModularData(spec=spec, labels=labels, dims=dims, twists=twists,
                       h=conformal_weights(spec, labels), grading=grading(spec, labels),
                       block=block, S=S)


def _monodromy_defect(st: np.ndarray) -> np.ndarray:
    """``|S[x,y] S[0,0] - S[x,0] S[0,y]|`` relative to ``|S[x,0] S[0,y]|``, maximised over ``y``."""
    r = st / st[0, 0]
    prod = np.outer(r[:, 0], r[0, :])
    return np.max(np.abs(r - prod) / np.maximum(1.0, np.abs(prod)), axis=1)


def muger_center(spec: CategorySpec, tol: float = DEFAULT_TOL) -> list[Label]:
    """Transparent simple objects, from the unnormalized S-matrix on the full label set."""
    labels = label_set(spec)
    st = unnormalized_smatrix(spec, labels)
    defect = _monodromy_defect(st)
    return [lab for lab, d in zip(labels, defect) if d < max(tol, 1e-12) * 1e3]


def minus_transform(md: ModularData) -> ModularData:
    """Twists of odd objects change sign; dimensions, S and grading are kept."""
    if any(not isinstance(g, int) or g not in (0, 1) for g in md.grading):
        raise ValueError('minus_transform needs a Z/2 grading')
    sign = np.array([(-1) ** g for g in md.grading])
    h = tuple((x + Fraction(g, 2)) % 1 for x, g in zip(md.h, md.grading))
    meta = dict(md.meta)
    meta['minus'] = not meta.get('minus', False)
    return ModularData(spec=md.spec, labels=md.labels, dims=md.dims.copy(),
                       twists=md.twists * sign, h=h, grading=md.grading, block=md.block,
                       S=None if md.S is None else md.S.copy(), meta=meta)


def so_level1_data(n: int, k: int) -> ModularData:
    """Pointed data of so(4nk) at level 1: labels ``0, v, s+, s-``.

    ``s+`` is the half-spinor whose branching contains the even-size summands.
    """
    if n < 1 or k < 1:
        raise ValueError('n and k must be positive')
    spinor = Fraction(n * k, 4) % 1
    h = (Fraction(0), Fraction(1, 2), spinor, spinor)
    twists = np.array([qpow(2 * x, 1, 1) for x in h])
    # group Z/2 + Z/2 as bit pairs; v + s+ = s-
    grading = ((0, 0), (0, 1), (1, 0), (1, 1))
    spec = CategorySpec(Family.SO_LEVEL1, 4 * n * k, 1)
    return ModularData(spec=spec, labels=SO_LEVEL1_LABELS, dims=np.ones(4), twists=twists,
                       h=h, grading=grading, block=(0, 1, 2, 3), S=None,
                       meta={'n': n, 'k': k, 'spinor_convention': 's+ pairs with even |lambda|'})


def so_level1_fuse(x: str, y: str) -> str:
    gx = so_level1_data_grading(x)
    gy = so_level1_data_grading(y)
    g = ((gx[0] + gy[0]) % 2, (gx[1] + gy[1]) % 2)
    return SO_LEVEL1_LABELS[[(0, 0), (0, 1), (1, 0), (1, 1)].index(g)]


def so_level1_data_grading(x: str) -> tuple[int, int]:
    return ((0, 0), (0, 1), (1, 0), (1, 1))[SO_LEVEL1_LABELS.index(x)]


def invertible_label(spec: CategorySpec) -> Label:
    """The nontrivial invertible object: full rectangle (sp-even), ``eta`` (sp-odd), ``gamma`` (so-odd)."""
    if spec.family is Family.SP_EVEN:
        return Label((spec.level,) * spec.rank)
    if spec.family is Family.SP_ODD:
        return Label((spec.ell - 2 * spec.rank,))
    if spec.family is Family.SO_ODD:
        return Label((spec.level,) * spec.rank, spin=True)
    raise ValueError(f'no invertible label for {spec.family.value}')


def _invertible_image(spec: CategorySpec, x: Label) -> Label:
    r = spec.rank
    if spec.family is Family.SP_EVEN:
        return Label(tc(x.partition, (r, spec.level)))
    p = x.partition.padded(r)
    if spec.family is Family.SP_ODD:
        return Label((spec.ell - 2 * r - p[0],) + p[1:])
    if spec.family is Family.SO_ODD:
        return Label(tuple(spec.level - v for v in reversed(p)), spin=not x.spin)
    raise ValueError(f'no invertible action for {spec.family.value}')


def invertible_action(spec: CategorySpec, tol: float = DEFAULT_TOL) -> dict[Label, Label]:
    """``x -> J (x) x`` for the nontrivial invertible ``J``.

    The map is the closed form (``tc`` for sp-even, ``lam_1 -> ell - 2n - lam_1`` for
    sp-odd, rotated rectangle complement with the spin bit flipped for so-odd) and is
    checked against the unnormalized S-matrix: ``J (x) y`` is simple, so the double
    braiding of ``J`` with ``y`` is ``m(y) = S[J, y] / (dim J dim y)``, and then
    ``S[J x, y] = dim(J) m(y) S[x, y]`` and ``theta(J x) = theta(J) theta(x) m(x)``.
    Modular data alone cannot locate ``J x`` when ``J`` is a transparent boson of
    dimension 1, which is why the closed form is primary.
    """
    labels = label_set(spec)
    J = invertible_label(spec)
    st = unnormalized_smatrix(spec, labels, labels)
    st = st / st[0, 0]
    dims = st[0]
    j = labels.index(J)
    index = {x: i for i, x in enumerate(labels)}
    mono = st[j] / (dims[j] * dims)
    th = np.array([twist(spec, x) for x in labels])
    scale = max(1.0, float(np.max(np.abs(st))))
    out = {}
    for i, x in enumerate(labels):
        y = _invertible_image(spec, x)
        if y not in index:
            raise ValueError(f'{J} (x) {x} = {y} is not a label')
        t = index[y]
        row_err = float(np.max(np.abs(st[t] - dims[j] * mono * st[i])))
        twist_err = abs(th[t] - th[j] * th[i] * mono[i])
        if row_err > 1e-7 * scale or twist_err > 1e-7:
            raise ValueError(f'{J} (x) {x} = {y} contradicts the S-matrix or twists')
        out[x] = y
    if out[labels[0]] != J or any(out[out[x]] != x for x in labels):
        raise ValueError('invertible action is not an involution fixing J (x) unit = J')
    return out


def invertible_case_table(spec: CategorySpec, tol: float = DEFAULT_TOL) -> dict:
    """Dimension, twist, transparency and kind of the nontrivial invertible object.

    Kind follows the self-braiding ``c_{J,J} = theta_J dim(J)``: ``+1`` boson,
    ``-1`` fermion, ``+-i`` semion.
    """
    J = invertible_label(spec)
    d = qdim(spec, J)
    th = twist(spec, J)
    self_braid = th * d
    if abs(self_braid - 1) < 1e-9:
        kind = 'boson'
    elif abs(self_braid + 1) < 1e-9:
        kind = 'fermion'
    elif abs(abs(self_braid.imag) - 1) < 1e-9:
        kind = 'semion'
    else:
        kind = 'other'
    center = muger_center(spec, tol)
    return {'label': J, 'dim': d, 'twist': th, 'transparent': J in center,
            'kind': kind, 'q_ell_sign': (-1) ** spec.a, 'muger_center': center}
