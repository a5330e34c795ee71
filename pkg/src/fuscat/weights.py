"""Weight multiplicities of sp(2n) modules and level-k fusion by affine reflection.

This is the combinatorial route to the fusion rules of ``C(sp(2n))_k``: tensor
with the weights of one factor (Brauer-Klimyk) and fold the result into the level-k
alcove with the affine Weyl group (Kac-Walton).  For the vector representation the
weights are ``+-e_i`` and the rule reduces to adding or removing one box.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import permutations, product

import numpy as np

from .combinatorics import Partition

__all__ = ['dominant_weights', 'weight_multiplicities', 'all_weights', 'fold_to_alcove',
           'kac_walton_row']


def _dominates(lam, mu) -> bool:
    # type C dominance on partitions with equal size parity
    s = t = 0
    for a, b in zip(lam, mu):
        s += a
        t += b
        if t > s:
            return False
    return True


def dominant_weights(lam: Partition, n: int) -> list[tuple[int, ...]]:
    """Dominant weights of the sp(2n) module ``lam`` (as ``n``-tuples)."""
    lam = lam.padded(n)
    size = sum(lam)
    out = []

    def rec(prefix, bound):
        if len(prefix) == n:
            if (size - sum(prefix)) % 2 == 0 and _dominates(lam, prefix):
                out.append(tuple(prefix))
            return
        for p in range(min(bound, lam[0]), -1, -1):
            rec(prefix + [p], p)

    rec([], lam[0] if n else 0)
    return out


@lru_cache(maxsize=None)
def weight_multiplicities(lam: Partition, n: int) -> dict[tuple[int, ...], int]:
    """Freudenthal's formula for the dominant weight multiplicities of ``lam``.

    Orthonormal ``e_i`` coordinates; positive roots ``e_i +- e_j`` and ``2 e_i``.
    """
    lam_p = lam.padded(n)
    rho = tuple(n - i for i in range(n))
    roots = []
    for i in range(n):
        for j in range(i + 1, n):
            for s in (1, -1):
                r = [0] * n
                r[i], r[j] = 1, s
                roots.append(tuple(r))
        r = [0] * n
        r[i] = 2
        roots.append(tuple(r))

    def norm_shift(x):
        return sum((a + b) ** 2 for a, b in zip(x, rho))

    top = norm_shift(lam_p)
    doms = dominant_weights(lam, n)
    doms.sort(key=lambda mu: -sum(a * b for a, b in zip(mu, rho)))
    mult: dict[tuple[int, ...], int] = {}

    def m_of(x):
        return mult.get(tuple(sorted((abs(v) for v in x), reverse=True)), 0)

    for mu in doms:
        if mu == lam_p:
            mult[mu] = 1
            continue
        acc = 0
        for alpha in roots:
            j = 1
            while True:
                x = tuple(a + j * b for a, b in zip(mu, alpha))
                mx = m_of(x)
                if mx == 0 and not _could_be_weight(x, lam_p):
                    break
                acc += mx * sum(a * b for a, b in zip(x, alpha))
                j += 1
        den = top - norm_shift(mu)
        val, rem = divmod(2 * acc, den)
        if rem:
            raise ArithmeticError(f'Freudenthal produced a non-integer multiplicity at {mu}')
        if val:
            mult[mu] = val
    return mult


def _could_be_weight(x, lam_p) -> bool:
    dom = sorted((abs(v) for v in x), reverse=True)
    return _dominates(lam_p, dom)


def _orbit(mu: tuple[int, ...]) -> set[tuple[int, ...]]:
    out = set()
    for perm in set(permutations(mu)):
        nz = [i for i, v in enumerate(perm) if v]
        for signs in product((1, -1), repeat=len(nz)):
            v = list(perm)
            for i, s in zip(nz, signs):
                v[i] *= s
            out.add(tuple(v))
    return out


@lru_cache(maxsize=None)
def all_weights(lam: Partition, n: int) -> tuple[np.ndarray, np.ndarray]:
    """All weights of ``lam`` with multiplicities, as ``(weights[m, n], mult[m])``."""
    ws, ms = [], []
    for mu, m in weight_multiplicities(lam, n).items():
        for v in _orbit(mu):
            ws.append(v)
            ms.append(m)
    return np.array(ws, dtype=np.int64).reshape(-1, n), np.array(ms, dtype=np.int64)


def fold_to_alcove(x: np.ndarray, period: int) -> tuple[np.ndarray, np.ndarray]:
    """Fold shifted weights into the open alcove ``period > y_1 > ... > y_n > 0``.

    Returns ``(y, sign)`` with ``sign == 0`` for points on a wall.  The affine Weyl
    group is generated by signed permutations and translations by ``2 * period``.
    """
    r = np.mod(x, 2 * period)
    r = np.where(r > period, r - 2 * period, r)
    sign = np.prod(np.where(r < 0, -1, 1), axis=1)
    y = np.abs(r)
    on_wall = np.any((y == 0) | (y == period), axis=1)
    n = x.shape[1]
    inv = np.zeros(len(x), dtype=np.int64)
    dup = np.zeros(len(x), dtype=bool)
    for i in range(n):
        for j in range(i + 1, n):
            inv += y[:, i] < y[:, j]
            dup |= y[:, i] == y[:, j]
    sign = sign * np.where(inv % 2, -1, 1)
    sign[on_wall | dup] = 0
    return -np.sort(-y, axis=1), sign


def kac_walton_row(lam: Partition, labels: list[Partition], n: int, k: int) -> np.ndarray:
    """``N[mu, nu]`` = multiplicity of ``nu`` in ``lam (x) mu`` at level ``k``."""
    period = n + k + 1
    rho = np.arange(n, 0, -1)
    ws, ms = all_weights(lam, n)
    shifted = np.array([p.padded(n) for p in labels], dtype=np.int64).reshape(-1, n) + rho
    powers = period ** np.arange(n, dtype=np.int64)
    keys = shifted @ powers
    order = np.argsort(keys)
    L = len(labels)
    out = np.zeros((L, L), dtype=np.int64)
    for j in range(L):
        y, sign = fold_to_alcove(shifted[j] + ws, period)
        keep = sign != 0
        yk = y[keep] @ powers
        pos = np.searchsorted(keys, yk, sorter=order)
        idx = order[pos]
        if np.any(keys[idx] != yk):
            raise AssertionError('folded weight outside the label set')
        np.add.at(out[j], idx, sign[keep] * ms[keep])
    return out
