"""Root data of sp(2n) and so(2k+1), category specifications and their label sets.

Inner products are taken in the ``e_i`` basis with ``<e_i, e_j> = s * delta_ij``, where
``s = 1`` for type C and ``s = 2`` for type B.  In both cases the short roots have
squared length 2.  Roots of unity are parametrised by ``q = exp(i pi a / ell)`` and
fractional powers are taken on that fixed branch, ``q**x = exp(i pi a x / ell)``.
"""
from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product
from typing import Iterator, Sequence

from .combinatorics import Partition, enumerate_rectangle, graded_lex_key

__all__ = ['Family', 'RootSystem', 'CategorySpec', 'Label', 'label_set', 'casimir',
           'weyl_elements', 'root_system', 'qpow', 'WEYL_RANK_LIMIT']

WEYL_RANK_LIMIT = 10
HALF = Fraction(1, 2)


class Family(str, enum.Enum):
    SP_EVEN = 'sp-even'
    SP_ODD = 'sp-odd'
    SO_ODD = 'so-odd'
    SO_LEVEL1 = 'so-level1'


@dataclass(frozen=True)
class RootSystem:
    """Type ``C`` (sp(2n)) or type ``B`` (so(2n+1)) root system of a given rank."""
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in ('B', 'C'):
            raise ValueError(f'unsupported root system type {self.family!r}')
        if self.rank < 1:
            raise ValueError('rank must be positive')

    @property
    def scale(self) -> int:
        return 1 if self.family == 'C' else 2

    @property
    def rho(self) -> tuple[Fraction, ...]:
        n = self.rank
        if self.family == 'C':
            return tuple(Fraction(n - i) for i in range(n))
        return tuple(Fraction(2 * (n - i) - 1, 2) for i in range(n))

    def inner(self, x: Sequence, y: Sequence):
        return self.scale * sum(a * b for a, b in zip(x, y))

    def positive_roots(self) -> list[tuple[int, ...]]:
        n = self.rank
        roots = []
        for i in range(n):
            for j in range(i + 1, n):
                for sign in (-1, 1):
                    r = [0] * n
                    r[i], r[j] = 1, sign
                    roots.append(tuple(r))
        for i in range(n):
            r = [0] * n
            r[i] = 2 if self.family == 'C' else 1
            roots.append(tuple(r))
        return roots

    def casimir(self, weight: Sequence) -> Fraction:
        """``<weight + 2 rho, weight>``."""
        w = [Fraction(x) for x in weight]
        w += [Fraction(0)] * (self.rank - len(w))
        return Fraction(self.inner([a + 2 * r for a, r in zip(w, self.rho)], w))


def root_system(family: str | Family, rank: int) -> RootSystem:
    family = Family(family)
    if family in (Family.SP_EVEN, Family.SP_ODD):
        return RootSystem('C', rank)
    if family is Family.SO_ODD:
        return RootSystem('B', rank)
    raise ValueError(f'{family.value} has no finite root system attached')


@dataclass(frozen=True, order=True)
class Label:
    """Simple-object label.  ``spin`` shifts every one of ``rank`` entries by 1/2."""
    partition: Partition
    spin: bool = False

    def __post_init__(self):
        object.__setattr__(self, 'partition', Partition(self.partition))

    def weight(self, rank: int) -> tuple[Fraction, ...]:
        p = self.partition.padded(rank)
        shift = HALF if self.spin else Fraction(0)
        return tuple(Fraction(x) + shift for x in p)

    @property
    def size(self) -> int:
        return self.partition.size

    def __str__(self):
        return str(self.partition) + ('+1/2' if self.spin else '')

    def to_json(self, rank: int | None = None):
        if not self.spin:
            return list(self.partition)
        return {'spin': True, 'weight': [_frac_str(x) for x in self.weight(rank)]}


def _frac_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f'{x.numerator}/{x.denominator}'


@dataclass(frozen=True)
class CategorySpec:
    """A braided fusion category of type B or C at a root of unity.

    ``rank`` is ``n`` for the sp families, ``k`` for ``so-odd`` and ``N = 4nk`` for
    ``so-level1``.  ``a`` selects ``q = exp(i pi a / ell)``.
    """
    family: Family
    rank: int
    ell: int
    a: int = 1

    def __post_init__(self):
        object.__setattr__(self, 'family', Family(self.family))
        self.validate()

    def validate(self):
        fam, r, ell, a = self.family, self.rank, self.ell, self.a
        if r < 1:
            raise ValueError(f'rank must be positive, got {r}')
        if fam is Family.SO_LEVEL1:
            if r % 4:
                raise ValueError(f'so-level1 needs N divisible by 4, got {r}')
            return
        if a < 1 or math.gcd(a, ell) != 1:
            raise ValueError(f'q-exponent a={a} must be positive and coprime to ell={ell}')
        if fam is Family.SP_EVEN:
            if ell % 2 or ell < 2 * r + 4:
                raise ValueError(f'sp-even needs even ell = 2n+2k+2 with k >= 1, got ell={ell}')
        elif ell % 2 == 0 or ell < 2 * r + 3:
            raise ValueError(f'{fam.value} needs odd ell = 2n+2k+1 with n, k >= 1, got ell={ell}')

    @classmethod
    def sp_even(cls, n: int, k: int, a: int = 1) -> CategorySpec:
        return cls(Family.SP_EVEN, n, 2 * n + 2 * k + 2, a)

    @property
    def level(self) -> int:
        """Level ``k`` of sp-even; for the odd families the partner rank."""
        if self.family is Family.SP_EVEN:
            return self.ell // 2 - self.rank - 1
        if self.family in (Family.SP_ODD, Family.SO_ODD):
            return (self.ell - 2 * self.rank - 1) // 2
        raise ValueError('so-level1 has level 1')

    @property
    def root_system(self) -> RootSystem:
        return root_system(self.family, self.rank)

    def q(self, x=1) -> complex:
        return qpow(x, self.a, self.ell)

    def to_json(self) -> dict:
        return {'family': self.family.value, 'rank': self.rank, 'ell': self.ell, 'a': self.a}

    @classmethod
    def from_json(cls, d: dict) -> CategorySpec:
        return cls(Family(d['family']), int(d['rank']), int(d['ell']), int(d.get('a', 1)))


def qpow(x, a: int, ell: int) -> complex:
    """``exp(i pi a x / ell)`` with the exponent reduced exactly modulo ``2 ell``.

    Quarter turns are returned exactly, so that e.g. a twist of ``-1`` has no rounding
    residue in its imaginary part.
    """
    turns = (Fraction(x) * a) % (2 * ell) / ell
    if (2 * turns).denominator == 1:
        return (1 + 0j, 1j, -1 + 0j, -1j)[int(2 * turns) % 4]
    return cmath.exp(1j * math.pi * float(turns))


def label_set(spec: CategorySpec) -> list[Label]:
    """Ordered simple objects: unit first, then by size and lexicographically."""
    fam, r, ell = spec.family, spec.rank, spec.ell
    if fam is Family.SP_EVEN:
        return [Label(p) for p in enumerate_rectangle((r, spec.level))]
    if fam is Family.SP_ODD:
        bound = ell - 2 * r
        parts = [p for p in _partitions_bounded(r, bound) if p.part(0) + p.part(1) <= bound]
        parts.sort(key=graded_lex_key)
        return [Label(p) for p in parts]
    if fam is Family.SO_ODD:
        rect = enumerate_rectangle((r, (ell - 2 * r - 1) // 2))
        return [Label(p) for p in rect] + [Label(p, spin=True) for p in rect]
    if fam is Family.SO_LEVEL1:
        raise ValueError('so-level1 labels are symbolic; use modular.so_level1_data')
    raise ValueError(f'unknown family {fam}')


def _partitions_bounded(rows: int, bound: int) -> list[Partition]:
    out = []

    def rec(prefix, b, left):
        out.append(Partition(prefix))
        if left:
            for p in range(1, b + 1):
                rec(prefix + [p], p, left - 1)

    rec([], bound, rows)
    return out


def casimir(label: Label, rs: RootSystem) -> Fraction:
    if label.spin and rs.family != 'B':
        raise ValueError('spin labels only exist in type B')
    return rs.casimir(label.weight(rs.rank))


def weyl_elements(rank: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...], int]]:
    """Signed permutations ``w`` as ``(perm, signs, det)``, acting by ``(w x)_i = signs[i] * x[perm[i]]``."""
    if rank < 1 or rank > WEYL_RANK_LIMIT:
        raise ValueError(f'Weyl group enumeration supports 1 <= rank <= {WEYL_RANK_LIMIT}, got {rank}')
    for perm in permutations(range(rank)):
        psign = _perm_sign(perm)
        for signs in product((1, -1), repeat=rank):
            yield perm, signs, psign * math.prod(signs)


def _perm_sign(perm: Sequence[int]) -> int:
    sign, seen = 1, [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign
