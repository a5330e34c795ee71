"""Partitions in rectangles and the transpose / complement / dot-diagram bijections.

A partition in an ``n x k`` rectangle has at most ``n`` nonzero parts, each at most
``k``.  The set of these is written ``I(n, k)`` below.  Level-``k`` affine weights
``(k_0, ..., k_n)`` with ``sum == k`` correspond to ``I(n, k)`` via :func:`to_affine`
and :func:`from_affine`.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

__all__ = ['Partition', 'Rectangle', 'AffineWeight', 'enumerate_rectangle', 'transpose',
           'complement', 'tc', 'to_affine', 'from_affine', 'dot_diagram', 'read_black',
           'read_white', 'partition_from_dots', 'graded_lex_key']

BLACK = 'B'
WHITE = 'W'


class Partition(tuple):
    """Weakly decreasing tuple of nonnegative integers, trailing zeros stripped.

    ``Partition((5, 1, 1, 1, 0, 0)) == Partition((5, 1, 1, 1))``.
    """

    def __new__(cls, parts=()):
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f'parts must be weakly decreasing, got {parts}')
        if parts and parts[-1] < 0:
            raise ValueError(f'parts must be nonnegative, got {parts}')
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """0-based part ``i``, zero beyond the length."""
        return self[i] if i < len(self) else 0

    def padded(self, n: int) -> tuple[int, ...]:
        if len(self) > n:
            raise ValueError(f'{self} has more than {n} parts')
        return tuple(self) + (0,) * (n - len(self))

    def fits(self, n: int, k: int) -> bool:
        return len(self) <= n and (not self or self[0] <= k)

    def __repr__(self):
        return f'Partition({tuple(self)!r})'

    def __str__(self):
        return '(' + ','.join(str(p) for p in self) + ')'


@dataclass(frozen=True)
class Rectangle:
    n: int
    k: int

    def __post_init__(self):
        if self.n < 1 or self.k < 1:
            raise ValueError(f'rectangle bounds must be positive, got {self.n}x{self.k}')

    @property
    def transposed(self) -> Rectangle:
        return Rectangle(self.k, self.n)

    def __contains__(self, lam) -> bool:
        return Partition(lam).fits(self.n, self.k)


@dataclass(frozen=True)
class AffineWeight:
    """Dynkin labels ``(k_0, k_1, ..., k_n)`` of a level ``sum(marks)`` affine weight."""
    marks: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'marks', tuple(int(m) for m in self.marks))
        if any(m < 0 for m in self.marks):
            raise ValueError(f'affine marks must be nonnegative, got {self.marks}')
        if len(self.marks) < 2:
            raise ValueError('an affine weight needs at least k_0 and k_1')

    @property
    def level(self) -> int:
        return sum(self.marks)

    @property
    def rank(self) -> int:
        return len(self.marks) - 1

    @property
    def finite_part(self) -> tuple[int, ...]:
        return self.marks[1:]


def _as_rect(rect) -> Rectangle:
    return rect if isinstance(rect, Rectangle) else Rectangle(*rect)


def _check_in(lam: Partition, rect: Rectangle):
    if not lam.fits(rect.n, rect.k):
        raise ValueError(f'{lam} does not fit a {rect.n}x{rect.k} rectangle')


def graded_lex_key(lam) -> tuple:
    return (sum(lam), tuple(lam))


def enumerate_rectangle(rect) -> list[Partition]:
    """All partitions in the rectangle, ordered by size and then lexicographically."""
    rect = _as_rect(rect)
    out = []

    def rec(prefix, bound, rows_left):
        out.append(Partition(prefix))
        if rows_left == 0:
            return
        for p in range(1, bound + 1):
            rec(prefix + [p], p, rows_left - 1)

    rec([], rect.k, rect.n)
    out.sort(key=graded_lex_key)
    assert len(out) == comb(rect.n + rect.k, rect.n)
    return out


def transpose(lam) -> Partition:
    lam = Partition(lam)
    if not lam:
        return lam
    return Partition(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def complement(lam, rect) -> Partition:
    """Transpose of the complement of ``lam`` in the ``n x k`` rectangle; lies in ``I(k, n)``."""
    lam, rect = Partition(lam), _as_rect(rect)
    _check_in(lam, rect)
    comp = [rect.k - lam.part(i) for i in reversed(range(rect.n))]
    return transpose(comp)


def tc(lam, rect) -> Partition:
    """The involution ``lam -> (lam^t)^c`` of ``I(n, k)``."""
    lam, rect = Partition(lam), _as_rect(rect)
    _check_in(lam, rect)
    return complement(transpose(lam), rect.transposed)


def to_affine(lam, rect) -> AffineWeight:
    lam, rect = Partition(lam), _as_rect(rect)
    _check_in(lam, rect)
    p = lam.padded(rect.n)
    marks = [rect.k - p[0]] + [p[i] - p[i + 1] for i in range(rect.n - 1)] + [p[-1]]
    return AffineWeight(tuple(marks))


def from_affine(w) -> Partition:
    marks = w.marks if isinstance(w, AffineWeight) else AffineWeight(tuple(w)).marks
    tail = marks[1:]
    return Partition(sum(tail[i:]) for i in range(len(tail)))


def dot_diagram(lam, rect) -> str:
    """Black/white dot string for ``lam``: ``k_i`` white dots follow the ``i``-th black dot.

    Returned over the alphabet ``{'B', 'W'}`` with ``n`` blacks and ``k`` whites.
    """
    marks = to_affine(lam, rect).marks
    return WHITE * marks[0] + ''.join(BLACK + WHITE * m for m in marks[1:])


def _read(dots: str, ink: str) -> Partition:
    # part i = number of opposite-colour dots after the i-th dot of colour `ink`
    parts = []
    for pos, d in enumerate(dots):
        if d == ink:
            parts.append(sum(1 for e in dots[pos + 1:] if e != ink))
    return Partition(parts)


def read_black(dots: str) -> Partition:
    """Partition in ``I(#B, #W)`` encoded by the black dots."""
    _validate_dots(dots)
    return _read(dots, BLACK)


def read_white(dots: str) -> Partition:
    """How the white dots partition the black ones; the complement of :func:`read_black`."""
    _validate_dots(dots)
    return _read(dots, WHITE)


def partition_from_dots(dots: str) -> tuple[Partition, Rectangle]:
    _validate_dots(dots)
    return read_black(dots), Rectangle(dots.count(BLACK), dots.count(WHITE))


def _validate_dots(dots: str):
    if set(dots) - {BLACK, WHITE}:
        raise ValueError(f'dot diagrams use only {BLACK!r} and {WHITE!r}: {dots!r}')


def all_dot_diagrams(n: int, k: int) -> list[str]:
    """Every placement of ``n`` black dots among ``n + k`` positions."""
    out = []
    for blacks in combinations(range(n + k), n):
        s = set(blacks)
        out.append(''.join(BLACK if i in s else WHITE for i in range(n + k)))
    return out
