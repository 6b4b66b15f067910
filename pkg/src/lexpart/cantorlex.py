"""Finite-support points of ^alpha 2 under the lexicographic order.

A :class:`Point` is a binary sequence of length ``alpha`` with finitely many
1 bits, stored as the set of their positions.  Split levels, meets and the
fixed bijection ``B : alpha -> omega`` live here.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key
from math import isqrt
from typing import Iterable, Optional

from .ordinal import OMEGA, ZERO, Ordinal, add, left_subtract, omega_power, ordinal

__all__ = [
    "Alpha", "Point", "Stem", "AmbientError", "lex_cmp", "delta", "meet",
    "extends", "delta_min", "b_encode", "b_decode", "script_n", "sort_points",
    "point", "KAPPA",
]


class AmbientError(ValueError):
    pass


@dataclass(frozen=True)
class Alpha:
    """Ambient length.  ``length=None`` stands for a symbolic uncountable kappa."""

    length: Optional[Ordinal] = OMEGA
    countable: bool = True

    def __post_init__(self):
        if self.length is None:
            object.__setattr__(self, "countable", False)
            return
        object.__setattr__(self, "length", ordinal(self.length))
        if self.length.is_finite():
            raise AmbientError("alpha must be infinite")

    def contains(self, o: Ordinal) -> bool:
        return self.length is None or o < self.length

    def __str__(self):
        return "kappa" if self.length is None else str(self.length)


KAPPA = Alpha(None, False)


def _positions(alpha: Alpha, items) -> frozenset:
    out = frozenset(ordinal(p) for p in items)
    for p in out:
        if not alpha.contains(p):
            raise AmbientError(f"position {p} is not below {alpha}")
    return out


def _fmt_set(s) -> str:
    return "{" + ", ".join(str(p) for p in sorted(s)) + "}"


@dataclass(frozen=True)
class Point:
    ambient: Alpha
    support: frozenset

    def __post_init__(self):
        object.__setattr__(self, "support", _positions(self.ambient, self.support))

    def __lt__(self, other):
        return lex_cmp(self, other) < 0

    def __str__(self):
        return "point" + _fmt_set(self.support)

    def bit(self, pos) -> int:
        return int(ordinal(pos) in self.support)


@dataclass(frozen=True)
class Stem:
    ambient: Alpha
    height: Ordinal
    bits: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "height", ordinal(self.height))
        object.__setattr__(self, "bits", _positions(self.ambient, self.bits))
        if self.ambient.length is not None and self.height > self.ambient.length:
            raise AmbientError("stem height exceeds alpha")
        if any(not p < self.height for p in self.bits):
            raise AmbientError("stem bits must lie below its height")

    def __str__(self):
        return f"stem(h={self.height})" + _fmt_set(self.bits)


def point(alpha: Alpha, *positions) -> Point:
    return Point(alpha, frozenset(positions))


def _same(x, y):
    if x.ambient != y.ambient:
        raise AmbientError("points live in different ambients")


def lex_cmp(x: Point, y: Point) -> int:
    _same(x, y)
    if x.support == y.support:
        return 0
    d = min(x.support ^ y.support)
    return 1 if d in x.support else -1


def delta(x: Point, y: Point) -> Ordinal:
    """Height of the split between ``x`` and ``y``."""
    _same(x, y)
    diff = x.support ^ y.support
    if not diff:
        raise ValueError("delta of a point with itself")
    return min(diff)


def meet(x: Point, y: Point) -> Stem:
    h = delta(x, y)
    return Stem(x.ambient, h, frozenset(p for p in x.support if p < h))


def extends(x: Point, s: Stem) -> bool:
    if x.ambient != s.ambient:
        raise AmbientError("point and stem live in different ambients")
    return frozenset(p for p in x.support if p < s.height) == s.bits


def sort_points(points: Iterable[Point]) -> list[Point]:
    return sorted(points, key=cmp_to_key(lex_cmp))


def delta_min(points: Iterable[Point]) -> Ordinal:
    pts = sort_points(set(points))
    if len(pts) < 2:
        raise ValueError("delta_min needs at least two points")
    return min(delta(a, b) for a, b in zip(pts, pts[1:]))


# -- the bijection B : alpha -> omega ---------------------------------------

def _pair(x: int, y: int) -> int:
    return (x + y) * (x + y + 1) // 2 + y


def _unpair(z: int) -> tuple[int, int]:
    w = (isqrt(8 * z + 1) - 1) // 2
    y = z - w * (w + 1) // 2
    return w - y, y


def _tuple_encode(digits: list[int]) -> int:
    code = digits[-1]
    for d in reversed(digits[:-1]):
        code = _pair(d, code)
    return code


def _tuple_decode(code: int, n: int) -> list[int]:
    out = []
    for _ in range(n - 1):
        d, code = _unpair(code)
        out.append(d)
    out.append(code)
    return out


def _layout(alpha: Alpha):
    """Blocks ``(start, exponent)`` of type w^e covering alpha, plus its finite part."""
    if not alpha.countable or alpha.length is None:
        raise AmbientError("B is only defined for countable alpha")
    blocks, start = [], ZERO
    for e, k in alpha.length.terms:
        if e.is_zero():
            continue
        if not e.is_finite():
            raise AmbientError(f"B is implemented for alpha < w^w, got {alpha}")
        for _ in range(k):
            blocks.append((start, int(e)))
            start = add(start, omega_power(e))
    return blocks, start, alpha.length.finite_part()


def b_encode(alpha: Alpha, o) -> int:
    o = ordinal(o)
    if not alpha.contains(o):
        raise AmbientError(f"{o} is not below {alpha}")
    blocks, top, c = _layout(alpha)
    if o >= top:
        return int(left_subtract(top, o))
    for b in range(len(blocks) - 1, -1, -1):
        start, e = blocks[b]
        if o >= start:
            break
    r = left_subtract(start, o)
    coeff = {int(x): k for x, k in r.terms}
    digits = [coeff.get(i, 0) for i in range(e - 1, -1, -1)]
    return c + len(blocks) * _tuple_encode(digits) + b


def b_decode(alpha: Alpha, n: int) -> Ordinal:
    if n < 0:
        raise ValueError("B decodes naturals")
    blocks, top, c = _layout(alpha)
    if n < c:
        return add(top, n)
    b = (n - c) % len(blocks)
    start, e = blocks[b]
    digits = _tuple_decode((n - c) // len(blocks), e)
    r = ZERO
    for i, d in zip(range(e - 1, -1, -1), digits):
        if d:
            r = add(r, omega_power(i, d))
    return add(start, r)


def script_n(alpha: Alpha, x: Point, y: Point) -> int:
    return b_encode(alpha, delta(x, y))
