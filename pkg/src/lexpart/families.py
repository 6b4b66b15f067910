"""Finitely described infinite subsets of ^alpha 2.

Blocks of a :class:`RepFamily`:

* :class:`Finite` -- explicit points;
* :class:`Chain` -- a copy of w (``asc``) or w* (``desc``) given by a stem,
  a level schedule ``L`` and an optional index selection ``p``, plus a finite
  ``head`` of explicit points glued at the bounded end;
* :class:`ZetaClass` -- a ``desc`` chain followed by an ``asc`` chain;
* :class:`RawSequence` / :class:`RawZeta` -- sequences given by their
  consecutive split levels, not yet canonised;
* :class:`Tower` -- an w-sequence of w*-intervals (type w*.w).

Body points of a chain, with ``E = L o p``:

* asc:  ``body(n) = stem | {L(j) : j < p(n)}``, increasing;
* desc: ``body(n) = stem | {E(n)}``, decreasing.

In both cases ``delta(body(n), body(m)) = E(min(n, m))``.
Chains are enumerated from the bounded end: ``element(0)`` is the minimum of
an asc chain and the maximum of a desc chain.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import Optional, Union

from .cantorlex import Alpha, AmbientError, Point, delta, lex_cmp
from .ordinal import (
    OMEGA, ONE, ZERO, Ordinal, add, left_subtract, mul, ordinal,
)
from .ordertype import Fin, Ord, Prod, Rev, Sum, TypeExpr, zeta

__all__ = [
    "LevelSchedule", "GSet", "Finite", "Chain", "ZetaClass", "RawSequence",
    "RawZeta", "Tower", "RepFamily", "Block", "FamilyError", "WindowError",
    "compare_blocks", "drop_prefix", "order_type", "cc_enumerate", "CondClass",
    "block_points", "sched", "nat_sched",
]

ASC, DESC = "asc", "desc"


class FamilyError(ValueError):
    pass


class WindowError(FamilyError):
    pass


# -- level schedules ----------------------------------------------------------

@dataclass(frozen=True)
class LevelSchedule:
    """Strictly increasing levels: an explicit prefix, then ``start + step*n``."""

    prefix: tuple = ()
    start: Ordinal = ZERO
    step: Ordinal = ONE

    def __post_init__(self):
        object.__setattr__(self, "prefix", tuple(ordinal(p) for p in self.prefix))
        object.__setattr__(self, "start", ordinal(self.start))
        object.__setattr__(self, "step", ordinal(self.step))
        if self.step.is_zero():
            raise FamilyError("schedule step must be >= 1")
        seq = self.prefix + (self.start,)
        if any(not a < b for a, b in zip(seq, seq[1:])):
            raise FamilyError("schedule must be strictly increasing")

    def __str__(self):
        pre = ", ".join(str(p) for p in self.prefix)
        return f"sched(prefix=[{pre}], start={self.start}, step={self.step})"

    def level(self, i: int) -> Ordinal:
        if i < len(self.prefix):
            return self.prefix[i]
        n = i - len(self.prefix)
        return add(self.start, mul(self.step, n)) if n else self.start

    def levels(self, k: int) -> list[Ordinal]:
        return [self.level(i) for i in range(k)]

    @property
    def sup(self) -> Ordinal:
        return add(self.start, mul(self.step, OMEGA))

    def shift(self, k: int) -> "LevelSchedule":
        if k <= len(self.prefix):
            return LevelSchedule(self.prefix[k:], self.start, self.step)
        return LevelSchedule((), self.level(k), self.step)

    def index_of(self, value) -> Optional[int]:
        value = ordinal(value)
        if value in self.prefix:
            return self.prefix.index(value)
        if value < self.start:
            return None
        d = left_subtract(self.start, value)
        if d.is_zero():
            return len(self.prefix)
        e, c = self.step.terms[0]
        if d.terms[0][0] != e or d.terms[1:] != self.step.terms[1:] or d.terms[0][1] % c:
            return None
        n = d.terms[0][1] // c
        return len(self.prefix) + n if mul(self.step, n) == d else None

    def count_below(self, bound) -> Optional[int]:
        """Number of levels below ``bound``; None when all of them are."""
        bound = ordinal(bound)
        if self.sup <= bound:
            return None
        lo, hi = 0, 1
        while self.level(hi) < bound:
            lo, hi = hi, hi * 2
        while lo < hi:
            mid = (lo + hi) // 2
            if self.level(mid) < bound:
                lo = mid + 1
            else:
                hi = mid
        return lo

    def is_natural(self) -> bool:
        return self.sup == OMEGA

    def compose(self, picks: "LevelSchedule") -> "LevelSchedule":
        """The schedule ``n -> self.level(picks(n))`` for a natural ``picks``."""
        if not picks.is_natural():
            raise FamilyError("index selections must be natural schedules")
        P = len(self.prefix)
        pre = [self.level(int(i)) for i in picks.prefix]
        p0, ps = int(picks.start), int(picks.step)
        while p0 < P:
            pre.append(self.level(p0))
            p0 += ps
        return LevelSchedule(tuple(pre), self.level(p0), mul(self.step, ps)).normal()

    def normal(self) -> "LevelSchedule":
        """Pull prefix entries that continue the affine tail into it."""
        pre, start = list(self.prefix), self.start
        while pre and add(pre[-1], self.step) == start:
            start = pre.pop()
        return LevelSchedule(tuple(pre), start, self.step)

    def same_image(self, other: "LevelSchedule") -> bool:
        return self.normal() == other.normal()


def sched(prefix=(), start=0, step=1) -> LevelSchedule:
    return LevelSchedule(tuple(prefix), start, step)


def nat_sched(start=0, step=1, prefix=()) -> LevelSchedule:
    return LevelSchedule(tuple(prefix), start, step)


IDENTITY = LevelSchedule((), ZERO, ONE)


# -- generalized points: a finite set plus a schedule image ------------------

@dataclass(frozen=True)
class GSet:
    """A subset of alpha of the form ``finite | image(schedule)``, ordered lexicographically."""

    finite: frozenset = frozenset()
    schedule: Optional[LevelSchedule] = None

    def _iter(self):
        """Ascending elements, each tagged with the tail step once only the affine tail remains."""
        fin = sorted(self.finite)
        sch = self.schedule
        i = j = 0
        while True:
            s = sch.level(j) if sch is not None else None
            if i < len(fin) and (s is None or fin[i] < s):
                yield fin[i], None
                i += 1
            elif s is not None:
                yield s, (sch.step if i >= len(fin) and j >= len(sch.prefix) else None)
                j += 1
            else:
                return

    def cmp(self, other: "GSet") -> int:
        a, b = self._iter(), other._iter()
        while True:
            x, y = next(a, None), next(b, None)
            if x is None and y is None:
                return 0
            if x is None:
                return -1
            if y is None:
                return 1
            if x[0] != y[0]:
                return 1 if x[0] < y[0] else -1
            if x[1] is not None and x[1] == y[1]:
                return 0


def _gpoint(p: Point) -> GSet:
    return GSet(p.support)


# -- blocks -------------------------------------------------------------------

@dataclass(frozen=True)
class Finite:
    points: tuple

    def __post_init__(self):
        pts = tuple(self.points)
        if not pts:
            raise FamilyError("empty finite block")
        if any(lex_cmp(a, b) >= 0 for a, b in zip(pts, pts[1:])):
            raise FamilyError("finite block points must be listed in increasing order")
        object.__setattr__(self, "points", pts)

    @property
    def ambient(self):
        return self.points[0].ambient

    def validate(self):
        if len({p.ambient for p in self.points}) != 1:
            raise AmbientError("finite block mixes ambients")

    def inf(self):
        return _gpoint(self.points[0]), True

    def sup(self):
        return _gpoint(self.points[-1]), True

    def order_type(self) -> TypeExpr:
        return Fin(len(self.points))


@dataclass(frozen=True)
class Chain:
    ambient: Alpha
    kind: str
    stem: frozenset
    schedule: LevelSchedule
    head: tuple = ()
    picks: Optional[LevelSchedule] = None

    def __post_init__(self):
        if self.kind not in (ASC, DESC):
            raise FamilyError(f"chain kind must be asc or desc, got {self.kind!r}")
        object.__setattr__(self, "stem", frozenset(ordinal(p) for p in self.stem))
        object.__setattr__(self, "head", tuple(self.head))
        if self.picks is not None:
            if not self.picks.is_natural():
                raise FamilyError("picks must be a natural schedule")
            if self.picks == IDENTITY:
                object.__setattr__(self, "picks", None)

    # decoding
    def pick(self, n: int) -> int:
        return n if self.picks is None else int(self.picks.level(n))

    @cached_property
    def levels(self) -> LevelSchedule:
        """Split levels of the body, ``E = L o p``."""
        return self.schedule if self.picks is None else self.schedule.compose(self.picks)

    def body(self, n: int) -> Point:
        if self.kind == ASC:
            bits = self.stem | frozenset(self.schedule.levels(self.pick(n)))
        else:
            bits = self.stem | {self.levels.level(n)}
        return Point(self.ambient, bits)

    def element(self, i: int) -> Point:
        h = len(self.head)
        return self.head[i] if i < h else self.body(i - h)

    def points(self, k: int) -> list[Point]:
        return [self.element(i) for i in range(k)]

    def split(self, i: int) -> Ordinal:
        """delta between the i-th and (i+1)-th elements from the bounded end."""
        h = len(self.head)
        if i >= h:
            return self.levels.level(i - h)
        return delta(self.element(i), self.element(i + 1))

    def head_splits(self) -> list[Ordinal]:
        return [self.split(i) for i in range(len(self.head))]

    def is_canonised(self) -> bool:
        s = self.head_splits() + [self.split(len(self.head))]
        return all(a < b for a, b in zip(s, s[1:]))

    def validate(self):
        L = self.schedule
        if self.ambient.length is not None and not L.sup <= self.ambient.length:
            raise AmbientError("schedule levels exceed alpha")
        for p in self.stem:
            if not self.ambient.contains(p):
                raise AmbientError(f"stem position {p} is not below {self.ambient}")
            if L.index_of(p) is not None:
                raise FamilyError(f"stem position {p} collides with a schedule level")
        sign = -1 if self.kind == ASC else 1
        pts = list(self.head) + [self.body(0)]
        for a, b in zip(pts, pts[1:]):
            if lex_cmp(a, b) != sign:
                raise FamilyError(f"{self.kind} chain elements out of order: {a}, {b}")
        for p in self.head:
            if p.ambient != self.ambient:
                raise AmbientError("head point from another ambient")

    # shrinking
    def drop_prefix(self, k: int) -> "Chain":
        if k <= 0:
            return self
        h = len(self.head)
        if k <= h:
            return replace(self, head=self.head[k:])
        k -= h
        if self.picks is not None:
            return replace(self, head=(), picks=self.picks.shift(k))
        if self.kind == ASC:
            stem = self.stem | frozenset(self.schedule.levels(k))
            return replace(self, head=(), stem=stem, schedule=self.schedule.shift(k))
        return replace(self, head=(), schedule=self.schedule.shift(k))

    def select(self, picks: LevelSchedule) -> "Chain":
        """Sub-chain on the body indices ``picks(n)``; the head is dropped."""
        new = picks if self.picks is None else self.picks.compose(picks)
        return replace(self, head=(), picks=new)

    def with_head(self, head) -> "Chain":
        return replace(self, head=tuple(head))

    # bounds
    def inf(self):
        if self.kind == ASC:
            return _gpoint(self.element(0)), True
        return GSet(self.stem), False

    def sup(self):
        if self.kind == ASC:
            return GSet(self.stem, self.schedule), False
        return _gpoint(self.element(0)), True

    def order_type(self) -> TypeExpr:
        h = len(self.head)
        if self.kind == ASC:
            return Sum((Fin(h), Ord(OMEGA))) if h else Ord(OMEGA)
        return Sum((Rev(Ord(OMEGA)), Fin(h))) if h else Rev(Ord(OMEGA))


@dataclass(frozen=True)
class ZetaClass:
    left: Chain
    right: Chain

    def __post_init__(self):
        if self.left.kind != DESC or self.right.kind != ASC:
            raise FamilyError("a zeta class is a desc chain followed by an asc chain")
        if self.left.ambient != self.right.ambient:
            raise AmbientError("zeta halves live in different ambients")

    @property
    def ambient(self):
        return self.left.ambient

    @property
    def root(self) -> Ordinal:
        return delta(self.left.element(0), self.right.element(0))

    def validate(self):
        self.left.validate()
        self.right.validate()
        if lex_cmp(self.left.element(0), self.right.element(0)) >= 0:
            raise FamilyError("zeta left half must precede the right half")

    def is_canonised(self) -> bool:
        r = self.root
        return (self.left.is_canonised() and self.right.is_canonised()
                and r < self.left.split(0) and r < self.right.split(0))

    def inf(self):
        return self.left.inf()

    def sup(self):
        return self.right.sup()

    def order_type(self) -> TypeExpr:
        h = len(self.left.head) + len(self.right.head)
        if h:
            return Sum((Rev(Ord(OMEGA)), Fin(h), Ord(OMEGA)))
        return zeta()

    def element(self, i: int) -> Point:
        """Integer-indexed: ``i >= 0`` runs up the right half, ``i < 0`` down the left."""
        return self.right.element(i) if i >= 0 else self.left.element(-i - 1)


@dataclass(frozen=True)
class RawSequence:
    """A sequence given by its consecutive splits ``d_0, d_1, ...``.

    asc:  ``x_n = stem | {d_j : j < n, d_j < d_i for all j < i < n}``, increasing
    desc: ``x_n = stem | {d_j : j >= n, d_j < d_i for all n <= i < j}``, decreasing

    so that ``delta(x_n, x_{n+1}) = d_n``.  The window ``W`` certifies that the
    minimum of the whole sequence is among ``d_0 .. d_{W-1}``.  Decoded points
    start at ``x_offset``.
    """

    ambient: Alpha
    direction: str
    stem: frozenset
    levels: tuple
    tail: LevelSchedule
    window: int = 1
    offset: int = 0

    def __post_init__(self):
        if self.direction not in (ASC, DESC):
            raise FamilyError("raw direction must be asc or desc")
        object.__setattr__(self, "stem", frozenset(ordinal(p) for p in self.stem))
        object.__setattr__(self, "levels", tuple(ordinal(d) for d in self.levels))

    @property
    def kind(self):
        return self.direction

    def d(self, j: int) -> Ordinal:
        P = len(self.levels)
        return self.levels[j] if j < P else self.tail.level(j - P)

    def validate(self):
        if self.window < 1:
            raise WindowError("window bound must be >= 1")
        P = len(self.levels)
        seen = set(self.levels)
        if len(seen) != P or any(self.tail.index_of(d) is not None for d in seen):
            raise FamilyError("raw split levels must be distinct")
        if any(p in seen or self.tail.index_of(p) is not None for p in self.stem):
            raise FamilyError("stem collides with a split level")
        if self.ambient.length is not None and not self.tail.sup <= self.ambient.length:
            raise AmbientError("raw levels exceed alpha")
        m = min(self.d(j) for j in range(self.window))
        later = [self.d(j) for j in range(self.window, max(self.window, P) + 1)]
        if any(v < m for v in later):
            raise WindowError(f"window certificate {self.window} undercut by a later split")

    def raw_point(self, n: int) -> Point:
        if self.direction == ASC:
            bits, low = set(), None
            for j in range(n - 1, -1, -1):
                v = self.d(j)
                if low is None or v < low:
                    bits.add(v)
                    low = v
        else:
            bits, low = set(), None
            P = len(self.levels)
            for j in range(n, max(n, P) + 1):
                v = self.d(j)
                if low is None or v < low:
                    bits.add(v)
                    low = v
        return Point(self.ambient, self.stem | bits)

    def element(self, i: int) -> Point:
        return self.raw_point(self.offset + i)

    def points(self, k: int) -> list[Point]:
        return [self.element(i) for i in range(k)]

    def to_chain(self) -> Chain:
        P = len(self.levels)
        if self.direction == DESC:
            head = tuple(self.raw_point(n) for n in range(P))
            ch = Chain(self.ambient, DESC, self.stem, self.tail, head)
        else:
            head = tuple(self.raw_point(n) for n in range(P + 1))
            t0 = self.tail.start if not self.tail.prefix else self.tail.prefix[0]
            low = set()
            cur = t0
            for j in range(P - 1, -1, -1):
                if self.levels[j] < cur:
                    low.add(self.levels[j])
                    cur = self.levels[j]
            ch = Chain(self.ambient, ASC, self.stem | low | {t0}, self.tail.shift(1), head)
        return ch.drop_prefix(self.offset)

    def drop_prefix(self, k: int) -> "RawSequence":
        return replace(self, offset=self.offset + max(k, 0))

    def inf(self):
        return self.to_chain().inf()

    def sup(self):
        return self.to_chain().sup()

    def order_type(self) -> TypeExpr:
        return Ord(OMEGA) if self.direction == ASC else Rev(Ord(OMEGA))


@dataclass(frozen=True)
class RawZeta:
    left: RawSequence
    right: RawSequence

    def __post_init__(self):
        if self.left.direction != DESC or self.right.direction != ASC:
            raise FamilyError("raw zeta needs a desc left half and an asc right half")

    @property
    def ambient(self):
        return self.left.ambient

    def to_zeta(self) -> ZetaClass:
        return ZetaClass(self.left.to_chain(), self.right.to_chain())

    def validate(self):
        self.left.validate()
        self.right.validate()
        self.to_zeta().validate()

    def inf(self):
        return self.to_zeta().inf()

    def sup(self):
        return self.to_zeta().sup()

    def order_type(self) -> TypeExpr:
        return zeta()


@dataclass(frozen=True)
class Tower:
    """w-many w*-intervals over natural levels.

    Interval roots ``R(k) = r0 + rs*k``; interval ``k`` holds the points
    ``stem | {R(j) : j < k} | {D_k(n)}`` with ``D_k(n) = d0 + dk*k + ds*n``,
    decreasing in ``n``.
    """

    ambient: Alpha
    stem: frozenset
    r0: int
    rs: int
    d0: int
    dk: int
    ds: int

    def __post_init__(self):
        object.__setattr__(self, "stem", frozenset(ordinal(p) for p in self.stem))

    def R(self, k: int) -> int:
        return self.r0 + self.rs * k

    def D(self, k: int, n: int) -> int:
        return self.d0 + self.dk * k + self.ds * n

    def validate(self):
        if self.rs < 1 or self.ds < 1:
            raise FamilyError("tower steps must be >= 1")
        if not (self.d0 > self.r0 and self.dk >= self.rs):
            raise FamilyError("tower inner levels must exceed their interval root")
        for p in self.stem:
            if not p.is_finite() or int(p) >= self.r0:
                raise FamilyError("tower stem bits must lie below the first root")
            if not self.ambient.contains(p):
                raise AmbientError("stem position outside alpha")

    def point(self, k: int, n: int) -> Point:
        bits = set(self.stem) | {ordinal(self.R(j)) for j in range(k)} | {ordinal(self.D(k, n))}
        return Point(self.ambient, bits)

    def interval(self, k: int) -> Chain:
        stem = self.stem | {ordinal(self.R(j)) for j in range(k)}
        return Chain(self.ambient, DESC, stem, LevelSchedule((), self.D(k, 0), self.ds))

    def drop_intervals(self, k: int) -> "Tower":
        stem = self.stem | {ordinal(self.R(j)) for j in range(k)}
        return replace(self, stem=stem, r0=self.R(k), d0=self.d0 + self.dk * k)

    def drop_prefix(self, k: int) -> "Tower":
        return self.drop_intervals(k)

    def inf(self):
        return GSet(self.stem), False

    def sup(self):
        return GSet(self.stem, LevelSchedule((), self.r0, self.rs)), False

    def order_type(self) -> TypeExpr:
        return Prod(Rev(Ord(OMEGA)), Ord(OMEGA))


Block = Union[Finite, Chain, ZetaClass, RawSequence, RawZeta, Tower]


def compare_blocks(a: Block, b: Block) -> str:
    """``less`` if every element of ``a`` precedes every element of ``b``."""
    if a.ambient != b.ambient:
        raise AmbientError("blocks live in different ambients")
    for x, y, verdict in ((a, b, "less"), (b, a, "greater")):
        hi, hi_att = x.sup()
        lo, lo_att = y.inf()
        c = hi.cmp(lo)
        if c < 0 or (c == 0 and not (hi_att and lo_att)):
            return verdict
    return "incomparable"


def drop_prefix(c, k: int):
    return c.drop_prefix(k)


def block_points(block: Block, k: int = 8) -> list[Point]:
    """A decoded sample: the first ``k`` points from each unbounded side."""
    if isinstance(block, Finite):
        return list(block.points)
    if isinstance(block, (Chain, RawSequence)):
        return block.points(k)
    if isinstance(block, RawZeta):
        block = block.to_zeta()
    if isinstance(block, ZetaClass):
        return block.left.points(k) + block.right.points(k)
    if isinstance(block, Tower):
        return [block.point(i, n) for i in range(k) for n in range(k)]
    raise TypeError(f"unknown block {block!r}")


def as_chain(block):
    """Raw blocks in their chain form; other blocks unchanged."""
    if isinstance(block, RawSequence):
        return block.to_chain()
    if isinstance(block, RawZeta):
        return block.to_zeta()
    return block


@dataclass(frozen=True)
class CondClass:
    """A condensation class: ``kind`` is finite, omega, omegastar, zeta or tower.

    ``block`` is the class as a single block, with adjacent finite points moved
    into chain heads.  A tower stands for its w-many w*-classes at once.
    """

    kind: str
    block: object
    indices: tuple

    @property
    def infinite(self) -> bool:
        return self.kind != "finite"


def cc_enumerate(blocks) -> list[CondClass]:
    blocks = [as_chain(b) for b in blocks]
    out: list[CondClass] = []
    i, n = 0, len(blocks)
    while i < n:
        b = blocks[i]
        if isinstance(b, ZetaClass):
            out.append(CondClass("zeta", b, (i,)))
            i += 1
            continue
        if isinstance(b, Tower):
            out.append(CondClass("tower", b, (i,)))
            i += 1
            continue
        start = i
        left = None
        if isinstance(b, Chain) and b.kind == DESC:
            left = b
            i += 1
        fin: list[Point] = []
        while i < n and isinstance(blocks[i], Finite):
            fin.extend(blocks[i].points)
            i += 1
        right = None
        if i < n and isinstance(blocks[i], Chain) and blocks[i].kind == ASC:
            right = blocks[i]
            i += 1
        if left is None and right is None and not fin:
            raise FamilyError(f"cannot group block {b!r}")
        idx = tuple(range(start, i))
        if left is not None and right is not None:
            out.append(CondClass("zeta", ZetaClass(left, right.with_head(fin + list(right.head))), idx))
        elif left is not None:
            out.append(CondClass("omegastar", left.with_head(list(left.head) + fin[::-1]), idx))
        elif right is not None:
            out.append(CondClass("omega", right.with_head(fin + list(right.head)), idx))
        else:
            out.append(CondClass("finite", Finite(tuple(fin)), idx))
    return out


def _sum_types(types: list) -> TypeExpr:
    return types[0] if len(types) == 1 else Sum(tuple(types))


@dataclass(frozen=True)
class RepFamily:
    ambient: Alpha
    blocks: tuple

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(self.blocks))
        if not self.blocks:
            raise FamilyError("a family needs at least one block")

    def validate(self) -> "RepFamily":
        for b in self.blocks:
            if b.ambient != self.ambient:
                raise AmbientError("block ambient differs from the family's")
            b.validate()
        for a, b in zip(self.blocks, self.blocks[1:]):
            if compare_blocks(a, b) != "less":
                raise FamilyError(f"blocks out of order or overlapping: {type(a).__name__}, {type(b).__name__}")
        return self

    def order_type(self) -> TypeExpr:
        return _sum_types([b.order_type() for b in self.blocks])

    def classes(self) -> list[CondClass]:
        return cc_enumerate(self.blocks)

    def sample(self, k: int = 8) -> list[Point]:
        return [p for b in self.blocks for p in block_points(b, k)]

    def replace_block(self, i: int, new) -> "RepFamily":
        bl = list(self.blocks)
        if isinstance(new, (list, tuple)):
            bl[i:i + 1] = list(new)
        else:
            bl[i] = new
        return RepFamily(self.ambient, tuple(bl))


def order_type(A: RepFamily) -> TypeExpr:
    return A.order_type()
