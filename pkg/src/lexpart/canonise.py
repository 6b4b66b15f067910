"""Canonisation, the correspondence N and the offset map N'."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .families import (
    Chain, CondClass, FamilyError, Finite, LevelSchedule, RawSequence, RawZeta,
    RepFamily, Tower, ZetaClass, as_chain, cc_enumerate,
)
from .ordinal import OMEGA, ZERO, Ordinal, add, left_subtract, ordinal

__all__ = [
    "SymbolicOrdinalSet", "canonise_chain", "canonise_raw", "canonise_zeta",
    "canonise_family", "is_canonised_family", "n_map", "n_realize",
    "selection_for", "indecomposable_pieces", "Piece", "n_prime", "sigma",
    "realize_subselection", "CanoniseError",
]


class CanoniseError(FamilyError):
    pass


# -- symbolic sets of ordinals -----------------------------------------------

@dataclass(frozen=True)
class SymbolicOrdinalSet:
    """Order-separated components: tuples of ordinals or level schedules.

    Construct with :meth:`of`, which normalises so that equal sets have
    equal descriptions.
    """

    components: tuple

    @classmethod
    def of(cls, *parts) -> "SymbolicOrdinalSet":
        """Build from finite iterables, schedules and ``(offset, schedule)`` pairs."""
        items = []
        for p in parts:
            if isinstance(p, LevelSchedule):
                items.append(p)
            elif isinstance(p, tuple) and len(p) == 2 and isinstance(p[1], LevelSchedule):
                off, s = ordinal(p[0]), p[1]
                items.append(LevelSchedule(tuple(add(off, x) for x in s.prefix), add(off, s.start), s.step))
            else:
                items.append(tuple(sorted(ordinal(x) for x in p)))
        return cls._normal(items)

    @classmethod
    def _normal(cls, items) -> "SymbolicOrdinalSet":
        items = [x for x in items if not (isinstance(x, tuple) and not x)]
        out, pending = [], []
        prev_sup = None
        for x in items:
            lo = x[0] if isinstance(x, tuple) else x.level(0)
            if prev_sup is not None and lo < prev_sup:
                raise CanoniseError("symbolic set components overlap")
            if isinstance(x, tuple):
                pending.extend(x)
                prev_sup = add(x[-1], 1)
                continue
            if pending:
                x = LevelSchedule(tuple(pending) + x.prefix, x.start, x.step)
                pending = []
            x = x.normal()
            out.append(x)
            prev_sup = x.sup
        if pending:
            out.append(tuple(pending))
        return cls(tuple(out))

    def __str__(self):
        parts = []
        for c in self.components:
            if isinstance(c, tuple):
                parts.append("{" + ", ".join(str(x) for x in c) + "}")
            else:
                parts.append(str(c))
        return "[" + ", ".join(parts) + "]"

    def schedules(self) -> list[LevelSchedule]:
        return [c for c in self.components if isinstance(c, LevelSchedule)]

    def min(self) -> Ordinal:
        c = self.components[0]
        return c[0] if isinstance(c, tuple) else c.level(0)

    def order_type(self) -> Ordinal:
        t = ZERO
        for c in self.components:
            t = add(t, len(c) if isinstance(c, tuple) else OMEGA)
        return t

    def contains(self, o) -> bool:
        o = ordinal(o)
        for c in self.components:
            if isinstance(c, tuple):
                if o in c:
                    return True
            elif c.index_of(o) is not None:
                return True
        return False

    def shift(self, off) -> "SymbolicOrdinalSet":
        off = ordinal(off)
        return SymbolicOrdinalSet.of(*[(off, c) if isinstance(c, LevelSchedule) else
                                       tuple(add(off, x) for x in c) for c in self.components])

    def split_at(self, cut) -> tuple["SymbolicOrdinalSet", "SymbolicOrdinalSet"]:
        """Elements at positions ``< cut`` and ``>= cut`` in increasing enumeration."""
        cut = ordinal(cut)
        pos = ZERO
        for i, c in enumerate(self.components):
            size = ordinal(len(c)) if isinstance(c, tuple) else OMEGA
            end = add(pos, size)
            if cut < end or (cut == end and i == len(self.components) - 1):
                if cut == end:
                    return self, SymbolicOrdinalSet(())
                m = left_subtract(pos, cut)
                if not m.is_finite():
                    raise CanoniseError(f"cut {cut} does not fall at a supported position")
                m = int(m)
                if isinstance(c, tuple):
                    lo_c, hi_c = c[:m], c[m:]
                else:
                    lo_c, hi_c = tuple(c.levels(m)), c.shift(m)
                lo = SymbolicOrdinalSet._normal(list(self.components[:i]) + [lo_c])
                hi = SymbolicOrdinalSet._normal([hi_c] + list(self.components[i + 1:]))
                return lo, hi
            pos = end
        raise CanoniseError(f"cut {cut} exceeds the order type {pos}")

    def concat(self, other: "SymbolicOrdinalSet") -> "SymbolicOrdinalSet":
        return SymbolicOrdinalSet._normal(list(self.components) + list(other.components))


# -- canonisation -------------------------------------------------------------

def canonise_chain(c: Chain) -> Chain:
    """Greedy suffix-argmin selection; the increasing body is always kept whole."""
    h = len(c.head)
    s = [c.split(i) for i in range(h + 1)]
    keep, i = [], 0
    while i < h:
        j = min(range(i, h + 1), key=lambda t: s[t])
        if j == h:
            break
        keep.append(j)
        i = j + 1
    if len(keep) == h:
        return c
    return c.with_head(tuple(c.head[j] for j in keep))


def canonise_raw(r: RawSequence) -> Chain:
    r.validate()
    return canonise_chain(r.to_chain())


def _resplit(z: ZetaClass) -> ZetaClass:
    """Move the minimal consecutive split to the junction of the two halves."""
    L, R = z.left, z.right
    cands = [(L.split(i), "L", i) for i in range(len(L.head) + 1)]
    cands += [(R.split(i), "R", i) for i in range(len(R.head) + 1)]
    cands.append((z.root, "C", 0))
    _, side, i = min(cands, key=lambda t: t[0])
    if side == "L":
        moved = [L.element(j) for j in range(i, -1, -1)]
        return ZetaClass(L.drop_prefix(i + 1), R.with_head(moved + list(R.head)))
    if side == "R":
        moved = [R.element(j) for j in range(i, -1, -1)]
        return ZetaClass(L.with_head(moved + list(L.head)), R.drop_prefix(i + 1))
    return z


def canonise_zeta(z: Union[ZetaClass, RawZeta]) -> ZetaClass:
    if isinstance(z, RawZeta):
        z.validate()
        z = z.to_zeta()
    z = _resplit(z)
    out = ZetaClass(canonise_chain(z.left), canonise_chain(z.right))
    return z if out == z else out


def _canonise_class(cc: CondClass):
    b = cc.block
    if isinstance(b, Chain):
        return canonise_chain(b)
    if isinstance(b, ZetaClass):
        return canonise_zeta(b)
    return b


def canonise_family(A: RepFamily) -> RepFamily:
    """Replace every infinite condensation class by its canonised subcopy."""
    for b in A.blocks:
        if isinstance(b, (RawSequence, RawZeta)):
            b.validate()
    blocks = [_canonise_class(cc) for cc in cc_enumerate(A.blocks)]
    out = RepFamily(A.ambient, tuple(blocks))
    return A if out == A else out


def is_canonised_family(A: RepFamily) -> bool:
    for cc in cc_enumerate(A.blocks):
        if cc.kind in ("omega", "omegastar", "zeta") and not cc.block.is_canonised():
            return False
    return True


# -- the correspondence N -----------------------------------------------------

def n_map(c: Chain) -> SymbolicOrdinalSet:
    """``N(X)``: the set of consecutive splits of a canonised chain."""
    c = as_chain(c)
    if isinstance(c, ZetaClass):
        raise CanoniseError("N is defined on w and w* copies, not on zeta classes")
    if not isinstance(c, Chain):
        raise CanoniseError(f"N needs a chain, got {type(c).__name__}")
    if not c.is_canonised():
        raise CanoniseError("N needs a totally canonised chain")
    return SymbolicOrdinalSet.of(tuple(c.head_splits()), c.levels)


def selection_for(c: Chain, Y: SymbolicOrdinalSet):
    """Head indices and body index selection realising ``Y`` inside ``N(c)``."""
    if len(Y.components) != 1 or not isinstance(Y.components[0], LevelSchedule):
        raise CanoniseError("a realisable selection is one infinite schedule component")
    S = Y.components[0]
    hs = c.head_splits()
    E = c.levels
    head_idx, body_pre = [], []
    for v in S.prefix:
        if v in hs:
            if body_pre:
                raise CanoniseError("selection is not increasing")
            head_idx.append(hs.index(v))
            continue
        j = E.index_of(v)
        if j is None:
            raise CanoniseError(f"{v} is not a split level of the chain")
        body_pre.append(j)
    q0 = E.index_of(S.start)
    q1 = E.index_of(add(S.start, S.step))
    if q0 is None or q1 is None or q1 <= q0:
        raise CanoniseError("selection tail does not lie inside N(c)")
    q = LevelSchedule(tuple(body_pre), q0, q1 - q0)
    if not E.compose(q).same_image(S.shift(len(head_idx))):
        raise CanoniseError("selection is not an affine sub-schedule of N(c)")
    return head_idx, q


def n_realize(c: Chain, Y: SymbolicOrdinalSet) -> Chain:
    """The subcopy ``X_Y = {x : delta(x, succ x) in Y}``."""
    head_idx, q = selection_for(c, Y)
    H = len(c.head)
    plain = not q.prefix and q.step == 1
    if plain and head_idx and head_idx == list(range(head_idx[0], H)) and q.start == 0:
        out = c.drop_prefix(head_idx[0])
    elif plain and not head_idx:
        out = c.drop_prefix(H + int(q.start))
    else:
        out = c.select(q).with_head(tuple(c.head[i] for i in head_idx))
    if n_map(out) != Y:
        raise CanoniseError("realised subcopy does not map onto the selection")
    return out


# -- indecomposable pieces and N' ---------------------------------------------

@dataclass(frozen=True)
class Piece:
    chain: Chain
    gamma: Ordinal
    position: int


def indecomposable_pieces(A: RepFamily) -> list[Piece]:
    out = []
    for cc in cc_enumerate(A.blocks):
        if cc.kind == "tower":
            raise CanoniseError("w*.w towers are not finite sums of ordinals and reverse ordinals")
        if cc.kind == "zeta":
            z = _resplit(cc.block)
            out.append(Piece(z.left, OMEGA, len(out)))
            out.append(Piece(z.right, OMEGA, len(out)))
        elif cc.kind in ("omega", "omegastar"):
            out.append(Piece(cc.block, OMEGA, len(out)))
    if not out:
        raise CanoniseError("family has no infinite pieces")
    return out


def sigma(c: Chain) -> Ordinal:
    """Supremum of the consecutive splits."""
    return c.levels.sup


def n_prime(A: RepFamily) -> SymbolicOrdinalSet:
    pieces = indecomposable_pieces(A)
    for p in pieces:
        if not p.chain.is_canonised():
            raise CanoniseError("N' needs every piece totally canonised")
    gammas = sorted({p.gamma for p in pieces}, reverse=True)
    order = sorted(pieces, key=lambda p: (gammas.index(p.gamma), p.position))
    parts, off = [], ZERO
    for p in order:
        parts.append(n_map(p.chain).shift(off))
        off = add(off, sigma(p.chain))
    out = parts[0]
    for s in parts[1:]:
        out = out.concat(s)
    return out


def realize_subselection(A: RepFamily, picks: list) -> RepFamily:
    """Apply a body index selection to every piece (in piece order); heads are dropped."""
    pieces = indecomposable_pieces(A)
    if len(picks) != len(pieces):
        raise CanoniseError("need one selection per piece")
    new = [p.chain.select(q) for p, q in zip(pieces, picks)]
    blocks, k = [], 0
    for cc in cc_enumerate(A.blocks):
        if cc.kind == "zeta":
            blocks.append(ZetaClass(new[k], new[k + 1]))
            k += 2
        elif cc.kind in ("omega", "omegastar"):
            blocks.append(new[k])
            k += 1
        else:
            blocks.append(cc.block)
    return RepFamily(A.ambient, tuple(blocks))
