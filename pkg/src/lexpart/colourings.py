"""Colourings without homogeneous sets, their selectors and colour flips.

Every colouring maps a represented family to 0 or 1 and is undefined (raises
:class:`NotInDomain`) off its domain.  Each ``flip_*`` returns a subfamily of
the same order type with the other colour.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from itertools import combinations
from typing import Callable, Optional, Sequence

from .canonise import (
    SymbolicOrdinalSet, _resplit, canonise_chain, canonise_family,
    is_canonised_family, n_map, n_prime,
)
from .cantorlex import Alpha, Point, Stem, delta, extends, lex_cmp, meet, script_n, sort_points
from .families import (
    Chain, Finite, RepFamily, Tower, ZetaClass, as_chain, cc_enumerate,
)
from .ordinal import ZERO, Ordinal, add, left_subtract, ordinal
from .ordertype import Entry, FiniteSumForm

__all__ = [
    "ColouringError", "NotInDomain", "FlipError", "FLIP_BOUND",
    "colour_C", "flip_C", "colour_zeta", "flip_zeta", "prepare_two_classes",
    "mutual_selectors", "colour_mutual", "flip_mutual", "replace_mutual",
    "prepare_zeta_cc", "zeta_cc_case", "zeta_cc_dispatch", "flip_zeta_cc",
    "DyadicCopy", "dyadic_f", "colour_tausplit", "flip_tausplit",
    "colour_triple", "flip_triple", "extend_total", "lift_selector",
    "unique_zeta_selector", "replace_zeta_selection", "identity_selector",
    "kappa_G", "ORACLES", "const0", "const1", "parity", "xi_cuts",
    "split_by_cuts", "polarised_split", "package_polarised",
    "colour_affordable", "flip_affordable_raw", "affordable_pieces",
    "COLOURINGS",
]

FLIP_BOUND = 8


class ColouringError(ValueError):
    pass


class NotInDomain(ColouringError):
    pass


class FlipError(ColouringError):
    pass


def _N(x: Point, y: Point) -> int:
    return script_n(x.ambient, x, y)


def _rebuild(A: RepFamily, blocks) -> RepFamily:
    return RepFamily(A.ambient, tuple(blocks))


# -- colouring C -------------------------------------------------------------

_CAP = 3


def _count_chain(c: Chain, s: Stem) -> int:
    n = sum(extends(p, s) for p in c.head)
    h, b = s.height, s.bits
    base = frozenset(p for p in c.stem if p < h)
    if not base <= b:
        return n
    rest = b - base
    E = c.levels
    if c.kind == "asc":
        L = c.schedule
        cnt = L.count_below(h)
        m = len(rest)
        if sorted(rest) != L.levels(m) or (cnt is not None and m > cnt):
            return n
        if cnt is not None and m == cnt:
            return n + _CAP
        # exactly the body points with p(k) == m
        hit = m if c.picks is None else c.picks.index_of(m)
        return n + (hit is not None)
    if not rest:
        return n + (_CAP if E.count_below(h) is not None else 0)
    if len(rest) == 1:
        return n + (E.index_of(next(iter(rest))) is not None)
    return n


def _count_tower(t: Tower, s: Stem) -> int:
    h, b = s.height, s.bits
    if not h.is_finite():
        # every tower bit lies below h, so only an exact point can match
        if not t.stem <= b or any(not p.is_finite() for p in b):
            return 0
        rs = sorted(int(p) for p in b - t.stem)
        k = len(rs) - 1
        if k < 0 or rs[:k] != [t.R(j) for j in range(k)]:
            return 0
        d = rs[k] - t.d0 - t.dk * k
        return int(d >= 0 and d % t.ds == 0)
    H = int(h)
    base = frozenset(p for p in t.stem if p < h)
    if not base <= b:
        return 0
    rest = sorted(int(p) for p in b - base)
    kR = 0
    while t.R(kR) < H:
        kR += 1
    total = 0
    for k in range(kR + 1):
        Rs = [t.R(j) for j in range(k)]
        if rest == Rs:
            return _CAP
        if rest[:-1] == Rs and len(rest) == k + 1:
            e = rest[-1]
            ks = [k] if k < kR else range(k, max(k, e) + 1)
            for kk in ks:
                d = e - t.d0 - t.dk * kk
                if d < 0:
                    break
                total += d % t.ds == 0
    return min(total, _CAP)


def _count_extending(block, s: Stem) -> int:
    block = as_chain(block)
    if isinstance(block, Finite):
        return sum(extends(p, s) for p in block.points)
    if isinstance(block, Chain):
        return _count_chain(block, s)
    if isinstance(block, ZetaClass):
        return _count_chain(block.left, s) + _count_chain(block.right, s)
    if isinstance(block, Tower):
        return _count_tower(block, s)
    raise TypeError(f"unknown block {block!r}")


def _candidate_pairs(A: RepFamily):
    """Consecutive pairs of infinite classes that are not deep inside a body."""
    for cc in cc_enumerate(A.blocks):
        b = cc.block
        halves = []
        if cc.kind == "zeta":
            halves = [b.left, b.right]
            yield b.left.element(0), b.right.element(0)
        elif cc.kind in ("omega", "omegastar"):
            halves = [b]
        for c in halves:
            for i in range(len(c.head) + 1):
                yield c.element(i), c.element(i + 1)


def colour_C_witness(A: RepFamily) -> Optional[tuple]:
    for x, y in _candidate_pairs(A):
        s = meet(x, y)
        if sum(min(_count_extending(b, s), _CAP) for b in A.blocks) == 2:
            return (x, y) if lex_cmp(x, y) < 0 else (y, x)
    return None


def colour_C(A: RepFamily) -> int:
    """1 iff some stem is extended by exactly two points of A, both in one infinite class."""
    return int(colour_C_witness(A) is not None)


def flip_C(A: RepFamily) -> RepFamily:
    """Isolate a pair in the interval after the one holding the minimal split."""
    if not A.blocks or not isinstance(A.blocks[-1], Tower):
        raise NotInDomain("flip_C needs a family ending in a w*.w tower")
    if colour_C(A):
        raise NotInDomain("flip_C needs a family of colour 0")
    T: Tower = A.blocks[-1]
    # x1 = T.point(0, 0) carries the minimal split; O is interval 1 and
    # y1 > y0 > y_-1 are its top three points
    head = (T.point(1, 0), T.point(1, 1), T.point(1, 2))
    first = T.interval(0).drop_prefix(1).with_head(head)
    out = _rebuild(A, list(A.blocks[:-1]) + [first, T.drop_intervals(2)])
    if colour_C(out) != 1:
        raise FlipError("isolated pair is extended by another point")
    return out


# -- a single zeta class -----------------------------------------------------

def _single_zeta(A: RepFamily) -> ZetaClass:
    ccs = cc_enumerate(A.blocks)
    if len(ccs) != 1 or ccs[0].kind != "zeta":
        raise NotInDomain("family is not of type zeta")
    if not A.ambient.countable:
        raise NotInDomain("the zeta colouring needs a countable ambient")
    return ccs[0].block


def _zeta_numbers(z: ZetaClass) -> tuple[int, int]:
    z = _resplit(z)
    x = z.left.element(0)
    return _N(z.left.element(1), x), _N(z.right.element(0), z.right.element(1))


def colour_zeta(A: RepFamily) -> int:
    n0, n1 = _zeta_numbers(_single_zeta(A))
    return 0 if n0 >= n1 else 1


def _zeta_drop(z: ZetaClass, side: str, k: int) -> ZetaClass:
    if side == "right":
        return ZetaClass(z.left, z.right.drop_prefix(k))
    return ZetaClass(z.left.drop_prefix(k), z.right)


def flip_zeta(A: RepFamily, target: Optional[int] = None) -> RepFamily:
    z = _single_zeta(A)
    cur = colour_zeta(A)
    if target is None:
        target = 1 - cur
    if target == cur:
        return A
    z = _resplit(z)
    z = ZetaClass(canonise_chain(z.left), canonise_chain(z.right))
    side = "right" if target == 1 else "left"
    for k in range(FLIP_BOUND + 1):
        out = _rebuild(A, [_zeta_drop(z, side, k)])
        if colour_zeta(out) == target:
            return out
    raise FlipError(f"no drop of at most {FLIP_BOUND} points reaches colour {target}")


# -- two w / w* classes --------------------------------------------------------

def _chain_classes(blocks):
    ccs = cc_enumerate(blocks)
    return ccs, [i for i, cc in enumerate(ccs) if cc.kind in ("omega", "omegastar")]


def prepare_two_classes(A: RepFamily) -> RepFamily:
    ccs, idx = _chain_classes(A.blocks)
    if len(idx) < 2:
        raise NotInDomain("need at least two w or w* classes")
    B = canonise_family(A)
    ccs, idx = _chain_classes(B.blocks)
    blocks = [cc.block for cc in ccs]
    dprime = max(blocks[idx[0]].split(0), blocks[idx[1]].split(0))
    for i in idx[2:]:
        c = blocks[i]
        m = 0
        while not c.split(m) > dprime:
            m += 1
        blocks[i] = c.drop_prefix(m)
    out = _rebuild(B, blocks)
    return B if out == B else out


def _distinguished(A: RepFamily):
    ccs, idx = _chain_classes(A.blocks)
    if len(idx) < 2:
        raise NotInDomain("need at least two w or w* classes")
    if any(not ccs[i].block.is_canonised() for i in idx):
        raise NotInDomain("w and w* classes must be canonised")
    ds = sorted(ccs[i].block.split(0) for i in idx)
    if len(ds) > 2 and not ds[1] < ds[2]:
        raise NotInDomain("no level separates exactly two classes")
    two = sorted(sorted(idx, key=lambda i: ccs[i].block.split(0))[:2])
    return ccs, two


def mutual_selectors(A: RepFamily) -> tuple[Chain, Chain]:
    """Each distinguished class minus its first element."""
    ccs, (i, j) = _distinguished(A)
    return ccs[i].block.drop_prefix(1), ccs[j].block.drop_prefix(1)


def replace_mutual(A: RepFamily, B0: Chain, B1: Chain) -> RepFamily:
    """Replace the two selector images by subcopies ``B0`` and ``B1``."""
    ccs, two = _distinguished(A)
    blocks = [cc.block for cc in ccs]
    for i, B in zip(two, (B0, B1)):
        blocks[i] = B.with_head((blocks[i].element(0),) + B.head)
    return _rebuild(A, blocks)


def colour_mutual(A: RepFamily) -> int:
    f0, f1 = mutual_selectors(A)
    return 0 if _N(f0.element(0), f0.element(1)) >= _N(f1.element(0), f1.element(1)) else 1


def flip_mutual(A: RepFamily) -> RepFamily:
    cur = colour_mutual(A)
    f0, f1 = mutual_selectors(A)
    for k in range(1, FLIP_BOUND + 1):
        out = replace_mutual(A, f0.drop_prefix(k), f1) if cur else replace_mutual(A, f0, f1.drop_prefix(k))
        if colour_mutual(out) != cur:
            return out
    raise FlipError(f"no drop of at most {FLIP_BOUND} points flips the colour")


# -- families with zeta classes -------------------------------------------------

def _zeta_stats(A: RepFamily):
    ccs = cc_enumerate(A.blocks)
    zs = [i for i, cc in enumerate(ccs) if cc.kind == "zeta"]
    if not zs:
        raise NotInDomain("family has no zeta class")
    return ccs, zs


def zeta_cc_case(A: RepFamily):
    """``('a', i)`` or ``('b', i, j)`` with class indices; raises off the domain."""
    if not is_canonised_family(A):
        raise NotInDomain("zeta-cc colouring needs a canonised family")
    ccs, zs = _zeta_stats(A)
    roots = {i: ccs[i].block.root for i in zs}
    low = min(roots.values())
    mins = [i for i in zs if roots[i] == low]
    if len(mins) == 1:
        return ("a", mins[0])
    d0 = sorted(ccs[i].block.left.split(0) for i in mins)
    if len(d0) > 2 and not d0[1] < d0[2]:
        raise NotInDomain("neither a unique minimal zeta class nor a separated pair")
    two = sorted(sorted(mins, key=lambda i: ccs[i].block.left.split(0))[:2])
    return ("b", two[0], two[1])


def prepare_zeta_cc(A: RepFamily) -> RepFamily:
    B = canonise_family(A)
    ccs, zs = _zeta_stats(B)
    roots = {i: ccs[i].block.root for i in zs}
    low = min(roots.values())
    mins = [i for i in zs if roots[i] == low]
    if len(mins) == 1:
        return B
    vals = sorted(ccs[i].block.left.split(0) for i in mins)
    dprime = vals[0] if vals.count(vals[0]) > 1 else vals[1]
    chosen = [i for i in mins if ccs[i].block.left.split(0) <= dprime][:2]
    blocks = [cc.block for cc in ccs]
    for i in mins:
        if i in chosen:
            continue
        z = blocks[i]
        n = 0
        while not z.left.split(n) > dprime:
            n += 1
        blocks[i] = ZetaClass(z.left.drop_prefix(n), z.right)
    out = _rebuild(B, blocks)
    return B if out == B else out


def zeta_cc_dispatch(A: RepFamily) -> int:
    case = zeta_cc_case(A)
    ccs = cc_enumerate(A.blocks)
    if case[0] == "a":
        return colour_zeta(RepFamily(A.ambient, (ccs[case[1]].block,)))
    r0, r1 = ccs[case[1]].block.right, ccs[case[2]].block.right
    return 0 if _N(r0.element(0), r0.element(1)) >= _N(r1.element(0), r1.element(1)) else 1


def flip_zeta_cc(A: RepFamily) -> RepFamily:
    case = zeta_cc_case(A)
    cur = zeta_cc_dispatch(A)
    ccs = cc_enumerate(A.blocks)
    blocks = [cc.block for cc in ccs]
    if case[0] == "a":
        i = case[1]
        sub = flip_zeta(RepFamily(A.ambient, (blocks[i],)))
        blocks[i] = sub.blocks[0]
        return _rebuild(A, blocks)
    i = case[1] if cur else case[2]
    z = blocks[i]
    for k in range(1, FLIP_BOUND + 1):
        blocks[i] = ZetaClass(z.left, z.right.drop_prefix(k))
        out = _rebuild(A, blocks)
        if zeta_cc_dispatch(out) != cur:
            return out
    raise FlipError(f"no drop of at most {FLIP_BOUND} points flips the colour")


# -- dyadic copies of eta --------------------------------------------------------

@dataclass(frozen=True)
class DyadicCopy:
    """A copy of eta indexed by finite 0/1 strings.

    The base tree sends the empty string to the root stem and ``t+i`` to
    ``g(t) + <i> + 0^pad`` with ``pad = pad0 | pad1`` (by the last bit)
    ``+ pad_step * len(t)``.  ``grafts`` re-index the tree: each entry
    ``(root, left, right)`` sends ``()`` to ``root``, ``0u`` to ``left+u``
    and ``1u`` to ``right+u``.  Decoded points are ``g(t) + <1> + 0...``.
    """

    ambient: Alpha
    root_height: int = 0
    root_bits: frozenset = frozenset()
    pad0: int = 0
    pad1: int = 0
    pad_step: int = 0
    grafts: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "root_bits", frozenset(int(b) for b in self.root_bits))
        if any(b >= self.root_height for b in self.root_bits):
            raise ColouringError("root bits must lie below the root height")
        if min(self.pad0, self.pad1, self.pad_step) < 0:
            raise ColouringError("padding lengths must be >= 0")

    def node(self, t: str) -> str:
        for root, left, right in reversed(self.grafts):
            if not t:
                t = root
            else:
                t = (left if t[0] == "0" else right) + t[1:]
        return t

    def _base(self, t: str) -> Stem:
        h, bits = self.root_height, set(self.root_bits)
        for n, c in enumerate(t):
            if c == "1":
                bits.add(h)
            h += 1 + (self.pad0 if c == "0" else self.pad1) + self.pad_step * n
        return Stem(self.ambient, h, frozenset(bits))

    def g(self, t: str) -> Stem:
        return self._base(self.node(t))

    def point(self, t: str) -> Point:
        s = self.g(t)
        return Point(self.ambient, s.bits | {s.height})

    def graft(self, left: str, right: str) -> "DyadicCopy":
        """Subcopy with ``f(<0>) = g(left)`` and ``f(<1>) = g(right)``."""
        i = 0
        while i < min(len(left), len(right)) and left[i] == right[i]:
            i += 1
        if i == len(left) or i == len(right) or left[i] != "0":
            raise ColouringError("graft nodes must split with left before right")
        return replace(self, grafts=self.grafts + ((left[:i], left, right),))


def dyadic_f(A: DyadicCopy, t: str) -> Stem:
    """The minimal-height eta-splitting node below ``t``; equals ``g(t)`` for dyadic copies."""
    if any(c not in "01" for c in t):
        raise ColouringError("dyadic nodes are 0/1 strings")
    return A.g(t)


def colour_tausplit(A: DyadicCopy) -> int:
    return 0 if dyadic_f(A, "0").height >= dyadic_f(A, "1").height else 1


def flip_tausplit(A: DyadicCopy) -> DyadicCopy:
    h0, h1 = dyadic_f(A, "0").height, dyadic_f(A, "1").height
    if h0 >= h1:
        # move the right split deeper until it is strictly higher
        m = 2
        while not dyadic_f(A, "1" * m).height > h0:
            m += 1
        B = A.graft("0", "1" * m)
    else:
        m = 2
        while not dyadic_f(A, "0" * m).height >= h1:
            m += 1
        B = A.graft("0" * m, "1")
    if colour_tausplit(B) == colour_tausplit(A):
        raise FlipError("graft did not change the colour")
    return B


# -- triples ----------------------------------------------------------------------

def colour_triple(x0: Point, x1: Point, x2: Point) -> int:
    if not (lex_cmp(x0, x1) < 0 and lex_cmp(x1, x2) < 0):
        raise ColouringError("colour_triple needs x0 < x1 < x2")
    return 0 if delta(x0, x1) > delta(x1, x2) else 1


def flip_triple(points: Sequence[Point], triple: Sequence[Point]) -> tuple:
    """Another increasing triple from ``points`` with the other colour."""
    cur = colour_triple(*triple)
    for t in combinations(sort_points(points), 3):
        if colour_triple(*t) != cur:
            return t
    raise FlipError("all triples share one colour")


# -- totalisation and selectors -----------------------------------------------------

def extend_total(partial: Callable, default: int = 0) -> Callable:
    def total(A):
        try:
            return partial(A)
        except NotInDomain:
            return default
    return total


def lift_selector(sel: Callable, col: Callable) -> Callable:
    return lambda A: col(sel(A))


def identity_selector(A: RepFamily) -> RepFamily:
    return A


def unique_zeta_selector(A: RepFamily) -> RepFamily:
    ccs = cc_enumerate(A.blocks)
    zs = [cc for cc in ccs if cc.kind == "zeta"]
    if len(zs) != 1:
        raise NotInDomain("need exactly one zeta class")
    return RepFamily(A.ambient, (zs[0].block,))


def replace_zeta_selection(A: RepFamily, B: RepFamily) -> RepFamily:
    ccs = cc_enumerate(A.blocks)
    blocks = [B.blocks[0] if cc.kind == "zeta" else cc.block for cc in ccs]
    return _rebuild(A, blocks)


# -- symbolic kappa colourings ---------------------------------------------------------

def const0(S: SymbolicOrdinalSet) -> int:
    return 0


def const1(S: SymbolicOrdinalSet) -> int:
    return 1


def parity(S: SymbolicOrdinalSet) -> int:
    """Parity of the finite coefficient of the least element."""
    return S.min().finite_part() % 2


ORACLES = {"const0": const0, "const1": const1, "parity": parity}


def kappa_G(F: Callable, C: Chain) -> int:
    if not isinstance(C, Chain) or C.kind != "asc":
        raise NotInDomain("kappa_G needs an asc class")
    return F(n_map(C))


def xi_cuts(form: FiniteSumForm) -> list[Ordinal]:
    """Partial sums of the entry values, the last one excluded."""
    cuts, total = [], ZERO
    for e in form.entries[:-1]:
        total = add(total, e.value)
        cuts.append(total)
    return cuts


def split_by_cuts(S: SymbolicOrdinalSet, cuts) -> list[SymbolicOrdinalSet]:
    cuts = [ordinal(c) for c in cuts]
    if any(not a < b for a, b in zip(cuts, cuts[1:])):
        raise ColouringError("cut points must increase")
    pieces, rest, done = [], S, ZERO
    for c in cuts:
        lo, rest = rest.split_at(left_subtract(done, c))
        pieces.append(lo)
        done = c
    pieces.append(rest)
    return pieces


def polarised_split(G: Callable, cuts) -> Callable:
    """Package a colouring of tuples of sets as a colouring of single sets."""
    return lambda S: G(*split_by_cuts(S, cuts))


def package_polarised(F: Callable) -> Callable:
    """A colouring of tuples of pieces from a colouring of their union."""
    def G(*pieces):
        S = pieces[0]
        for p in pieces[1:]:
            S = S.concat(p)
        return F(S)
    return G


# -- finite sums of ordinals and reverse ordinals --------------------------------------

def affordable_pieces(A: RepFamily) -> list[Chain]:
    out = []
    for cc in cc_enumerate(A.blocks):
        if cc.kind == "tower":
            raise NotInDomain("w*.w towers are outside the affordable domain")
        if cc.kind == "zeta":
            z = _resplit(cc.block)
            out += [z.left, z.right]
        elif cc.kind in ("omega", "omegastar"):
            out.append(cc.block)
    return out


def _replace_piece(A: RepFamily, k: int, new: Chain) -> RepFamily:
    blocks, n = [], 0
    for cc in cc_enumerate(A.blocks):
        if cc.kind == "zeta":
            z = _resplit(cc.block)
            halves = [new if n == k else z.left, new if n + 1 == k else z.right]
            blocks.append(ZetaClass(*halves))
            n += 2
        elif cc.kind in ("omega", "omegastar"):
            blocks.append(new if n == k else cc.block)
            n += 1
        else:
            blocks.append(cc.block)
    return _rebuild(A, blocks)


def _first_rough(pieces) -> Optional[int]:
    for i, c in enumerate(pieces):
        if not c.is_canonised():
            return i
    return None


def colour_affordable(F: Callable, A: RepFamily) -> int:
    pieces = affordable_pieces(A)
    if not pieces:
        raise NotInDomain("family has no infinite piece")
    i = _first_rough(pieces)
    if i is not None:
        c = pieces[i]
        return 0 if c.split(0) > c.split(1) else 1
    return F(n_prime(A))


def flip_affordable_raw(F: Callable, A: RepFamily) -> RepFamily:
    """Thin the first rough piece's head, else canonise that piece."""
    pieces = affordable_pieces(A)
    i = _first_rough(pieces)
    if i is None:
        raise NotInDomain("every piece is already totally canonised")
    cur = colour_affordable(F, A)
    c = pieces[i]
    H = len(c.head)
    for size in range(1, min(H, FLIP_BOUND) + 1):
        for drop in combinations(range(min(H, FLIP_BOUND)), size):
            new = c.with_head(tuple(p for j, p in enumerate(c.head) if j not in drop))
            if new.is_canonised():
                continue
            out = _replace_piece(A, i, new)
            if colour_affordable(F, out) != cur:
                return out
    canon = canonise_chain(c)
    for k in range(FLIP_BOUND + 1):
        out = _replace_piece(A, i, canon.drop_prefix(k))
        if colour_affordable(F, out) != cur:
            return out
    raise FlipError("neither thinning nor canonising changes the colour")


COLOURINGS = {
    "C": colour_C,
    "zeta": colour_zeta,
    "mutual": colour_mutual,
    "zeta-cc": zeta_cc_dispatch,
    "tausplit": colour_tausplit,
    "triple": None,
    "affordable": colour_affordable,
}
