"""Text format for families.

One item per line; ``#`` starts a comment.  An optional first line
``alpha EXPR`` (or ``alpha kappa``) sets the ambient, default ``w``::

    alpha w
    asc(stem={0}, sched=sched(prefix=[], start=1, step=1), extras=[point{0, 1}], picks=sched(...))
    desc(stem={...}, sched=sched(...), extras=[...])
    zeta(r=0, left=desc(...), right=asc(...))
    raw(dir=asc, stem={}, levels=[5, 2, 7], tail=sched(...), window=2, offset=0)
    rawzeta(left=raw(...), right=raw(...))
    tower(stem={}, r0=0, rs=1, d0=1, dk=1, ds=1)
    finite[point{0}, point{w+1, 3}]
    dyadic(root_height=0, root_bits={}, pad0=1, pad1=1, pad_step=0, grafts=[[, 0, 11]])

``extras`` are the explicit points at the bounded end of a chain, listed from
that end.  ``picks`` and ``extras`` are optional; ``r`` is checked when given.
A file holding a ``dyadic`` line describes a :class:`DyadicCopy` instead.
"""

from __future__ import annotations

from typing import Union

from .cantorlex import KAPPA, Alpha, Point
from .colourings import DyadicCopy
from .families import (
    Chain, Finite, LevelSchedule, RawSequence, RawZeta, RepFamily, Tower, ZetaClass,
)
from .ordinal import OrdinalSyntaxError, parse_ordinal

__all__ = [
    "FamilySyntaxError", "parse_family", "format_family", "load_family",
    "save_family", "format_block",
]


class FamilySyntaxError(ValueError):
    pass


class _Call:
    def __init__(self, name, kwargs):
        self.name, self.kwargs = name, kwargs


class _Reader:
    def __init__(self, text: str):
        self.s, self.i = text, 0

    def ws(self):
        while self.i < len(self.s) and self.s[self.i].isspace():
            self.i += 1

    def peek(self, tok: str) -> bool:
        self.ws()
        return self.s.startswith(tok, self.i)

    def eat(self, tok: str):
        if not self.peek(tok):
            raise FamilySyntaxError(f"expected {tok!r} at column {self.i + 1}")
        self.i += len(tok)

    def ident(self) -> str:
        self.ws()
        j = self.i
        while j < len(self.s) and (self.s[j].isalnum() or self.s[j] == "_"):
            j += 1
        return self.s[self.i:j]

    def scalar(self) -> str:
        self.ws()
        depth, j = 0, self.i
        while j < len(self.s):
            c = self.s[j]
            if c == "(":
                depth += 1
            elif c == ")":
                if depth == 0:
                    break
                depth -= 1
            elif c in ",]}" and depth == 0:
                break
            j += 1
        out = self.s[self.i:j].strip()
        self.i = j
        return out

    def items(self, close: str) -> list:
        out = []
        if self.peek(close):
            self.eat(close)
            return out
        while True:
            out.append(self.value())
            if self.peek(","):
                self.eat(",")
                continue
            self.eat(close)
            return out

    def value(self):
        self.ws()
        if self.peek("point{"):
            self.eat("point{")
            return ("point", self.items("}"))
        if self.peek("finite["):
            self.eat("finite[")
            return ("finite", self.items("]"))
        if self.peek("{"):
            self.eat("{")
            return ("set", self.items("}"))
        if self.peek("["):
            self.eat("[")
            return ("list", self.items("]"))
        name = self.ident()
        if name and self.s.startswith("(", self.i + len(name)):
            self.i += len(name)
            self.eat("(")
            kwargs = {}
            if not self.peek(")"):
                while True:
                    key = self.ident()
                    if not key:
                        raise FamilySyntaxError(f"expected a keyword at column {self.i + 1}")
                    self.i += len(key)
                    self.eat("=")
                    kwargs[key] = self.value()
                    if self.peek(","):
                        self.eat(",")
                        continue
                    break
            self.eat(")")
            return _Call(name, kwargs)
        return self.scalar()


def _ord(v):
    if not isinstance(v, str) or not v:
        raise FamilySyntaxError(f"expected an ordinal, got {v!r}")
    try:
        return parse_ordinal(v)
    except OrdinalSyntaxError as e:
        raise FamilySyntaxError(str(e)) from None


def _int(v) -> int:
    o = _ord(v)
    if not o.is_finite():
        raise FamilySyntaxError(f"expected a natural number, got {v}")
    return int(o)


def _kind(v, tag):
    if not (isinstance(v, tuple) and v[0] == tag):
        raise FamilySyntaxError(f"expected {tag}, got {v!r}")
    return v[1]


class _Builder:
    def __init__(self, alpha: Alpha):
        self.alpha = alpha

    def point(self, v) -> Point:
        return Point(self.alpha, frozenset(_ord(x) for x in _kind(v, "point")))

    def ordset(self, v) -> frozenset:
        return frozenset(_ord(x) for x in _kind(v, "set"))

    def sched(self, v) -> LevelSchedule:
        if not (isinstance(v, _Call) and v.name == "sched"):
            raise FamilySyntaxError("expected sched(...)")
        k = self._keys(v, {"prefix", "start", "step"}, set())
        pre = tuple(_ord(x) for x in _kind(k.get("prefix", ("list", [])), "list"))
        return LevelSchedule(pre, _ord(k.get("start", "0")), _ord(k.get("step", "1")))

    def _keys(self, call: _Call, allowed: set, required: set) -> dict:
        extra = set(call.kwargs) - allowed
        if extra:
            raise FamilySyntaxError(f"{call.name}: unknown keys {sorted(extra)}")
        missing = required - set(call.kwargs)
        if missing:
            raise FamilySyntaxError(f"{call.name}: missing keys {sorted(missing)}")
        return call.kwargs

    def chain(self, v) -> Chain:
        if not (isinstance(v, _Call) and v.name in ("asc", "desc")):
            raise FamilySyntaxError("expected asc(...) or desc(...)")
        k = self._keys(v, {"stem", "sched", "extras", "picks"}, {"sched"})
        head = tuple(self.point(p) for p in _kind(k.get("extras", ("list", [])), "list"))
        picks = self.sched(k["picks"]) if "picks" in k else None
        return Chain(self.alpha, v.name, self.ordset(k.get("stem", ("set", []))),
                     self.sched(k["sched"]), head, picks)

    def raw(self, v) -> RawSequence:
        if not (isinstance(v, _Call) and v.name == "raw"):
            raise FamilySyntaxError("expected raw(...)")
        k = self._keys(v, {"dir", "stem", "levels", "tail", "window", "offset"}, {"dir", "levels", "tail"})
        return RawSequence(self.alpha, k["dir"], self.ordset(k.get("stem", ("set", []))),
                           tuple(_ord(x) for x in _kind(k["levels"], "list")),
                           self.sched(k["tail"]), _int(k.get("window", "1")), _int(k.get("offset", "0")))

    def block(self, v):
        if isinstance(v, tuple) and v[0] == "finite":
            return Finite(tuple(self.point(p) for p in v[1]))
        if not isinstance(v, _Call):
            raise FamilySyntaxError(f"expected a block, got {v!r}")
        if v.name in ("asc", "desc"):
            return self.chain(v)
        if v.name == "zeta":
            k = self._keys(v, {"r", "left", "right"}, {"left", "right"})
            z = ZetaClass(self.chain(k["left"]), self.chain(k["right"]))
            if "r" in k and _ord(k["r"]) != z.root:
                raise FamilySyntaxError(f"zeta root is {z.root}, not {k['r']}")
            return z
        if v.name == "raw":
            return self.raw(v)
        if v.name == "rawzeta":
            k = self._keys(v, {"left", "right"}, {"left", "right"})
            return RawZeta(self.raw(k["left"]), self.raw(k["right"]))
        if v.name == "tower":
            keys = ("r0", "rs", "d0", "dk", "ds")
            k = self._keys(v, {"stem", *keys}, set(keys))
            return Tower(self.alpha, self.ordset(k.get("stem", ("set", []))), *(_int(k[x]) for x in keys))
        raise FamilySyntaxError(f"unknown block {v.name!r}")

    def dyadic(self, v) -> DyadicCopy:
        keys = ("root_height", "pad0", "pad1", "pad_step")
        k = self._keys(v, {"root_bits", "grafts", *keys}, set())
        grafts = []
        for g in _kind(k.get("grafts", ("list", [])), "list"):
            parts = _kind(g, "list")
            if len(parts) != 3 or any(not isinstance(p, str) or set(p) - set("01") for p in parts):
                raise FamilySyntaxError("a graft is [root, left, right] of 0/1 strings")
            grafts.append(tuple(parts))
        return DyadicCopy(self.alpha, *(_int(k.get(x, "0")) for x in keys[:1]),
                          frozenset(_int(x) for x in _kind(k.get("root_bits", ("set", [])), "set")),
                          *(_int(k.get(x, "0")) for x in keys[1:]), grafts=tuple(grafts))


def _parse_alpha(text: str) -> Alpha:
    text = text.strip()
    if text == "kappa":
        return KAPPA
    return Alpha(_ord(text))


def parse_family(text: str) -> Union[RepFamily, DyadicCopy]:
    lines = []
    for n, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((n, line))
    alpha = Alpha()
    if lines and lines[0][1].startswith("alpha "):
        try:
            alpha = _parse_alpha(lines[0][1][6:])
        except (FamilySyntaxError, ValueError) as e:
            raise FamilySyntaxError(f"line {lines[0][0]}: {e}") from None
        lines = lines[1:]
    b = _Builder(alpha)
    blocks = []
    for n, line in lines:
        try:
            r = _Reader(line)
            v = r.value()
            r.ws()
            if r.i != len(line):
                raise FamilySyntaxError(f"trailing text at column {r.i + 1}")
            if isinstance(v, _Call) and v.name == "dyadic":
                if len(lines) != 1:
                    raise FamilySyntaxError("a dyadic copy must be the only item")
                return b.dyadic(v)
            blocks.append(b.block(v))
        except FamilySyntaxError as e:
            raise FamilySyntaxError(f"line {n}: {e}") from None
    if not blocks:
        raise FamilySyntaxError("no blocks")
    return RepFamily(alpha, tuple(blocks))


# -- printing --------------------------------------------------------------------

def _set(s) -> str:
    return "{" + ", ".join(str(x) for x in sorted(s)) + "}"


def _list(xs) -> str:
    return "[" + ", ".join(xs) + "]"


def _chain(c: Chain) -> str:
    parts = [f"stem={_set(c.stem)}", f"sched={c.schedule}"]
    if c.head:
        parts.append("extras=" + _list(str(p) for p in c.head))
    if c.picks is not None:
        parts.append(f"picks={c.picks}")
    return f"{c.kind}(" + ", ".join(parts) + ")"


def _raw(r: RawSequence) -> str:
    return (f"raw(dir={r.direction}, stem={_set(r.stem)}, levels={_list(str(d) for d in r.levels)}, "
            f"tail={r.tail}, window={r.window}, offset={r.offset})")


def format_block(b) -> str:
    if isinstance(b, Finite):
        return "finite" + _list(str(p) for p in b.points)
    if isinstance(b, Chain):
        return _chain(b)
    if isinstance(b, ZetaClass):
        return f"zeta(r={b.root}, left={_chain(b.left)}, right={_chain(b.right)})"
    if isinstance(b, RawSequence):
        return _raw(b)
    if isinstance(b, RawZeta):
        return f"rawzeta(left={_raw(b.left)}, right={_raw(b.right)})"
    if isinstance(b, Tower):
        return f"tower(stem={_set(b.stem)}, r0={b.r0}, rs={b.rs}, d0={b.d0}, dk={b.dk}, ds={b.ds})"
    raise TypeError(f"unknown block {b!r}")


def format_family(A: Union[RepFamily, DyadicCopy]) -> str:
    lines = [f"alpha {A.ambient}"]
    if isinstance(A, DyadicCopy):
        grafts = _list(_list(g) for g in A.grafts)
        lines.append(f"dyadic(root_height={A.root_height}, root_bits={_set(A.root_bits)}, pad0={A.pad0}, "
                     f"pad1={A.pad1}, pad_step={A.pad_step}, grafts={grafts})")
    else:
        lines += [format_block(b) for b in A.blocks]
    return "\n".join(lines) + "\n"


def load_family(path) -> Union[RepFamily, DyadicCopy]:
    with open(path, encoding="utf-8") as f:
        return parse_family(f.read())


def save_family(A, path) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(format_family(A))
