"""Order-type expressions and their finite-sum normal form.

Expressions are built from ``Fin(n)``, ``Ord(alpha)`` (alpha infinite) and
``Eta()`` using ``Rev``, ``Sum`` and ``Prod``.  Products are colexicographic:
``Prod(s, t)`` is t-many copies of s.

:func:`normalize` reduces an expression to a :class:`FiniteSumForm` (a finite
sum of ordinals and reverse ordinals) or reports which of eta, w.w* or w*.w
embeds into it.  The rule table is closed over this grammar only; it is not
a general embeddability oracle.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Optional, Union

from .ordinal import (
    ONE, OMEGA, ZERO, Ordinal, OrdinalSyntaxError, add, leading_term, mul,
    ordinal, parse_ordinal,
)

__all__ = [
    "Fin", "Ord", "Eta", "Rev", "Sum", "Prod", "TypeExpr", "zeta",
    "Entry", "FiniteSumForm", "NormalReport", "normalize", "embeds_special",
    "hausdorff_rank", "match_omega_plus_k", "parse_type", "format_type",
    "same_order_type", "TypeSyntaxError", "FWD", "REV",
]

FWD, REV = "fwd", "rev"


class TypeSyntaxError(ValueError):
    pass


# -- expressions ------------------------------------------------------------

@dataclass(frozen=True)
class Fin:
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("Fin needs n >= 0")


@dataclass(frozen=True)
class Ord:
    value: Ordinal

    def __post_init__(self):
        object.__setattr__(self, "value", ordinal(self.value))
        if self.value.is_finite():
            raise ValueError("Ord atoms are infinite; use Fin for finite values")


@dataclass(frozen=True)
class Eta:
    pass


@dataclass(frozen=True)
class Rev:
    inner: "TypeExpr"


@dataclass(frozen=True)
class Sum:
    items: tuple

    def __post_init__(self):
        object.__setattr__(self, "items", tuple(self.items))
        if len(self.items) < 2:
            raise ValueError("Sum needs at least two summands")


@dataclass(frozen=True)
class Prod:
    left: "TypeExpr"
    right: "TypeExpr"


TypeExpr = Union[Fin, Ord, Eta, Rev, Sum, Prod]


def zeta() -> Sum:
    return Sum((Rev(Ord(OMEGA)), Ord(OMEGA)))


def atom(value) -> TypeExpr:
    """Fin or Ord, whichever fits ``value``."""
    value = ordinal(value)
    return Fin(int(value)) if value.is_finite() else Ord(value)


# -- forms ------------------------------------------------------------------

@dataclass(frozen=True)
class Entry:
    value: Ordinal
    direction: str = FWD

    def __str__(self):
        return f"{self.direction} {self.value}"


@dataclass(frozen=True)
class FiniteSumForm:
    entries: tuple

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))

    def __str__(self):
        return "[" + ", ".join(str(e) for e in self.entries) + "]"

    def is_finite(self) -> bool:
        return all(e.value.is_finite() for e in self.entries)

    def to_expr(self) -> TypeExpr:
        if not self.entries:
            return Fin(0)
        parts = []
        for e in self.entries:
            a = atom(e.value)
            parts.append(Rev(a) if e.direction == REV and isinstance(a, Ord) else a)
        return parts[0] if len(parts) == 1 else Sum(tuple(parts))

    def text(self) -> str:
        return format_type(self.to_expr())


@dataclass
class NormalReport:
    embeds_eta: bool = False
    embeds_omega_omegastar: bool = False
    embeds_omegastar_omega: bool = False
    form: Optional[FiniteSumForm] = None
    witness: list = field(default_factory=list)

    @property
    def flagged(self) -> bool:
        return self.embeds_eta or self.embeds_omega_omegastar or self.embeds_omegastar_omega

    def key(self):
        return (self.embeds_eta, self.embeds_omega_omegastar,
                self.embeds_omegastar_omega, self.form)


# internal normalization state
@dataclass
class _N:
    entries: list
    eta: bool = False
    ww: bool = False      # w . w*
    sw: bool = False      # w* . w
    fwd_inf: bool = False
    rev_inf: bool = False
    trace: list = field(default_factory=list)

    @property
    def flagged(self):
        return self.eta or self.ww or self.sw

    @property
    def empty(self):
        return not self.flagged and not self.entries

    @property
    def finite(self):
        return not self.flagged and all(e.value.is_finite() for e in self.entries)


def _merge(entries) -> list:
    """Absorb finite entries and merge same-direction neighbours."""
    out: list[Entry] = []
    pending = 0
    for e in entries:
        if e.value.is_zero():
            continue
        if e.value.is_finite():
            if out and out[-1].direction == FWD:
                out[-1] = Entry(add(out[-1].value, e.value), FWD)
            else:
                pending += int(e.value)
            continue
        if pending:
            # k + b = b ; k + b* = (b + k)*
            if e.direction == REV:
                e = Entry(add(e.value, pending), REV)
            pending = 0
        if e.direction == REV and out and out[-1].direction == FWD and e.value.finite_part():
            # a + (b + k)* = (a + k) + b*
            k = e.value.finite_part()
            out[-1] = Entry(add(out[-1].value, k), FWD)
            e = Entry(Ordinal(e.value.terms[:-1]), REV)
        if out and out[-1].direction == e.direction and not out[-1].value.is_finite():
            top = out.pop()
            if e.direction == FWD:
                e = Entry(add(top.value, e.value), FWD)
            else:
                e = Entry(add(e.value, top.value), REV)
        out.append(e)
    if pending:
        if not out:
            out.append(Entry(ordinal(pending), FWD))
        # else: b* + k = (k + b)* = b*, absorbed
    return out


def _from_entries(entries, trace=None) -> _N:
    entries = _merge(entries)
    return _N(
        entries=entries,
        fwd_inf=any(e.direction == FWD and not e.value.is_finite() for e in entries),
        rev_inf=any(e.direction == REV and not e.value.is_finite() for e in entries),
        trace=list(trace or []),
    )


def _flag(eta=False, ww=False, sw=False, fwd=True, rev=True, trace=()) -> _N:
    return _N(entries=[], eta=eta, ww=ww, sw=sw, fwd_inf=fwd, rev_inf=rev, trace=list(trace))


def _rev(n: _N) -> _N:
    entries = [Entry(e.value, e.direction if e.value.is_finite() else (REV if e.direction == FWD else FWD))
               for e in reversed(n.entries)]
    out = _N(entries=_merge(entries), eta=n.eta, ww=n.sw, sw=n.ww,
             fwd_inf=n.rev_inf, rev_inf=n.fwd_inf, trace=n.trace + ["reverse: flip directions, swap w.w*/w*.w"])
    return out


def _sum(parts) -> _N:
    trace = [t for p in parts for t in p.trace]
    if any(p.flagged for p in parts):
        trace.append("sum: flags are disjunctive")
        return _flag(eta=any(p.eta for p in parts), ww=any(p.ww for p in parts),
                     sw=any(p.sw for p in parts), fwd=any(p.fwd_inf for p in parts),
                     rev=any(p.rev_inf for p in parts), trace=trace)
    return _from_entries([e for p in parts for e in p.entries], trace + ["sum: concatenate and merge"])


def _prod(s: _N, t: _N) -> _N:
    trace = s.trace + t.trace
    if s.empty or t.empty:
        return _from_entries([], trace + ["product with empty factor is empty"])
    if s.eta or t.eta:
        return _flag(eta=True, trace=trace + ["product: eta factor with nonzero cofactor embeds eta"])
    fwd = s.fwd_inf or t.fwd_inf
    rev = s.rev_inf or t.rev_inf
    ww = s.ww or t.ww or (s.fwd_inf and t.rev_inf)
    sw = s.sw or t.sw or (s.rev_inf and t.fwd_inf)
    if ww or sw:
        why = []
        if s.fwd_inf and t.rev_inf:
            why.append("w* copies of a set containing w embed w.w*")
        if s.rev_inf and t.fwd_inf:
            why.append("w copies of a set containing w* embed w*.w")
        if s.ww or t.ww or s.sw or t.sw:
            why.append("flags propagate through products")
        return _flag(ww=ww, sw=sw, fwd=fwd, rev=rev, trace=trace + ["product: " + "; ".join(why)])
    if t.finite:
        k = sum(int(e.value) for e in t.entries)
        return _from_entries(s.entries * k, trace + [f"product: s.{k} unfolds to {k}-fold sum"])
    if s.finite:
        k = sum(int(e.value) for e in s.entries)
        # k.(t1 + t2) = k.t1 + k.t2 and k.b* = (k.b)*
        return _from_entries([Entry(mul(k, e.value), e.direction) for e in t.entries],
                             trace + [f"product: {k}.t distributes over the summands of t"])
    # both infinite, single same-direction entries
    (a,), (b,) = s.entries, t.entries
    if a.direction == FWD:
        return _from_entries([Entry(mul(a.value, b.value), FWD)], trace + ["product: ordinal multiplication"])
    return _from_entries([Entry(mul(a.value, b.value), REV)], trace + ["product: a*.b* = (a.b)*"])


def _norm(e) -> _N:
    if isinstance(e, Fin):
        return _from_entries([Entry(ordinal(e.n), FWD)] if e.n else [], [f"atom {e.n}"])
    if isinstance(e, Ord):
        return _from_entries([Entry(e.value, FWD)], [f"atom {e.value}"])
    if isinstance(e, Eta):
        return _flag(eta=True, trace=["atom eta"])
    if isinstance(e, Rev):
        return _rev(_norm(e.inner))
    if isinstance(e, Sum):
        return _sum([_norm(x) for x in e.items])
    if isinstance(e, Prod):
        return _prod(_norm(e.left), _norm(e.right))
    raise TypeError(f"not a type expression: {e!r}")


def normalize(e: TypeExpr) -> NormalReport:
    n = _norm(e)
    rep = NormalReport(embeds_eta=n.eta, embeds_omega_omegastar=n.ww,
                       embeds_omegastar_omega=n.sw, witness=n.trace)
    if not n.flagged:
        rep.form = FiniteSumForm(tuple(n.entries))
    return rep


def embeds_special(pattern: str, e: TypeExpr) -> bool:
    rep = normalize(e)
    try:
        return {"eta": rep.embeds_eta, "omega_omegastar": rep.embeds_omega_omegastar,
                "omegastar_omega": rep.embeds_omegastar_omega}[pattern]
    except KeyError:
        raise ValueError(f"unknown pattern {pattern!r}") from None


def hausdorff_rank(f: FiniteSumForm) -> Ordinal:
    rank = ZERO
    for e in f.entries:
        if not e.value.is_finite():
            r = leading_term(e.value)[0]
            if r > rank:
                rank = r
    return rank


def match_omega_plus_k(f: FiniteSumForm):
    """``(k, "left")`` for w+k, ``(k, "right")`` for k+w*, else None."""
    if len(f.entries) != 1:
        return None
    (e,) = f.entries
    t = e.value.terms
    if not t or t[0] != (ONE, 1) or len(t) > 2:
        return None
    k = e.value.finite_part()
    return (k, "left") if e.direction == FWD else (k, "right")


# -- order-type equality including the w*.w tower ------------------------------

_TOWER = "tower"


def _segments(e) -> list:
    if isinstance(e, Sum):
        return [s for x in e.items for s in _segments(x)]
    if e == Prod(Rev(Ord(OMEGA)), Ord(OMEGA)):
        return [_TOWER]
    rep = normalize(e)
    if rep.form is None:
        return [("opaque", e)]
    return list(rep.form.entries)


def _signature(e) -> tuple:
    out: list = []
    buf: list = []

    def flush():
        if buf:
            out.extend(_merge(buf))
            buf.clear()

    for seg in _segments(e):
        if seg == _TOWER:
            merged = _merge(buf)
            # finite and w*.k + m summands are swallowed by a following w*.w
            while merged and (merged[-1].value.is_finite() or
                              (merged[-1].direction == REV and merged[-1].value < mul(OMEGA, OMEGA))):
                merged.pop()
            buf.clear()
            out.extend(merged)
            if not (out and out[-1] == _TOWER):
                out.append(_TOWER)
        elif isinstance(seg, tuple):
            flush()
            out.append(seg)
        else:
            buf.append(seg)
    flush()
    return tuple(out)


def same_order_type(a: TypeExpr, b: TypeExpr) -> bool:
    """Order-type equality, exact on finite-sum forms and on sums around w*.w."""
    ra, rb = normalize(a), normalize(b)
    if ra.form is not None or rb.form is not None:
        return ra.form == rb.form
    return _signature(a) == _signature(b)


# -- text grammar -----------------------------------------------------------

def _needs_parens(e, ctx):
    if isinstance(e, Sum):
        return ctx in ("prod", "prodr", "rev") and e != zeta()
    if isinstance(e, Prod):
        return ctx in ("prodr", "rev")
    if isinstance(e, Ord):
        return len(e.value.terms) > 1 or (ctx != "top" and e.value.terms[0][1] > 1)
    return False


def format_type(e: TypeExpr, ctx: str = "top") -> str:
    if isinstance(e, Fin):
        s = str(e.n)
    elif isinstance(e, Ord):
        s = str(e.value)
    elif isinstance(e, Eta):
        s = "eta"
    elif e == zeta():
        s = "zeta"
    elif isinstance(e, Rev):
        s = format_type(e.inner, "rev") + "~"
    elif isinstance(e, Sum):
        s = " + ".join(format_type(x, "sum") for x in e.items)
    elif isinstance(e, Prod):
        s = format_type(e.left, "prod") + " * " + format_type(e.right, "prodr")
    else:
        raise TypeError(f"not a type expression: {e!r}")
    return f"({s})" if _needs_parens(e, ctx) else s


_TTOK = re.compile(r"\s*(?:(\d+)|(eta|zeta|w)|(\^)|(\*)|(\+)|(~)|(\()|(\)))")


def _ttokens(text):
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TTOK.match(text, pos)
        if not m:
            raise TypeSyntaxError(f"unexpected character at {pos}: {text[pos:pos + 10]!r}")
        out.append((m.group(m.lastindex), m.end()))
        pos = m.end()
    return out, text


class _TParser:
    def __init__(self, text):
        self.toks, self.text = _ttokens(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i][0] if self.i < len(self.toks) else None

    def take(self, want=None):
        t = self.peek()
        if t is None or (want is not None and t != want):
            raise TypeSyntaxError(f"expected {want or 'token'}, got {t!r}")
        self.i += 1
        return t

    def expr(self):
        items = [self.prod()]
        while self.peek() == "+":
            self.take()
            items.append(self.prod())
        return items[0] if len(items) == 1 else Sum(tuple(items))

    def prod(self):
        e = self.postfix()
        while self.peek() == "*":
            self.take()
            e = Prod(e, self.postfix())
        return e

    def postfix(self):
        e = self.primary()
        while self.peek() == "~":
            self.take()
            e = Rev(e)
        return e

    def primary(self):
        t = self.take()
        if t.isdigit():
            return Fin(int(t))
        if t == "eta":
            return Eta()
        if t == "zeta":
            return zeta()
        if t == "w":
            if self.peek() != "^":
                return Ord(OMEGA)
            self.take("^")
            if self.peek() == "(":
                # hand the balanced exponent to the ordinal parser
                start = self.toks[self.i - 1][1]
                depth = 0
                while True:
                    tok = self.take()
                    depth += tok == "("
                    depth -= tok == ")"
                    if depth == 0:
                        break
                end = self.toks[self.i - 1][1]
                try:
                    exp = parse_ordinal(self.text[start:end])
                except OrdinalSyntaxError as err:
                    raise TypeSyntaxError(str(err)) from None
            else:
                tok = self.take()
                if not tok.isdigit():
                    raise TypeSyntaxError("exponent must be a natural or parenthesised")
                exp = ordinal(int(tok))
            return atom(Ordinal(((exp, 1),)))
        if t == "(":
            e = self.expr()
            self.take(")")
            return e
        raise TypeSyntaxError(f"unexpected token {t!r}")


def parse_type(text: str) -> TypeExpr:
    p = _TParser(text)
    if not p.toks:
        raise TypeSyntaxError("empty type expression")
    e = p.expr()
    if p.peek() is not None:
        raise TypeSyntaxError(f"trailing input at token {p.peek()!r}")
    return e
