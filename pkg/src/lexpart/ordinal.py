"""Ordinals below epsilon_0 in Cantor normal form.

An ordinal is a tuple of ``(exponent, coefficient)`` terms with strictly
decreasing exponents; exponents are themselves :class:`Ordinal` values.
Python ints are accepted wherever an ordinal is expected and are promoted
with :func:`ordinal`.

Text notation::

    0 | 17 | w | w^(EXPR) | TERM*COEFF | EXPR + EXPR

e.g. ``w^(2)*3 + w + 5``.  Whitespace is ignored.
"""

from __future__ import annotations

import re
from functools import lru_cache, total_ordering
from typing import Iterable, Union

__all__ = [
    "Ordinal", "OrdinalLike", "ordinal", "ZERO", "ONE", "OMEGA",
    "cmp", "add", "natural_sum", "mul", "omega_power", "indecomposable_parts",
    "leading_term", "left_subtract", "parse_ordinal", "OrdinalSyntaxError",
]


class OrdinalSyntaxError(ValueError):
    pass


@total_ordering
class Ordinal:
    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Iterable[tuple["Ordinal", int]] = ()):
        terms = tuple((ordinal(e), int(c)) for e, c in terms)
        for i, (e, c) in enumerate(terms):
            if c < 1:
                raise ValueError(f"coefficient must be positive, got {c}")
            if i and not terms[i - 1][0] > e:
                raise ValueError("exponents must be strictly decreasing")
        self.terms = terms
        self._hash = hash(terms)

    @classmethod
    def _raw(cls, terms):
        obj = object.__new__(cls)
        obj.terms = terms
        obj._hash = hash(terms)
        return obj

    # -- predicates ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_finite(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.terms[0][0].is_zero())

    def is_limit(self) -> bool:
        return bool(self.terms) and not self.terms[-1][0].is_zero()

    def __int__(self) -> int:
        if not self.is_finite():
            raise ValueError(f"{self} is infinite")
        return self.terms[0][1] if self.terms else 0

    def finite_part(self) -> int:
        """The trailing natural-number summand (0 for limits)."""
        if self.terms and self.terms[-1][0].is_zero():
            return self.terms[-1][1]
        return 0

    # -- comparison ---------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, int):
            other = ordinal(other)
        if not isinstance(other, Ordinal):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        if isinstance(other, int):
            other = ordinal(other)
        if not isinstance(other, Ordinal):
            return NotImplemented
        return cmp(self, other) < 0

    # -- arithmetic sugar ---------------------------------------------------
    def __add__(self, other):
        return add(self, other)

    def __radd__(self, other):
        return add(other, self)

    def __mul__(self, other):
        return mul(self, other)

    def __rmul__(self, other):
        return mul(other, self)

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"Ordinal({str(self)!r})"

    def __str__(self):
        return format_ordinal(self)


OrdinalLike = Union[Ordinal, int]


@lru_cache(maxsize=4096)
def _nat(n: int) -> Ordinal:
    if n == 0:
        return Ordinal._raw(())
    return Ordinal._raw(((_nat(0), n),))


def ordinal(x: OrdinalLike) -> Ordinal:
    if isinstance(x, Ordinal):
        return x
    if isinstance(x, bool) or not isinstance(x, int):
        raise TypeError(f"cannot interpret {x!r} as an ordinal")
    if x < 0:
        raise ValueError("ordinals are non-negative")
    return _nat(x)


ZERO = ordinal(0)
ONE = ordinal(1)
OMEGA = Ordinal._raw(((ONE, 1),))


def omega_power(e: OrdinalLike, k: int = 1) -> Ordinal:
    """``w^e * k``."""
    if k == 0:
        return ZERO
    return Ordinal._raw(((ordinal(e), k),))


def cmp(a: OrdinalLike, b: OrdinalLike) -> int:
    """-1, 0 or 1 as ``a`` is less than, equal to or greater than ``b``."""
    a, b = ordinal(a), ordinal(b)
    if a.terms is b.terms:
        return 0
    for (ea, ca), (eb, cb) in zip(a.terms, b.terms):
        c = cmp(ea, eb)
        if c:
            return c
        if ca != cb:
            return -1 if ca < cb else 1
    la, lb = len(a.terms), len(b.terms)
    return (la > lb) - (la < lb)


def add(a: OrdinalLike, b: OrdinalLike) -> Ordinal:
    a, b = ordinal(a), ordinal(b)
    if not b.terms:
        return a
    if not a.terms:
        return b
    lead_e, lead_c = b.terms[0]
    kept = []
    for e, c in a.terms:
        k = cmp(e, lead_e)
        if k > 0:
            kept.append((e, c))
        elif k == 0:
            kept.append((e, c + lead_c))
            return Ordinal._raw(tuple(kept) + b.terms[1:])
        else:
            break
    return Ordinal._raw(tuple(kept) + b.terms)


def natural_sum(a: OrdinalLike, b: OrdinalLike) -> Ordinal:
    """Hessenberg sum: merge the CNF terms, adding equal-exponent coefficients."""
    a, b = ordinal(a), ordinal(b)
    out = []
    i = j = 0
    ta, tb = a.terms, b.terms
    while i < len(ta) and j < len(tb):
        k = cmp(ta[i][0], tb[j][0])
        if k > 0:
            out.append(ta[i])
            i += 1
        elif k < 0:
            out.append(tb[j])
            j += 1
        else:
            out.append((ta[i][0], ta[i][1] + tb[j][1]))
            i += 1
            j += 1
    out.extend(ta[i:])
    out.extend(tb[j:])
    return Ordinal._raw(tuple(out))


def mul(a: OrdinalLike, b: OrdinalLike) -> Ordinal:
    """Ordinal product ``a * b`` (``b`` copies of ``a``)."""
    a, b = ordinal(a), ordinal(b)
    if not a.terms or not b.terms:
        return ZERO
    lead_e, lead_c = a.terms[0]
    out = ZERO
    # right-distribute over the CNF terms of b
    for e, c in b.terms:
        if e.is_zero():
            piece = Ordinal._raw(((lead_e, lead_c * c),) + a.terms[1:])
        else:
            piece = Ordinal._raw(((add(lead_e, e), c),))
        out = add(out, piece)
    return out


def indecomposable_parts(a: OrdinalLike) -> list[Ordinal]:
    a = ordinal(a)
    if a.is_zero():
        raise ValueError("zero has no indecomposable parts")
    return [Ordinal._raw((t,)) for t in a.terms]


def leading_term(a: OrdinalLike) -> tuple[Ordinal, int]:
    a = ordinal(a)
    if a.is_zero():
        raise ValueError("zero has no leading term")
    return a.terms[0]


def left_subtract(a: OrdinalLike, b: OrdinalLike) -> Ordinal:
    """The unique ``d`` with ``a + d == b``; requires ``a <= b``."""
    a, b = ordinal(a), ordinal(b)
    ta, tb = a.terms, b.terms
    for i, (ea, ca) in enumerate(ta):
        if i >= len(tb):
            break
        eb, cb = tb[i]
        k = cmp(ea, eb)
        if k < 0:
            return Ordinal._raw(tb[i:])
        if k > 0:
            break
        if ca < cb:
            return Ordinal._raw(((eb, cb - ca),) + tb[i + 1:])
        if ca > cb:
            break
    else:
        return Ordinal._raw(tb[len(ta):])
    raise ValueError(f"{a} > {b}")


# -- text notation ----------------------------------------------------------

def format_ordinal(a: Ordinal) -> str:
    if not a.terms:
        return "0"
    parts = []
    for e, c in a.terms:
        if e.is_zero():
            parts.append(str(c))
            continue
        base = "w" if e == ONE else f"w^({format_ordinal(e)})"
        parts.append(base if c == 1 else f"{base}*{c}")
    return " + ".join(parts)


_TOKEN = re.compile(r"\s*(?:(\d+)|(w)|(\^)|(\*)|(\+)|(\()|(\)))")


def _tokenize(text: str) -> list[str]:
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise OrdinalSyntaxError(f"unexpected character at {pos}: {text[pos:pos + 10]!r}")
        out.append(m.group(m.lastindex))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, tokens):
        self.toks = tokens
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, tok=None):
        t = self.peek()
        if t is None or (tok is not None and t != tok):
            raise OrdinalSyntaxError(f"expected {tok or 'token'}, got {t!r}")
        self.i += 1
        return t

    def expr(self) -> Ordinal:
        value = self.term()
        while self.peek() == "+":
            self.take("+")
            value = add(value, self.term())
        return value

    def term(self) -> Ordinal:
        t = self.take()
        if t.isdigit():
            base = ordinal(int(t))
        elif t == "w":
            exp = ONE
            if self.peek() == "^":
                self.take("^")
                if self.peek() == "(":
                    self.take("(")
                    exp = self.expr()
                    self.take(")")
                else:
                    exp = ordinal(int(self.take()))
            base = omega_power(exp)
        elif t == "(":
            base = self.expr()
            self.take(")")
        else:
            raise OrdinalSyntaxError(f"unexpected token {t!r}")
        while self.peek() == "*":
            self.take("*")
            t = self.take()
            if not t.isdigit():
                raise OrdinalSyntaxError("coefficient must be a natural number")
            base = mul(base, int(t))
        return base


def parse_ordinal(text: str) -> Ordinal:
    toks = _tokenize(text)
    if not toks:
        raise OrdinalSyntaxError("empty ordinal expression")
    p = _Parser(toks)
    value = p.expr()
    if p.peek() is not None:
        raise OrdinalSyntaxError(f"trailing input at token {p.peek()!r}")
    return value
