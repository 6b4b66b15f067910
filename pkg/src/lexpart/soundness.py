"""Flip-soundness checks over a corpus: same order type, other colour."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .canonise import canonise_family
from .cantorlex import sort_points
from .colourings import (
    DyadicCopy, FlipError, NotInDomain, colour_C, colour_affordable, colour_mutual,
    colour_tausplit, colour_triple, colour_zeta, flip_C, flip_affordable_raw,
    flip_mutual, flip_tausplit, flip_triple, flip_zeta, flip_zeta_cc, parity,
    prepare_two_classes, prepare_zeta_cc, zeta_cc_dispatch, affordable_pieces,
)
from .families import RepFamily, Tower, cc_enumerate
from .ordertype import same_order_type

__all__ = ["FlipResult", "FLIP_NAMES", "check_flip", "flip_matrix", "run_flip", "colour_of", "triple_of"]

FLIP_NAMES = ("C", "zeta", "mutual", "zeta-cc", "tausplit", "triple", "affordable")


@dataclass(frozen=True)
class FlipResult:
    colouring: str
    applicable: bool
    ok: bool = False
    before: int = -1
    after: int = -1
    detail: str = ""

    @property
    def mark(self) -> str:
        if not self.applicable:
            return "-"
        return "pass" if self.ok else "FAIL"


def _kinds(A):
    return [cc.kind for cc in cc_enumerate(A.blocks)]


def triple_of(A: RepFamily) -> tuple:
    """The three lex-least of the first three points on each side of the first zeta class."""
    zs = [cc.block for cc in cc_enumerate(A.blocks) if cc.kind == "zeta"]
    if not zs:
        raise NotInDomain("the triple colouring needs a zeta class")
    pts = zs[0].left.points(3) + zs[0].right.points(3)
    return tuple(sort_points(pts)[:3]), pts


def colour_of(name: str, A, oracle=parity) -> int:
    """Colour of ``A`` under the named colouring, evaluated on ``A`` as given."""
    if name == "tausplit":
        if not isinstance(A, DyadicCopy):
            raise NotInDomain("tausplit needs a dyadic copy")
        return colour_tausplit(A)
    if isinstance(A, DyadicCopy):
        raise NotInDomain(f"{name} is not defined on dyadic copies")
    if name == "triple":
        return colour_triple(*triple_of(A)[0])
    if name == "affordable":
        return colour_affordable(oracle, A)
    if name not in _PIPELINES:
        raise ValueError(f"unknown colouring {name!r}")
    return _PIPELINES[name][1](A)


_PIPELINES = {
    "C": (canonise_family, colour_C, lambda A, t: flip_C(A)),
    "zeta": (lambda A: A, colour_zeta, flip_zeta),
    "mutual": (prepare_two_classes, colour_mutual, lambda A, t: flip_mutual(A)),
    "zeta-cc": (prepare_zeta_cc, zeta_cc_dispatch, lambda A, t: flip_zeta_cc(A)),
}


def run_flip(name: str, A, target: Optional[int] = None, oracle=parity):
    """``(prepared, flipped, before, after)``; the prepared input has the same type as ``A``.

    With a target equal to the current colour nothing is flipped.  For the
    triple colouring the two families are replaced by the two triples.
    """
    if name == "tausplit":
        c0 = colour_of(name, A)
        F = A if target == c0 else flip_tausplit(A)
        return A, F, c0, colour_tausplit(F)
    if isinstance(A, DyadicCopy):
        raise NotInDomain(f"{name} is not defined on dyadic copies")
    if name == "triple":
        t, pts = triple_of(A)
        c0 = colour_triple(*t)
        t2 = t if target == c0 else flip_triple(pts, t)
        return t, t2, c0, colour_triple(*t2)
    if name == "affordable":
        prepare, colour = (lambda X: X), (lambda X: colour_affordable(oracle, X))
        flip = lambda X, t: flip_affordable_raw(oracle, X)
    elif name in _PIPELINES:
        prepare, colour, flip = _PIPELINES[name]
    else:
        raise ValueError(f"unknown colouring {name!r}")
    B = prepare(A).validate()
    c0 = colour(B)
    F = B if target == c0 else flip(B, target).validate()
    return B, F, c0, colour(F)


def _applies(name: str, A) -> bool:
    if name == "tausplit":
        return isinstance(A, DyadicCopy)
    if isinstance(A, DyadicCopy):
        return False
    kinds = _kinds(A)
    if name == "C":
        return isinstance(A.blocks[-1], Tower)
    if name == "zeta":
        return kinds == ["zeta"]
    if name == "mutual":
        return sum(k in ("omega", "omegastar") for k in kinds) >= 2
    if name in ("zeta-cc", "triple"):
        return "zeta" in kinds
    if name == "affordable":
        return "tower" not in kinds and not all(c.is_canonised() for c in affordable_pieces(A))
    raise ValueError(f"unknown colouring {name!r}")


def check_flip(name: str, A) -> FlipResult:
    """Run the flip of colouring ``name`` on ``A`` when it applies."""
    if not _applies(name, A):
        return FlipResult(name, False)
    try:
        B, F, c0, c1 = run_flip(name, A)
    except NotInDomain as e:
        return FlipResult(name, True, False, detail=f"not in domain: {e}")
    except FlipError as e:
        return FlipResult(name, True, False, detail=f"flip failed: {e}")
    if name == "triple":
        same = len(set(F)) == 3
    elif name == "tausplit":
        same = True
    else:
        same = (same_order_type(B.order_type(), F.order_type())
                and same_order_type(A.order_type(), F.order_type()))
    return FlipResult(name, True, same and c0 != c1, c0, c1, "" if same else "order type changed")


def flip_matrix(corpus) -> list[tuple[str, list[FlipResult]]]:
    return [(n, [check_flip(c, A) for c in FLIP_NAMES]) for n, A in corpus]
