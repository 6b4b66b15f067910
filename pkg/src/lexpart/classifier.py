"""Trichotomy classification of exponents tau and the invariants xi, beta."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import chain
from typing import Optional

from .ordinal import ZERO, Ordinal, add, indecomposable_parts, leading_term
from .ordertype import (
    FiniteSumForm, NormalReport, TypeExpr, match_omega_plus_k, normalize,
)

__all__ = [
    "TrichotomyReport", "ClassifyError", "EmptyTypeError", "FiniteTypeError",
    "xi", "beta", "classify", "same_leading_component", "leading_component_certificate",
]

EQUIV_CLASS1 = "<^w 2, <lex> -> (tau)^tau  <=>  w -> (w)^w"
EQUIV_CLASS2 = "<^w1 2> -> (tau)^tau  <=>  w1 -> (beta)^beta"
NOTE_CLASS2 = ("<^alpha 2> -/-> (tau)^tau for every countable alpha; "
               "for other uncountable alpha the relation is an open question")
EQUIV_CLASS3 = {
    "eta": "negative for all alpha: any countable order embeds in tau, so <^alpha 2> -/-> (tau)^tau",
    "omega_omegastar": "negative for all alpha: w.w* <= tau, so <^alpha 2> -/-> (tau)^tau",
    "omegastar_omega": "negative for all alpha: w*.w <= tau, so <^alpha 2> -/-> (tau)^tau",
}


class ClassifyError(ValueError):
    pass


class EmptyTypeError(ClassifyError):
    pass


class FiniteTypeError(ClassifyError):
    pass


@dataclass
class TrichotomyReport:
    class_index: int
    form: Optional[FiniteSumForm] = None
    k_and_side: Optional[tuple] = None
    xi: Optional[Ordinal] = None
    beta: Optional[Ordinal] = None
    witness: str = "none"
    equivalence: str = ""
    note: str = ""
    trace: list = field(default_factory=list, compare=False)

    def lines(self) -> list[str]:
        out = [f"class: {self.class_index}"]
        if self.form is not None:
            out.append(f"form: {self.form}")
            out.append(f"type: {self.form.text()}")
        if self.k_and_side is not None:
            out.append(f"k: {self.k_and_side[0]}")
            out.append(f"side: {self.k_and_side[1]}")
        if self.xi is not None:
            out.append(f"xi: {self.xi}")
        if self.beta is not None:
            out.append(f"beta: {self.beta}")
        out.append(f"witness: {self.witness}")
        out.append(f"equivalence: {self.equivalence}")
        if self.note:
            out.append(f"note: {self.note}")
        return out

    def text(self) -> str:
        return "\n".join(self.lines()) + "\n"


def _check_infinite(f: FiniteSumForm):
    if not f.entries or f.is_finite():
        raise ClassifyError("xi and beta need a form with infinite entries")


def xi(f: FiniteSumForm) -> Ordinal:
    """Ordinal sum of the entry values, in order."""
    _check_infinite(f)
    total = ZERO
    for e in f.entries:
        total = add(total, e.value)
    return total


def beta(f: FiniteSumForm) -> Ordinal:
    """Largest ordinal sum of the indecomposable parts of all entries."""
    _check_infinite(f)
    parts = list(chain.from_iterable(indecomposable_parts(e.value) for e in f.entries))
    parts.sort(reverse=True)
    total = ZERO
    for p in parts:
        total = add(total, p)
    return total


def classify(e: TypeExpr) -> TrichotomyReport:
    rep: NormalReport = normalize(e)
    if rep.embeds_eta:
        w = "eta"
    elif rep.embeds_omega_omegastar:
        w = "omega_omegastar"
    elif rep.embeds_omegastar_omega:
        w = "omegastar_omega"
    else:
        w = None
    if w is not None:
        return TrichotomyReport(3, witness=w, equivalence=EQUIV_CLASS3[w], trace=rep.witness)
    f = rep.form
    if not f.entries:
        raise EmptyTypeError("empty order type: tau must be nonzero")
    if f.is_finite():
        raise FiniteTypeError(f"finite order type {f}: tau must be infinite")
    m = match_omega_plus_k(f)
    if m is not None:
        return TrichotomyReport(1, form=f, k_and_side=m, equivalence=EQUIV_CLASS1, trace=rep.witness)
    x, b = xi(f), beta(f)
    assert x <= b
    return TrichotomyReport(2, form=f, xi=x, beta=b, equivalence=EQUIV_CLASS2,
                            note=NOTE_CLASS2, trace=rep.witness)


def same_leading_component(g: Ordinal, g2: Ordinal) -> bool:
    """Whether the CNFs of ``g`` and ``g2`` share their first term."""
    if g.is_finite() or g2.is_finite():
        raise ClassifyError("same_leading_component needs infinite ordinals")
    return leading_term(g) == leading_term(g2)


def leading_component_certificate(g: Ordinal, g2: Ordinal) -> str:
    if same_leading_component(g, g2):
        return f"kappa -> ({g})^({g}) <=> kappa -> ({g2})^({g2})"
    return f"leading terms differ: {leading_term(g)} vs {leading_term(g2)}"
