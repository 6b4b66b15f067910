"""Shared hypothesis strategies."""

from hypothesis import strategies as st

from lexpart.ordinal import Ordinal, omega_power


@st.composite
def small_ordinals(draw, max_exp=4, max_coef=5, max_terms=3):
    """Ordinals below w^w with natural exponents."""
    exps = draw(st.lists(st.integers(0, max_exp), unique=True, max_size=max_terms))
    exps.sort(reverse=True)
    return Ordinal((e, draw(st.integers(1, max_coef))) for e in exps)


@st.composite
def deep_ordinals(draw, depth=2):
    """Ordinals whose exponents may themselves be infinite."""
    if depth == 0:
        return draw(small_ordinals(max_exp=3, max_terms=2))
    exps = draw(st.lists(deep_ordinals(depth=depth - 1), unique=True, max_size=2))
    exps.sort(reverse=True)
    return Ordinal((e, draw(st.integers(1, 3))) for e in exps)


def w(e=1, k=1):
    return omega_power(e, k)
