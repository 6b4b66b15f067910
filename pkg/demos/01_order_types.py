"""Sorting order types into the three classes of the trichotomy."""

# %%
from lexpart import classify, parse_type
from lexpart.classifier import beta, same_leading_component, xi
from lexpart.ordinal import parse_ordinal

# %% Each expression is normalised first; the report names the class and, when
# a finite sum form exists, the ordinals xi and beta.
for expr in ["w+3", "zeta", "w~+w^2", "w^2+w~", "w*w~", "eta"]:
    print(f"== {expr}")
    print(classify(parse_type(expr)).text())

# %% beta is the largest ordinal sum over rearrangements of the indecomposable
# parts; xi is the leading component.
form = classify(parse_type("w^2+w~+w")).form
print("beta =", beta(form), " xi =", xi(form))

# %% Two ordinals share a leading component exactly when their xi values agree.
g1, g2, g3 = (parse_ordinal(t) for t in ("w^2+w", "w^2*2+w", "w^3"))
print(same_leading_component(g1, g2), same_leading_component(g1, g3))
