"""Colourings of the corpus families and flips to the other colour."""

# %%
from lexpart.canonise import canonise_family
from lexpart.colourings import DyadicCopy, colour_C
from lexpart.corpus import load_corpus
from lexpart.diagram import render
from lexpart.famfile import format_family
from lexpart.soundness import FLIP_NAMES, flip_matrix, run_flip

corpus = dict(load_corpus())

# %% A family lists condensation classes in increasing order.  Canonising makes
# every class regular, and the C colouring is 0 on every canonised family.
A = corpus["omega_extras"]
print(format_family(A))
print(format_family(canonise_family(A)))
print("C after canonising:", colour_C(canonise_family(A)))

# %% The splitting picture of a canonised zeta class.
print(render(corpus["zeta"]))

# %% A flip returns a subfamily of the same order type with the other colour.
B, F, c0, c1 = run_flip("zeta", corpus["zeta"])
print(c0, "->", c1)
print(format_family(F))

# %% The matrix: every flip that applies to a family succeeds.
for name, results in flip_matrix(load_corpus()):
    print(name.ljust(28), " ".join(r.mark.ljust(5) for r in results))
print("colourings:", ", ".join(FLIP_NAMES))
print("non-dyadic families:", sum(not isinstance(A, DyadicCopy) for A in corpus.values()))
