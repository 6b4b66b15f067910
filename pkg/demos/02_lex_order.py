"""Points of the lexicographic order and the splitting level delta."""

# %%
from itertools import combinations

from lexpart.cantorlex import Alpha, Point, b_decode, b_encode, delta, sort_points
from lexpart.ordinal import OMEGA, parse_ordinal

# %% A point is a finite set of positions below alpha.  Sorting all subsets of
# {0, 1, 2} shows the order: a point missing the first differing position is smaller.
W = Alpha(OMEGA)
pts = sort_points([Point(W, frozenset(s)) for r in range(4) for s in combinations(range(3), r)])
for p in pts:
    print("{" + ", ".join(str(o) for o in sorted(p.support)) + "}")

# %% delta is the first position where two points differ.  For x < y < z it
# obeys the min-law delta(x, z) = min(delta(x, y), delta(y, z)).
x, y, z = pts[1], pts[4], pts[6]
print(delta(x, y), delta(y, z), delta(x, z))

# %% Below w^w, positions can be listed as 0, 1, 2, ...; B and its inverse
# translate between the two.
a = Alpha(parse_ordinal("w^2+w"))
for n in range(6):
    o = b_decode(a, n)
    print(n, o, b_encode(a, o))
