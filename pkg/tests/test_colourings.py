from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lexpart.canonise import SymbolicOrdinalSet, canonise_family, n_map, n_prime, n_realize
from lexpart.cantorlex import KAPPA, Alpha, delta, extends, meet, point, sort_points
from lexpart.colourings import (
    FLIP_BOUND, ColouringError, DyadicCopy, FlipError, NotInDomain, affordable_pieces,
    colour_affordable, colour_C, colour_mutual, colour_tausplit, colour_triple, colour_zeta,
    const0, const1, dyadic_f, extend_total, flip_affordable_raw, flip_C, flip_mutual,
    flip_tausplit, flip_triple, flip_zeta, flip_zeta_cc, identity_selector, kappa_G,
    lift_selector, mutual_selectors, package_polarised, parity, polarised_split,
    prepare_two_classes, prepare_zeta_cc, replace_mutual, replace_zeta_selection,
    split_by_cuts, unique_zeta_selector, xi_cuts, zeta_cc_case, zeta_cc_dispatch,
)
from lexpart.corpus import load_corpus
from lexpart.families import (
    Chain, Finite, RawSequence, RepFamily, Tower, ZetaClass, block_points, cc_enumerate,
    nat_sched, sched,
)
from lexpart.ordinal import OMEGA, parse_ordinal
from lexpart.ordertype import normalize, parse_type, same_order_type

P = parse_ordinal
W = Alpha(OMEGA)
S = SymbolicOrdinalSet.of
CORPUS = dict(load_corpus())


def asc(stem, s, head=(), alpha=W):
    return Chain(alpha, "asc", frozenset(stem), s, tuple(head))


def desc(stem, s, head=(), alpha=W):
    return Chain(alpha, "desc", frozenset(stem), s, tuple(head))


def fam(*blocks, alpha=W):
    return RepFamily(alpha, blocks).validate()


ZETA = fam(ZetaClass(desc((), sched(start=1, step=2)), asc({0}, sched(start=1))))


def brute_C(A, k=8, big=30):
    """1 iff some meet of a consecutive pair in an infinite class has exactly two extensions."""
    pts = [p for b in A.blocks for p in block_points(b, 12 if isinstance(b, Tower) else big)]
    for cc in cc_enumerate(A.blocks):
        if not cc.infinite:
            continue
        if cc.kind == "tower":
            seqs = [[cc.block.point(i, n) for n in range(k)] for i in range(4)]
        else:
            seqs = [block_points(cc.block, k)]
        for s in seqs:
            s = sort_points(s)
            for x, y in zip(s, s[1:]):
                m = meet(x, y)
                if sum(extends(p, m) for p in pts) == 2:
                    return 1
    return 0


# -- colouring C -----------------------------------------------------------------

def test_colour_C_examples():
    assert colour_C(fam(asc((), sched(start=1)))) == 0
    assert colour_C(CORPUS["desc_extras"]) == 1
    assert colour_C(fam(Finite((point(W, 1), point(W, 0))))) == 0


@pytest.mark.parametrize("name", sorted(n for n, A in CORPUS.items() if not isinstance(A, DyadicCopy)))
def test_colour_C_matches_brute_force(name):
    A = CORPUS[name]
    assert colour_C(A) == brute_C(A)
    assert colour_C(canonise_family(A)) == 0


@pytest.mark.parametrize("name", ["tower", "tower_shifted", "finite_tower"])
def test_flip_C(name):
    A = canonise_family(CORPUS[name])
    F = flip_C(A)
    F.validate()
    assert colour_C(F) == 1 == brute_C(F)
    assert same_order_type(A.order_type(), F.order_type())
    assert colour_C(canonise_family(F)) == 0


def test_flip_C_needs_a_tower():
    with pytest.raises(NotInDomain):
        flip_C(fam(asc((), sched(start=1))))


# -- zeta ----------------------------------------------------------------------

def test_colour_zeta_examples():
    assert colour_zeta(ZETA) == 0
    z = ZETA.blocks[0]
    dropped = fam(ZetaClass(z.left, z.right.drop_prefix(1)))
    assert colour_zeta(dropped) == 1
    mirror = CORPUS["zeta_mirror"]
    assert colour_zeta(mirror) == colour_zeta(mirror)
    with pytest.raises(NotInDomain):
        colour_zeta(fam(asc((), sched(start=1))))


def test_flip_zeta():
    F = flip_zeta(ZETA, 1)
    assert colour_zeta(F) == 1
    assert flip_zeta(ZETA, 0) is ZETA
    G = flip_zeta(F)
    assert colour_zeta(G) == 0
    for X in (F, G):
        assert normalize(X.order_type()).form == normalize(ZETA.order_type()).form
        assert set(block_points(X.blocks[0], 6)) <= set(block_points(ZETA.blocks[0], 20))


# -- two w / w* classes ----------------------------------------------------------

TWO = fam(asc((), sched(start=1)), asc({0}, sched(start=2)))


def test_prepare_two_classes():
    assert prepare_two_classes(TWO) == canonise_family(TWO)
    A = CORPUS["omega_times_3"]
    B = prepare_two_classes(A)
    firsts = [cc.block.split(0) for cc in cc_enumerate(B.blocks)]
    assert firsts[2] > max(firsts[:2])
    assert same_order_type(A.order_type(), B.order_type())
    with pytest.raises(NotInDomain):
        prepare_two_classes(fam(asc((), sched(start=1))))


def test_colour_mutual_rule():
    # selectors drop the first point: splits 2 (first class) and 3 (second)
    assert colour_mutual(TWO) == 1
    swapped = fam(asc((), sched(start=3)), asc({0}, sched(start=1)))
    assert colour_mutual(swapped) == 0


def test_flip_mutual():
    F = flip_mutual(TWO)
    assert colour_mutual(F) == 0
    assert same_order_type(F.order_type(), TWO.order_type())


def test_mutual_selectors_disjoint_and_inside():
    f0, f1 = mutual_selectors(TWO)
    xs, ys = set(f0.points(8)), set(f1.points(8))
    assert not xs & ys
    assert xs <= set(TWO.blocks[0].points(10)) and ys <= set(TWO.blocks[1].points(10))


@pytest.mark.parametrize("k0", range(6))
@pytest.mark.parametrize("k1", range(6))
def test_mutual_coherence(k0, k1):
    A = prepare_two_classes(CORPUS["omega_times_3"])
    f0, f1 = mutual_selectors(A)
    B0, B1 = f0.drop_prefix(k0), f1.drop_prefix(k1)
    A2 = replace_mutual(A, B0, B1).validate()
    # (a), (b): images are disjoint subsets; (c), (d): replacing returns the replacements
    g0, g1 = mutual_selectors(A2)
    assert g0.points(6) == B0.points(6) and g1.points(6) == B1.points(6)
    assert not set(g0.points(6)) & set(g1.points(6))
    assert prepare_two_classes(A2) == A2


# -- zeta classes in larger families ----------------------------------------------

def test_zeta_cc_case_a_is_colour_zeta():
    assert zeta_cc_case(ZETA)[0] == "a"
    assert zeta_cc_dispatch(ZETA) == colour_zeta(ZETA)


@pytest.mark.parametrize("name", ["zeta_two_equal_roots", "zeta_three_equal_roots"])
def test_zeta_cc_case_b(name):
    B = prepare_zeta_cc(CORPUS[name])
    assert zeta_cc_case(B)[0] == "b"
    F = flip_zeta_cc(B)
    assert zeta_cc_dispatch(F) != zeta_cc_dispatch(B)
    assert same_order_type(F.order_type(), B.order_type())


def test_zeta_cc_flip_case_a():
    B = prepare_zeta_cc(CORPUS["zeta_two_roots"])
    assert zeta_cc_case(B)[0] == "a"
    F = flip_zeta_cc(B)
    assert zeta_cc_dispatch(F) != zeta_cc_dispatch(B)


# -- dyadic copies -----------------------------------------------------------------

def test_dyadic_f():
    A = CORPUS["dyadic_left_heavy"]
    root = dyadic_f(A, "")
    assert root == A.g("")
    f0 = dyadic_f(A, "0")
    assert f0.height > root.height and f0.bits >= root.bits and root.height not in f0.bits
    for t in ("", "0", "01", "011"):
        assert dyadic_f(A, t + "1").height > dyadic_f(A, t).height


def test_dyadic_points_in_lex_order():
    A = CORPUS["dyadic_balanced"]
    nodes = [""] + [format(i, f"0{n}b") for n in range(1, 4) for i in range(2 ** n)]
    # in-order traversal of the tree is the lex order of the decoded points
    def inorder(t, depth):
        if depth == 0:
            return [t]
        return inorder(t + "0", depth - 1) + [t] + inorder(t + "1", depth - 1)
    order = inorder("", 3)
    pts = [A.point(t) for t in order]
    assert sort_points(pts) == pts
    assert len(set(A.point(t) for t in nodes)) == len(nodes)


def test_tausplit_examples():
    bal = CORPUS["dyadic_balanced"]
    assert colour_tausplit(bal) == 0
    F = flip_tausplit(bal)
    assert colour_tausplit(F) == 1
    assert colour_tausplit(CORPUS["dyadic_left_heavy"]) == 0
    assert colour_tausplit(CORPUS["dyadic_right_heavy"]) == 1
    G = flip_tausplit(F)
    assert colour_tausplit(G) != colour_tausplit(F)


@pytest.mark.parametrize("name", ["dyadic_balanced", "dyadic_left_heavy", "dyadic_right_heavy"])
def test_tausplit_flip_is_a_subcopy(name):
    A = CORPUS[name]
    F = flip_tausplit(A)
    assert colour_tausplit(F) != colour_tausplit(A)
    nodes = [""] + [format(i, f"0{n}b") for n in range(1, 4) for i in range(2 ** n)]
    image = {A.point(format(i, f"0{n}b") if n else "") for n in range(0, 9) for i in range(2 ** n)}
    assert {F.point(t) for t in nodes} <= image


# -- triples -------------------------------------------------------------------------

def test_colour_triple_examples():
    x = (point(W), point(W, 1), point(W, 0))
    assert [delta(x[0], x[1]), delta(x[1], x[2])] == [1, 0]
    assert colour_triple(*x) == 0
    y = (point(W, 1), point(W, 0, 2), point(W, 0, 1))
    assert [delta(y[0], y[1]), delta(y[1], y[2])] == [0, 1]
    assert colour_triple(*y) == 1
    with pytest.raises(ColouringError):
        colour_triple(point(W, 0, 1), point(W, 0, 2), point(W, 1))


@pytest.mark.parametrize("name", sorted(n for n, A in CORPUS.items() if not isinstance(A, DyadicCopy)
                                        and any(cc.kind == "zeta" for cc in cc_enumerate(A.blocks))))
def test_triples_take_both_colours_in_zeta_classes(name):
    for cc in cc_enumerate(CORPUS[name].blocks):
        if cc.kind != "zeta":
            continue
        pts = sort_points(cc.block.left.points(3) + cc.block.right.points(3))
        colours = {colour_triple(*t) for t in combinations(pts, 3)}
        assert colours == {0, 1}
        t = tuple(pts[:3])
        assert colour_triple(*flip_triple(pts, t)) != colour_triple(*t)


def test_canonised_chains_are_triple_homogeneous():
    c = asc((), sched(start=1))
    assert {colour_triple(*t) for t in combinations(c.points(6), 3)} == {1}
    with pytest.raises(FlipError):
        flip_triple(c.points(6), tuple(c.points(3)))


# -- totalisation and selectors -------------------------------------------------------

def test_extend_total():
    total = extend_total(colour_zeta, default=0)
    assert total(ZETA) == colour_zeta(ZETA)
    assert total(TWO) == 0
    for name, A in CORPUS.items():
        if not isinstance(A, DyadicCopy):
            assert extend_total(colour_C)(canonise_family(A)) == 0


def test_lift_selector():
    G = lift_selector(unique_zeta_selector, colour_zeta)
    assert G(ZETA) == colour_zeta(ZETA)
    A = CORPUS["zeta_plus_omega"]
    assert G(A) == colour_zeta(unique_zeta_selector(A))
    assert lift_selector(identity_selector, colour_C)(TWO) == colour_C(TWO)


@pytest.mark.parametrize("k", range(6))
@pytest.mark.parametrize("side", ["left", "right"])
def test_unique_zeta_selector_coherent(k, side):
    A = CORPUS["zeta_plus_omega"]
    sel = unique_zeta_selector(A)
    assert set(block_points(sel.blocks[0])) <= set(A.sample(8))
    z = sel.blocks[0]
    sub = ZetaClass(z.left.drop_prefix(k), z.right) if side == "left" else ZetaClass(z.left, z.right.drop_prefix(k))
    B = RepFamily(A.ambient, (sub,))
    A2 = replace_zeta_selection(A, B).validate()
    assert unique_zeta_selector(A2) == B


@pytest.mark.parametrize("k", range(6))
def test_identity_selector_coherent(k):
    A = fam(asc((), sched(start=1)))
    B = fam(A.blocks[0].drop_prefix(k))
    assert identity_selector(B) == B


# -- kappa colourings ---------------------------------------------------------------

KA = asc((), sched(start=OMEGA), alpha=KAPPA)


def test_kappa_G_examples():
    assert kappa_G(const0, KA) == 0 and kappa_G(const1, KA) == 1
    assert kappa_G(parity, KA) == 0
    assert kappa_G(parity, KA.drop_prefix(1)) == 1
    assert n_map(KA.drop_prefix(3)) == S(sched(start=P("w+3")))


@pytest.mark.parametrize("F", [const0, const1, parity])
@pytest.mark.parametrize("start,step", [(0, 1), (1, 1), (3, 1), (0, 2), (1, 2), (2, 3)])
def test_kappa_transfer(F, start, step):
    X = S(KA.levels.compose(nat_sched(start=start, step=step)))
    assert kappa_G(F, n_realize(KA, X)) == F(X)


def test_polarised_split():
    form = normalize(parse_type("w + w")).form
    assert xi_cuts(normalize(parse_type("w")).form) == []
    X = S(sched(start=1), (OMEGA, sched(start=0, step=2)))
    assert split_by_cuts(X, []) == [X]
    lo, hi = split_by_cuts(X, [OMEGA])
    assert lo == S(sched(start=1)) and hi == S((OMEGA, sched(start=0, step=2)))
    assert lo.concat(hi) == X
    G = package_polarised(parity)
    assert polarised_split(G, [OMEGA])(X) == parity(X)
    assert polarised_split(lambda a, b: parity(b), [OMEGA])(X) == 0
    with pytest.raises(ColouringError):
        split_by_cuts(X, [OMEGA, 1])


# -- affordable ---------------------------------------------------------------------

def test_colour_affordable_main_case():
    A = fam(asc((), sched(start=1)), asc({0}, sched(start=2, step=2)))
    for F in (const0, const1, parity):
        assert colour_affordable(F, A) == F(n_prime(A))


def test_colour_affordable_raw_case():
    A = CORPUS["raw_asc"]
    c = affordable_pieces(A)[0]
    assert (c.split(0), c.split(1)) == (5, 2)
    assert colour_affordable(parity, A) == 0
    F = flip_affordable_raw(parity, A)
    assert colour_affordable(parity, F) == 1
    assert same_order_type(A.order_type(), F.order_type())


def test_flip_affordable_canonising_move():
    A = CORPUS["omega_extras"]
    assert colour_affordable(parity, A) == 0
    F = flip_affordable_raw(parity, A)
    assert all(c.is_canonised() for c in affordable_pieces(F))
    assert colour_affordable(parity, F) == 1


@pytest.mark.parametrize("F", [const0, const1, parity])
@pytest.mark.parametrize("start,step", [(0, 1), (2, 1), (1, 2), (0, 3)])
def test_affordable_transfer_two_pieces(F, start, step):
    from lexpart.canonise import realize_subselection
    A = fam(asc((), sched(start=1)), asc({0}, sched(start=2, step=2)))
    sel = nat_sched(start=start, step=step)
    H = realize_subselection(A, [sel, sel])
    assert colour_affordable(F, H) == F(n_prime(H))
    pieces = affordable_pieces(A)
    want = S(pieces[0].levels.compose(sel), (OMEGA, pieces[1].levels.compose(sel)))
    assert n_prime(H) == want
