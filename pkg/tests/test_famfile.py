import pytest
from hypothesis import given
from hypothesis import strategies as st

from lexpart.cantorlex import KAPPA, Alpha
from lexpart.colourings import DyadicCopy
from lexpart.corpus import ENV_VAR, corpus_dir, load_corpus
from lexpart.famfile import (
    FamilySyntaxError, format_family, load_family, parse_family, save_family,
)
from lexpart.families import Chain, FamilyError, RepFamily, sched
from lexpart.ordinal import OMEGA, parse_ordinal
from lexpart.soundness import FLIP_NAMES, check_flip, flip_matrix

CORPUS = load_corpus()


def test_corpus_size_and_validity():
    assert len(CORPUS) >= 20
    for name, A in CORPUS:
        if not isinstance(A, DyadicCopy):
            A.validate()


@pytest.mark.parametrize("name,A", CORPUS, ids=[n for n, _ in CORPUS])
def test_round_trip(name, A):
    text = format_family(A)
    B = parse_family(text)
    assert B == A
    assert format_family(B) == text


def test_save_and_load(tmp_path):
    A = dict(CORPUS)["zeta"]
    p = tmp_path / "z.fam"
    save_family(A, p)
    assert load_family(p) == A


def test_comments_and_alpha():
    A = parse_family("# a comment\nalpha w*2\nasc(stem={}, sched=sched(start=w))  # tail\n")
    assert A.ambient == Alpha(parse_ordinal("w*2"))
    assert parse_family("alpha kappa\nasc(stem={}, sched=sched(start=w))").ambient == KAPPA


def test_zeta_root_is_checked():
    ok = "zeta(r=0, left=desc(stem={}, sched=sched(start=1, step=2)), right=asc(stem={0}, sched=sched(start=1)))"
    parse_family(ok)
    with pytest.raises(FamilySyntaxError):
        parse_family(ok.replace("r=0", "r=3"))


@pytest.mark.parametrize("text,line", [
    ("asc(stem={}, sched=sched(start=1)", 1),
    ("asc(stem={}, sched=sched(start=1))\nbogus(1)", 2),
    ("alpha w\n\nasc(stem={}, sched=sched(start=1)) extra", 3),
    ("dyadic(root_height=0, root_bits={}, pad0=1, pad1=1, pad_step=0)\nasc(stem={}, sched=sched(start=1))", 1),
    ("", None),
])
def test_syntax_errors_carry_line(text, line):
    with pytest.raises(FamilySyntaxError) as e:
        parse_family(text)
    if line is not None:
        assert str(e.value).startswith(f"line {line}:")


@given(st.sampled_from(["asc", "desc"]), st.lists(st.integers(0, 4), unique=True, max_size=3),
       st.integers(5, 9), st.integers(1, 3), st.sets(st.integers(20, 30), max_size=2))
def test_chain_round_trip(kind, prefix, start, step, stem):
    c = Chain(Alpha(OMEGA), kind, frozenset(stem), sched(prefix=sorted(prefix), start=start, step=step))
    A = RepFamily(Alpha(OMEGA), (c,))
    assert parse_family(format_family(A)) == A


def test_corpus_env_override(tmp_path, monkeypatch):
    (tmp_path / "one.fam").write_text("asc(stem={}, sched=sched(start=1))\n")
    monkeypatch.setenv(ENV_VAR, str(tmp_path))
    assert corpus_dir() == tmp_path
    assert [n for n, _ in load_corpus()] == ["one"]
    monkeypatch.setenv(ENV_VAR, str(tmp_path / "missing"))
    with pytest.raises(FileNotFoundError):
        load_corpus()


def test_flip_matrix_all_pass():
    rows = flip_matrix(CORPUS)
    applicable = {c: 0 for c in FLIP_NAMES}
    for name, results in rows:
        for r in results:
            assert r.mark != "FAIL", (name, r)
            applicable[r.colouring] += r.applicable
    assert all(applicable.values()), applicable
    assert sum(any(r.applicable for r in rs) for _, rs in rows) >= 20


def test_check_flip_not_applicable():
    A = dict(CORPUS)["omega"]
    assert all(not check_flip(c, A).applicable for c in FLIP_NAMES)
    with pytest.raises(ValueError):
        check_flip("nope", A)
