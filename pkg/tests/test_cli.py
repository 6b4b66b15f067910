import io
from pathlib import Path

import pytest

from lexpart.cli import run
from lexpart.corpus import corpus_dir
from lexpart.famfile import load_family

GOLDEN = Path(__file__).parent / "golden"


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def fam(name):
    return str(corpus_dir() / f"{name}.fam")


def test_classify():
    code, out, _ = call("classify", "w+3")
    assert code == 0 and out.startswith("class: 1\n") and "k: 3\n" in out
    code, out, _ = call("classify", "w * w~")
    assert code == 0 and "class: 3\n" in out and "witness: omega_omegastar" in out


def test_classify_matches_golden():
    expr, _, body = (GOLDEN / "classify.txt").read_text().split("### ")[4].partition("\n")
    assert call("classify", expr)[1] == body


def test_beta_xi():
    assert call("beta", "w~ + w^2")[1] == "w^(2) + w\n"
    assert call("xi", "w~ + w^2")[1] == "w^(2)\n"


def test_colour():
    assert call("colour", fam("zeta"), "--colouring", "zeta") == (0, "0\n", "")
    assert call("colour", fam("raw_asc"), "--colouring", "affordable", "--oracle", "parity")[1] == "0\n"
    assert call("colour", fam("dyadic_balanced"), "--colouring", "tausplit")[1] == "0\n"
    assert call("colour", fam("zeta"), "--colouring", "triple")[1] in ("0\n", "1\n")


def test_flip_writes_family(tmp_path):
    out_path = tmp_path / "f.fam"
    code, out, _ = call("flip", fam("zeta"), "--colouring", "zeta", "-o", str(out_path))
    assert code == 0 and out == "before: 0\nafter: 1\n"
    assert call("colour", str(out_path), "--colouring", "zeta")[1] == "1\n"
    code, out, _ = call("flip", fam("zeta"), "--colouring", "zeta", "--target", "0")
    assert out.startswith("before: 0\nafter: 0\n")


def test_flip_round_trips(tmp_path):
    for name, colouring in [("tower", "C"), ("omega_times_2", "mutual"), ("zeta_two_equal_roots", "zeta-cc")]:
        p = tmp_path / f"{name}.fam"
        code, out, _ = call("flip", fam(name), "--colouring", colouring, "-o", str(p))
        assert code == 0
        before, after = out.splitlines()
        assert before.split(": ")[1] != after.split(": ")[1]
        text = p.read_text()
        assert call("canonise", str(p))[0] == 0
        from lexpart.famfile import format_family
        assert format_family(load_family(p)) == text


def test_canonise(tmp_path):
    p = tmp_path / "c.fam"
    assert call("canonise", fam("raw_asc"), "-o", str(p))[0] == 0
    assert call("canonise", str(p))[1] == p.read_text()


def test_diagram():
    assert call("diagram", fam("zeta"))[1] == (GOLDEN / "diagram_zeta.txt").read_text()
    assert call("diagram", fam("zeta"), "--format", "dot")[1].startswith("digraph")


def test_demo():
    code, out, _ = call("demo")
    assert code == 0
    assert out.splitlines()[-1] == "failures: 0"


def test_demo_reports_failures(tmp_path):
    code, out, err = call("demo", "--corpus", str(tmp_path / "missing"))
    assert code == 1 and err.startswith("domain-error:")


@pytest.mark.parametrize("argv,code,prefix", [
    (["classify", "w+("], 2, "parse-error:"),
    (["classify", "3"], 1, "domain-error:"),
    (["beta", "eta"], 1, "domain-error:"),
    (["bogus"], 2, "parse-error:"),
    ([], 2, "parse-error:"),
    (["colour", "nofile.fam", "--colouring", "zeta"], 1, "domain-error:"),
    (["colour", "FAM:omega", "--colouring", "zeta"], 1, "domain-error:"),
    (["colour", "FAM:zeta", "--colouring", "purple"], 2, "parse-error:"),
])
def test_errors(argv, code, prefix):
    argv = [fam(a[4:]) if a.startswith("FAM:") else a for a in argv]
    got, out, err = call(*argv)
    assert got == code
    assert err.startswith(prefix) and err.count("\n") == 1


def test_bad_family_file(tmp_path):
    p = tmp_path / "bad.fam"
    p.write_text("asc(stem={}, sched=sched(start=1)\n")
    assert call("canonise", str(p))[0] == 2
    p.write_text("asc(stem={5}, sched=sched(start=1))\nasc(stem={}, sched=sched(start=1))\n")
    assert call("canonise", str(p))[0] == 1
