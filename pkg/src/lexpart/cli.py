"""Command line front end: ``lexpart VERB ...``.

Exit status is 0 on success, 1 for a domain error (a type or family the
operation is not defined on) and 2 for a parse error.  Errors are reported
on stderr as one line starting with ``domain-error:`` or ``parse-error:``.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .canonise import canonise_family
from .classifier import beta, classify, xi
from .colourings import ORACLES, ColouringError, DyadicCopy, colour_C
from .corpus import load_corpus
from .diagram import render
from .famfile import FamilySyntaxError, format_family, load_family
from .families import FamilyError
from .ordinal import OrdinalSyntaxError
from .ordertype import TypeSyntaxError, normalize, parse_type
from .soundness import FLIP_NAMES, colour_of, flip_matrix, run_flip

__all__ = ["run", "main", "build_parser"]

PARSE_ERRORS = (TypeSyntaxError, OrdinalSyntaxError, FamilySyntaxError)
DOMAIN_ERRORS = (FamilyError, ColouringError, ValueError)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="lexpart", description="Partition relations for lexicographically ordered binary sequences.")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    for verb, text in (("classify", "trichotomy report for an order type"),
                       ("beta", "the ordinal beta of an order type"),
                       ("xi", "the ordinal xi of an order type")):
        s = sub.add_parser(verb, help=text)
        s.add_argument("expr", help='order type, e.g. "w+3" or "w * w~"')

    s = sub.add_parser("colour", help="colour of a family")
    s.add_argument("file")
    s.add_argument("--colouring", required=True, choices=FLIP_NAMES)
    s.add_argument("--oracle", default="parity", choices=sorted(ORACLES))

    s = sub.add_parser("flip", help="a subcopy of the same type with the other colour")
    s.add_argument("file")
    s.add_argument("--colouring", required=True, choices=FLIP_NAMES)
    s.add_argument("--target", type=int, choices=(0, 1))
    s.add_argument("--oracle", default="parity", choices=sorted(ORACLES))
    s.add_argument("-o", "--output", help="write the family here instead of stdout")

    s = sub.add_parser("canonise", help="canonise every condensation class")
    s.add_argument("file")
    s.add_argument("-o", "--output", help="write the family here instead of stdout")

    s = sub.add_parser("demo", help="flip every colouring over the corpus")
    s.add_argument("--corpus", help="corpus directory (default: bundled, or $ORDERTYPE_CORPUS)")

    s = sub.add_parser("diagram", help="splitting-type pictures of a family")
    s.add_argument("file")
    s.add_argument("--format", default="ascii", choices=("ascii", "dot"))
    return p


def _form(text: str):
    rep = normalize(parse_type(text))
    if rep.flagged:
        raise ValueError(f"{text!r} embeds eta, w.w* or w*.w and has no finite sum form")
    return rep.form


def _emit(text: str, path: Optional[str], out):
    if path:
        with open(path, "w", encoding="utf-8") as f:
            f.write(text)
    else:
        out.write(text)


def _flip(args, out):
    A = load_family(args.file)
    B, F, c0, c1 = run_flip(args.colouring, A, args.target, ORACLES[args.oracle])
    out.write(f"before: {c0}\nafter: {c1}\n")
    if args.colouring == "triple":
        out.write("triple: " + ", ".join(str(p) for p in F) + "\n")
    else:
        _emit(format_family(F), args.output, out)


def _demo(args, out) -> int:
    corpus = load_corpus(args.corpus)
    width = max(len(n) for n, _ in corpus)
    out.write("family".ljust(width) + "  " + "  ".join(c.ljust(10) for c in FLIP_NAMES) + "  canonise\n")
    failed = 0
    for (name, A), (_, results) in zip(corpus, flip_matrix(corpus)):
        canon = "-"
        if not isinstance(A, DyadicCopy):
            ok = colour_C(canonise_family(A)) == 0
            canon = "pass" if ok else "FAIL"
            failed += not ok
        failed += sum(r.mark == "FAIL" for r in results)
        out.write(name.ljust(width) + "  " + "  ".join(r.mark.ljust(10) for r in results) + f"  {canon}\n")
    out.write(f"failures: {failed}\n")
    return 0 if failed == 0 else 1


def _dispatch(args, out) -> int:
    v = args.verb
    if v == "classify":
        out.write(classify(parse_type(args.expr)).text())
    elif v in ("beta", "xi"):
        out.write(f"{(beta if v == 'beta' else xi)(_form(args.expr))}\n")
    elif v == "colour":
        out.write(f"{colour_of(args.colouring, load_family(args.file), ORACLES[args.oracle])}\n")
    elif v == "flip":
        _flip(args, out)
    elif v == "canonise":
        A = load_family(args.file)
        if isinstance(A, DyadicCopy):
            raise ValueError("dyadic copies have no condensation classes to canonise")
        _emit(format_family(canonise_family(A.validate())), args.output, out)
    elif v == "demo":
        return _demo(args, out)
    elif v == "diagram":
        A = load_family(args.file)
        if isinstance(A, DyadicCopy):
            raise ValueError("dyadic copies are not drawn")
        out.write(render(A.validate(), args.format))
    return 0


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return _dispatch(args, out)
    except _UsageError as e:
        err.write(f"parse-error: {e}\n")
        return 2
    except PARSE_ERRORS as e:
        err.write(f"parse-error: {e}\n")
        return 2
    except OSError as e:
        err.write(f"domain-error: {e}\n")
        return 1
    except DOMAIN_ERRORS as e:
        err.write(f"domain-error: {e}\n")
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
