"""The bundled corpus of families; ``ORDERTYPE_CORPUS`` points at another directory."""

from __future__ import annotations

import os
from importlib import resources
from pathlib import Path

from .famfile import parse_family

__all__ = ["corpus_dir", "load_corpus", "ENV_VAR"]

ENV_VAR = "ORDERTYPE_CORPUS"


def corpus_dir() -> Path:
    override = os.environ.get(ENV_VAR)
    if override:
        return Path(override)
    return Path(str(resources.files("lexpart") / "corpus"))


def load_corpus(directory=None) -> list[tuple[str, object]]:
    """``(name, family)`` pairs for every ``*.fam`` file, sorted by name."""
    d = Path(directory) if directory is not None else corpus_dir()
    if not d.is_dir():
        raise FileNotFoundError(f"corpus directory {d} does not exist")
    out = []
    for p in sorted(d.glob("*.fam")):
        out.append((p.stem, parse_family(p.read_text(encoding="utf-8"))))
    return out
